#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

#include "zident/rational.hpp"

namespace zident {

/// Variable-precision MPFR float.  Precision travels with each value; plain
/// assignment copies the source precision, so conversions that must land at a
/// specific precision go through at_digits/to_real below.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Requested accuracy plus guard digits carried through intermediate work.
struct PrecisionContext {
    int target_digits;
    int guard_digits;

    explicit PrecisionContext(int target, int guard = 20)
        : target_digits(target), guard_digits(guard) {
        if (target < 10)
            throw std::invalid_argument("PrecisionContext: target_digits < 10");
        if (guard < 0)
            throw std::invalid_argument("PrecisionContext: negative guard_digits");
    }

    int working() const { return target_digits + guard_digits; }
};

inline Real make_real(int digits) {
    return Real(0, static_cast<unsigned>(digits < 2 ? 2 : digits));
}

/// Re-round x to exactly `digits` decimal digits of precision.
inline Real at_digits(const Real& x, int digits) {
    Real r = make_real(digits);
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rat& q, int digits) {
    Real r = make_real(digits);
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Int& z, int digits) {
    Real r = make_real(digits);
    mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(long v, int digits) {
    Real r = make_real(digits);
    mpfr_set_si(r.backend().data(), v, MPFR_RNDN);
    return r;
}

/// 10^e at the given precision.
inline Real pow10(long e, int digits) {
    Real r = to_real(10, digits);
    mpfr_pow_si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

/// "<mantissa>e<exp>@<digits>", mantissa printed to the value's full
/// precision, e.g. "1.0083492773819228e0@17".
std::string real_serialize(const Real& x);

/// Inverse of real_serialize.
Real real_parse(std::string_view s);

} // namespace zident
