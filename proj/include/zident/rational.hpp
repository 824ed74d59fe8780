#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "zident/errors.hpp"

namespace zident {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

inline Int rat_num(const Rat& r) { return Int(mp::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(mp::denominator(r)); }

/// "num/den" with the denominator omitted when it is 1.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parses "num" or "num/den"; reduces to lowest terms, denominator > 0.
inline Rat rat_from_string(std::string_view s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [&](std::string_view part, std::size_t base) {
        if (part.empty())
            throw ParseError("malformed rational literal", base);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size())
            throw ParseError("malformed rational literal", base);
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("invalid character in rational literal", base + i);
    };
    check_int(s.substr(0, slash), 0);
    if (slash != std::string_view::npos)
        check_int(s.substr(slash + 1), slash + 1);
    Rat r;
    try {
        r = Rat(std::string(s));
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal");
    }
    if (slash != std::string_view::npos && rat_den(r) == 0)
        throw DomainError("rational with zero denominator");
    mpq_canonicalize(r.backend().data());
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc(1), b = base;
    for (; e; e >>= 1) {
        if (e & 1)
            acc *= b;
        if (e > 1)
            b *= b;
    }
    return acc;
}

inline Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

} // namespace zident
