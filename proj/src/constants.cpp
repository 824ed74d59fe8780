#include "zident/constants.hpp"

#include <charconv>
#include <cstdlib>

#include "zident/bernoulli.hpp"
#include "zident/errors.hpp"

namespace zident {

std::string real_serialize(const Real& x) {
    if (!mpfr_number_p(x.backend().data()))
        throw DomainError("cannot serialize non-finite value");
    int digits = static_cast<int>(x.precision());
    std::string body = x.str(digits, std::ios_base::scientific);
    std::size_t epos = body.find('e');
    if (epos == std::string::npos) {
        body += "e0";
        epos = body.size() - 2;
    }
    long ev = std::strtol(body.c_str() + epos + 1, nullptr, 10);
    return body.substr(0, epos) + "e" + std::to_string(ev) + "@" + std::to_string(digits);
}

Real real_parse(std::string_view s) {
    std::size_t at = s.rfind('@');
    if (at == std::string_view::npos)
        throw ParseError("missing '@digits' suffix", s.size());
    int digits = 0;
    auto [p, ec] = std::from_chars(s.data() + at + 1, s.data() + s.size(), digits);
    if (ec != std::errc{} || p != s.data() + s.size() || digits < 1)
        throw ParseError("bad precision suffix", at + 1);
    Real r = make_real(digits);
    std::string mant(s.substr(0, at));
    if (mant.empty())
        throw ParseError("empty mantissa", 0);
    if (mpfr_set_str(r.backend().data(), mant.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("malformed mantissa", 0);
    return r;
}

Real pi_digits(int digits) {
    Real r = make_real(digits);
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real sqrt_digits(const Int& n, int digits) {
    if (n < 0)
        throw DomainError("const_sqrt: negative argument");
    Real r = to_real(n, digits);
    mpfr_sqrt(r.backend().data(), r.backend().data(), MPFR_RNDN);
    return r;
}

Real hurwitz_digits(int s, const Rat& a, int digits) {
    if (s < 2)
        throw DomainError("hurwitz_zeta: require integer s >= 2");
    if (!(a > 0) || a > 1)
        throw DomainError("hurwitz_zeta: require 0 < a <= 1");
    const int W = digits + 10;
    const Int p = rat_num(a), q = rat_den(a);

    long N = W / 2 + 20;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 6)
            throw PrecisionError("hurwitz_zeta: Euler-Maclaurin tail failed to converge");

        Real sum = make_real(W);
        for (long n = 0; n < N; ++n) {
            Rat base = Rat(Int(n) * q + p) / Rat(q); // n + a
            Real t = to_real(Rat(1) / base, W);
            mpfr_pow_si(t.backend().data(), t.backend().data(), s, MPFR_RNDN);
            sum += t;
        }

        Real base = to_real(Rat(Int(N) * q + p) / Rat(q), W);
        Real binv = make_real(W);
        mpfr_pow_si(binv.backend().data(), base.backend().data(), -s, MPFR_RNDN);
        // (N+a)^(1-s)/(s-1) + (N+a)^(-s)/2
        Real total = sum + binv * base / to_real(s - 1, W) + binv / to_real(2, W);

        Real eps = pow10(-W, W);
        Real bpow = binv * base; // (N+a)^(-s-2j+1) at j = 0
        Real base2 = base * base;
        Int rising(1);
        Int fact(1);
        bool converged = false;
        Real prev_mag = make_real(W);
        for (long j = 1; j <= 8L * W; ++j) {
            // (s)_{2j-1} and (2j)!
            if (j == 1) {
                rising = Int(s);
            } else {
                rising *= Int(s + 2 * j - 3);
                rising *= Int(s + 2 * j - 2);
            }
            fact *= Int(2 * j - 1);
            fact *= Int(2 * j);
            bpow /= base2;
            Rat coeff = bernoulli(static_cast<int>(2 * j)) * Rat(rising) / Rat(fact);
            Real term = to_real(coeff, W) * bpow;
            Real mag = abs(term);
            total += term;
            if (mag < eps * (abs(total) + to_real(1, W))) {
                converged = true;
                break;
            }
            if (j > 2 && mag > prev_mag)
                break; // asymptotic terms started growing; need larger N
            prev_mag = mag;
        }
        if (converged)
            return at_digits(total, digits);
        N *= 2;
    }
}

Real zeta_digits(int s, int digits) {
    if (s < 2)
        throw DomainError("zeta: require integer s >= 2");
    return hurwitz_digits(s, Rat(1), digits);
}

Real const_pi(const PrecisionContext& ctx) {
    return at_digits(pi_digits(ctx.working()), ctx.target_digits);
}

Real const_sqrt(const Int& n, const PrecisionContext& ctx) {
    return at_digits(sqrt_digits(n, ctx.working()), ctx.target_digits);
}

Real zeta(int s, const PrecisionContext& ctx) {
    return at_digits(zeta_digits(s, ctx.working()), ctx.target_digits);
}

Real hurwitz_zeta(int s, const Rat& a, const PrecisionContext& ctx) {
    return at_digits(hurwitz_digits(s, a, ctx.working()), ctx.target_digits);
}

} // namespace zident
