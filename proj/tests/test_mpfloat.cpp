#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zident/constants.hpp"
#include "zident/errors.hpp"
#include "zident/real.hpp"

using namespace zident;

namespace {

// |x - y| < 10^(-tol_digits), computed away from either operand's precision.
bool close(const Real& x, const Real& y, int tol_digits) {
    Real d = at_digits(x, 200) - at_digits(y, 200);
    return abs(d) < pow10(-tol_digits, 50);
}

// Machin's formula with arctan expanded as an exact rational series:
// pi = 16*atan(1/5) - 4*atan(1/239).  Entirely independent of MPFR's
// internal pi.
Rat machin_pi(int digits) {
    auto atan_inv = [&](long q) {
        Rat sum(0);
        Rat qsq = Rat(1) / Rat(Int(q) * Int(q));
        Rat p = Rat(1) / Rat(q);
        Int bound = int_pow(Int(10), static_cast<unsigned>(digits + 5));
        for (long k = 0;; ++k) {
            Rat term = p / Rat(2 * k + 1);
            if (rat_den(term) > bound * (rat_num(term) < 0 ? -rat_num(term) : rat_num(term)) &&
                rat_num(term) != 0) {
                // |term| < 10^-(digits+5); remainder of the alternating
                // series is below the first omitted term
                break;
            }
            sum += (k % 2 == 0) ? term : -term;
            p *= qsq;
        }
        return sum;
    };
    return Rat(16) * atan_inv(5) - Rat(4) * atan_inv(239);
}

} // namespace

TEST_CASE("serialization round trip") {
    for (int digits : {12, 17, 40, 60, 150}) {
        Real x = to_real(Rat(1, 3), digits);
        std::string s = real_serialize(x);
        Real y = real_parse(s);
        CHECK(static_cast<int>(y.precision()) >= digits);
        CHECK(x == y);
        CHECK(s.substr(s.rfind('@') + 1) == std::to_string(digits));
    }
    Real z = to_real(0, 25);
    CHECK(real_parse(real_serialize(z)) == 0);
    Real neg = to_real(Rat(-355, 113), 30);
    CHECK(real_parse(real_serialize(neg)) == neg);
}

TEST_CASE("serialization errors") {
    CHECK_THROWS_AS(real_parse("1.5"), ParseError);
    CHECK_THROWS_AS(real_parse("1.5@"), ParseError);
    CHECK_THROWS_AS(real_parse("1.5@0"), ParseError);
    CHECK_THROWS_AS(real_parse("1.5@abc"), ParseError);
    CHECK_THROWS_AS(real_parse("@20"), ParseError);
    CHECK_THROWS_AS(real_parse("zz@20"), ParseError);
    Real inf = make_real(20);
    mpfr_set_inf(inf.backend().data(), 1);
    CHECK_THROWS_AS(real_serialize(inf), DomainError);
}

TEST_CASE("precision control") {
    Real x = pi_digits(80);
    CHECK(static_cast<int>(x.precision()) >= 80);
    Real y = at_digits(x, 25);
    CHECK(static_cast<int>(y.precision()) < 40);
    CHECK(close(x, y, 24));

    // plain assignment copies the source precision, which is why the
    // conversion helpers exist
    Real z = make_real(10);
    z = x;
    CHECK(static_cast<int>(z.precision()) >= 80);

    CHECK_THROWS_AS(PrecisionContext(5), std::invalid_argument);
    CHECK_THROWS_AS(PrecisionContext(50, -1), std::invalid_argument);
    CHECK(PrecisionContext(50).working() == 70);
    CHECK(PrecisionContext(50, 0).working() == 50);
}

TEST_CASE("pi against a pinned value and Machin's formula") {
    PrecisionContext ctx(40);
    Real p = const_pi(ctx);
    Real pinned = real_parse("3.141592653589793238462643383279502884197e0@40");
    CHECK(close(p, pinned, 38));

    Real p60 = const_pi(PrecisionContext(60));
    Real m = to_real(machin_pi(60), 80);
    CHECK(close(p60, m, 58));
}

TEST_CASE("integer square roots") {
    PrecisionContext ctx(50);
    CHECK(const_sqrt(Int(4), ctx) == 2);
    CHECK(const_sqrt(Int(0), ctx) == 0);
    CHECK(const_sqrt(Int(144), ctx) == 12);
    Real r3 = const_sqrt(Int(3), ctx);
    CHECK(close(r3 * r3, to_real(3, 60), 48));
    Real r2 = const_sqrt(Int(2), ctx);
    CHECK(close(r2 * r2, to_real(2, 60), 48));
    CHECK_THROWS_AS(const_sqrt(Int(-1), ctx), DomainError);
}

TEST_CASE("zeta at even integers matches pi powers") {
    PrecisionContext ctx(60);
    Real p = const_pi(PrecisionContext(80));
    CHECK(close(zeta(2, ctx), p * p / to_real(6, 80), 58));
    Real p4 = p * p * p * p;
    CHECK(close(zeta(4, ctx), p4 / to_real(90, 80), 58));
    CHECK(close(zeta(6, ctx), p4 * p * p / to_real(945, 80), 58));
}

TEST_CASE("zeta against direct summation") {
    // sum_{k<N} k^-s + N^-s/2 + N^(1-s)/(s-1) is accurate to about
    // s/12 * N^-(s+1); entirely separate from the tail expansion the
    // implementation uses
    const long N = 10000;
    for (int s : {3, 5, 7}) {
        Real sum = make_real(60);
        for (long k = 1; k < N; ++k) {
            Real t = to_real(k, 60);
            mpfr_pow_si(t.backend().data(), t.backend().data(), -s, MPFR_RNDN);
            sum += t;
        }
        Real nn = to_real(N, 60);
        Real ninv = make_real(60);
        mpfr_pow_si(ninv.backend().data(), nn.backend().data(), -s, MPFR_RNDN);
        sum += ninv / 2 + ninv * nn / to_real(s - 1, 60);
        // oracle error ~ s/12 * N^-(s+1), so trust 4(s+1) - 3 digits
        CHECK(close(zeta(s, PrecisionContext(40)), sum, 4 * (s + 1) - 3));
    }
}

TEST_CASE("zeta rejects s < 2") {
    CHECK_THROWS_AS(zeta(1, PrecisionContext(30)), DomainError);
    CHECK_THROWS_AS(zeta(0, PrecisionContext(30)), DomainError);
    CHECK_THROWS_AS(zeta(-3, PrecisionContext(30)), DomainError);
}

TEST_CASE("hurwitz zeta special points") {
    PrecisionContext ctx(50);
    CHECK(close(hurwitz_zeta(5, Rat(1), ctx), zeta(5, ctx), 48));

    // sum over half-integers: zeta(2,1/2) = pi^2/2
    Real p = const_pi(PrecisionContext(70));
    CHECK(close(hurwitz_zeta(2, Rat(1, 2), ctx), p * p / 2, 48));

    // multiplication theorem: sum_{j=1..q} zeta(s, j/q) = q^s zeta(s)
    Real lhs = make_real(70);
    for (int j = 1; j <= 4; ++j)
        lhs += at_digits(hurwitz_zeta(2, Rat(j, 4), ctx), 70);
    CHECK(close(lhs, to_real(16, 70) * zeta(2, ctx), 47));
}

TEST_CASE("hurwitz zeta against direct summation") {
    // zeta(4,1/3) with a midpoint-rule tail: sum_{n<N} (n+1/3)^-4
    // + (N-1/6)^-3/3, accurate to about N^-5/6
    const long N = 20000;
    Real sum = make_real(60);
    for (long n = 0; n < N; ++n) {
        Real t = to_real(Rat(3, 3 * n + 1), 60);
        mpfr_pow_si(t.backend().data(), t.backend().data(), 4, MPFR_RNDN);
        sum += t;
    }
    Real edge = to_real(Rat(6, 6 * N - 1), 60); // 1/(N - 1/6)
    sum += edge * edge * edge / 3;
    CHECK(close(hurwitz_zeta(4, Rat(1, 3), PrecisionContext(40)), sum, 20));
}

TEST_CASE("hurwitz zeta rejects bad arguments") {
    PrecisionContext ctx(30);
    CHECK_THROWS_AS(hurwitz_zeta(1, Rat(1, 3), ctx), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(4, Rat(0), ctx), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(4, Rat(-1, 3), ctx), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(4, Rat(4, 3), ctx), DomainError);
}

TEST_CASE("pow10 helper") {
    CHECK(pow10(0, 20) == 1);
    CHECK(pow10(3, 20) == 1000);
    CHECK(pow10(-2, 20) * 100 == 1);
    CHECK(pow10(-40, 20) < pow10(-39, 20));
}
