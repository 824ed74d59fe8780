#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "zident/chpl.hpp"
#include "zident/constants.hpp"
#include "zident/gl.hpp"
#include "zident/series.hpp"

using namespace zident;

namespace {

Word W(std::string_view s) { return word_from_string(s); }

bool close(const Real& x, const Real& y, int tol_digits) {
    Real d = at_digits(x, 200) - at_digits(y, 200);
    return abs(d) < pow10(-tol_digits, 50);
}

// tanh-sinh quadrature over [0, 1]; handles endpoint singularities in the
// derivatives, which is all the integrands here have.
Real quad01(const std::function<Real(const Real&)>& f, int digits) {
    const int Wk = digits + 12;
    const Real pi_half = pi_digits(Wk) / 2;
    const Real h = to_real(Rat(1, 64), Wk);
    Real cutoff = pow10(-(digits + 10), 20);

    Real sum = make_real(Wk);
    for (int j = -500; j <= 500; ++j) {
        Real t = to_real(j, Wk) * h;
        Real u = make_real(Wk);
        mpfr_sinh(u.backend().data(), t.backend().data(), MPFR_RNDN);
        u *= pi_half;
        // x = (1 + tanh u)/2 without cancellation near the endpoints
        Real e = make_real(Wk);
        mpfr_exp(e.backend().data(), (u * (-2)).backend().data(), MPFR_RNDN);
        Real x = 1 / (1 + e);
        Real cu = make_real(Wk), ct = make_real(Wk);
        mpfr_cosh(cu.backend().data(), u.backend().data(), MPFR_RNDN);
        mpfr_cosh(ct.backend().data(), t.backend().data(), MPFR_RNDN);
        Real wgt = pi_half * ct / (cu * cu);
        if (wgt < cutoff)
            continue;
        sum += wgt * f(x);
    }
    return at_digits(sum * h / 2, digits);
}

// antiderivative of sqrt(t(4-t)) vanishing at 0
Real arc_area(const Real& t, int digits) {
    Real u = at_digits(t, digits) - 2;
    Real s = (4 - u * u);
    mpfr_sqrt(s.backend().data(), s.backend().data(), MPFR_RNDN);
    Real a = u / 2;
    mpfr_asin(a.backend().data(), a.backend().data(), MPFR_RNDN);
    return u * s / 2 + 2 * a + pi_digits(digits);
}

GlCombo weight7_combo() {
    auto c = [](long n, long d) { return Sqrt3Rat{Rat(n, d), Rat(0)}; };
    auto r3 = [](long n, long d) { return Sqrt3Rat{Rat(0), Rat(n, d)}; };
    GlCombo g;
    g.terms = {{c(4801781, 73728), W("a,a")},
               {c(451993, 6144), W("0,a,a")},
               {c(10193, 512), W("0,0,a,a")},
               {r3(363, 128), W("a,0,a,a")},
               {c(1875, 128), W("0,0,0,a,a")},
               {c(363, 64), W("a,a,0,a,a")},
               {c(37, 8), W("0,0,0,0,a,a")},
               {r3(33, 32), W("a,0,0,0,a,a")},
               {c(37, 4), W("0,0,0,0,0,a,a")},
               {c(33, 16), W("a,a,0,0,0,a,a")},
               {r3(18937121, 368640), W("a")}};
    g.constant = c(-895605490019, 5573836800);
    return g;
}

} // namespace

TEST_CASE("square-root word validation") {
    CHECK_NOTHROW(validate_g_word(W("0,0,a,a")));
    CHECK_THROWS_AS(validate_g_word(W("a,0")), DomainError);  // diverges at 0
    CHECK_THROWS_AS(validate_g_word(W("0,0")), DomainError);
    CHECK_THROWS_AS(validate_g_word(W("1,l")), DomainError);  // wrong alphabet
    Word deep;
    deep.letters.assign(13, Letter::A);
    CHECK_THROWS_AS(validate_g_word(deep), DomainError);
}

TEST_CASE("single-letter integral has a closed form") {
    // int_0^1 sqrt(t(4-t)) dt = 2 pi/3 - sqrt(3)/2
    PrecisionContext ctx(50);
    Real p = pi_digits(70);
    Real expect = 2 * p / 3 - sqrt_digits(Int(3), 70) / 2;
    auto got = gl_eval(W("a"), ctx);
    CHECK(close(got.value, expect, 48));
    CHECK(got.tail < pow10(-60, 20));
}

TEST_CASE("empty word evaluates to one") {
    CHECK(gl_eval(Word{}, PrecisionContext(30)).value == 1);
}

TEST_CASE("double letter matches the squared single letter") {
    PrecisionContext ctx(45);
    Real a1 = gl_eval_digits(W("a"), 60);
    Real a2 = gl_eval(W("a,a"), ctx).value;
    CHECK(close(a2, a1 * a1 / 2, 43));
}

TEST_CASE("quadrature cross-check") {
    const int d = 30;
    Real byq = quad01(
        [&](const Real& t) {
            Real s = t * (4 - t);
            mpfr_sqrt(s.backend().data(), s.backend().data(), MPFR_RNDN);
            return s * arc_area(t, d + 12);
        },
        d);
    CHECK(close(gl_eval_digits(W("a,a"), 40), byq, 27));

    Real byq2 = quad01([&](const Real& t) { return arc_area(t, d + 12) / t; }, d);
    CHECK(close(gl_eval_digits(W("0,a"), 40), byq2, 27));
}

TEST_CASE("shuffle identity holds numerically") {
    struct Case {
        const char* u;
        const char* v;
    };
    for (auto [us, vs] : {Case{"a", "0,a"}, Case{"a,a", "0,a"}, Case{"a", "a,a"}}) {
        Word u = W(us), v = W(vs);
        Real lhs = gl_eval_digits(u, 50) * gl_eval_digits(v, 50);
        Real rhs = make_real(50);
        for (const auto& [w, c] : shuffle(u, v))
            rhs += to_real(c, 50) * gl_eval_digits(w, 50);
        CHECK(close(lhs, rhs, 40));
    }
}

TEST_CASE("sqrt3 coefficient evaluation") {
    Real v = sqrt3rat_eval(Sqrt3Rat{Rat(1, 2), Rat(-1, 3)}, 40);
    Real expect = to_real(Rat(1, 2), 40) - sqrt_digits(Int(3), 40) / 3;
    CHECK(close(v, expect, 38));
}

TEST_CASE("weight-7 combination reproduces the central binomial sum") {
    SeriesSpec spec;
    spec.terms = {{Rat(33), 5, 2}, {Rat(4), 0, 7}};
    Real series_val = eval_series(spec, PrecisionContext(35)).value;
    Real combo_val = gl_combo_eval(weight7_combo(), PrecisionContext(35));
    CHECK(close(series_val, combo_val, 33));
}

TEST_CASE("cyclotomic convergence classification") {
    CHECK(convergent_at_one(W("0,0,1")));
    CHECK(convergent_at_one(W("l,m")));
    CHECK(convergent_at_one(W("m,1")));
    CHECK(convergent_at_one(Word{}));
    CHECK(convergent_at_one(W("0,0")));
    CHECK(!convergent_at_one(W("1")));
    CHECK(!convergent_at_one(W("1,0,1")));
    CHECK_THROWS_AS(convergent_at_one(W("a,a")), DomainError);
}

TEST_CASE("cyclotomic closed forms") {
    CHECK(expr_equal(*chpl_closed_form(Word{}), expr_literal(Rat(1))));
    CHECK(expr_equal(*chpl_closed_form(W("0,0")), expr_literal(Rat(0))));
    CHECK(expr_equal(*chpl_closed_form(W("0,0,1")), expr_neg(expr_zeta(3))));
    CHECK(expr_equal(*chpl_closed_form(W("0,0,0,0,0,0,1")), expr_neg(expr_zeta(7))));
    CHECK(!chpl_closed_form(W("0,1,1")).has_value());
    CHECK(!chpl_closed_form(W("m")).has_value());
    CHECK(!chpl_closed_form(W("l,m")).has_value());

    // l^n at one is (pi/(3 sqrt 3))^n / n!
    PrecisionContext ctx(40);
    Real base = const_pi(PrecisionContext(60)) / (3 * sqrt_digits(Int(3), 60));
    Real expect = base;
    Rat fact(1);
    for (int n = 1; n <= 4; ++n) {
        Word w;
        w.letters.assign(n, Letter::Lam);
        auto cf = chpl_closed_form(w);
        REQUIRE(cf.has_value());
        CHECK(close(eval_const_expr(*cf, ctx), expect / to_real(fact, 60), 38));
        expect *= base;
        fact *= Rat(n + 1);
    }
}

TEST_CASE("cyclotomic series against log and arctan oracles") {
    const int d = 40;
    PrecisionContext ctx(d);

    // H(1; x) = log(1 - x)
    for (Rat x : {Rat(1, 2), Rat(1, 3)}) {
        Real lx = to_real(Rat(1) - x, d + 20);
        mpfr_log(lx.backend().data(), lx.backend().data(), MPFR_RNDN);
        CHECK(close(chpl_eval_series(W("1"), x, ctx), lx, d - 2));
    }

    // H(0,1; 1/2) = -Li_2(1/2) = log(2)^2/2 - pi^2/12
    Real l2 = to_real(2, d + 20);
    mpfr_log(l2.backend().data(), l2.backend().data(), MPFR_RNDN);
    Real p = pi_digits(d + 20);
    CHECK(close(chpl_eval_series(W("0,1"), Rat(1, 2), ctx), l2 * l2 / 2 - p * p / 12, d - 2));

    // H(l; x) = (2/sqrt3)(atan((2x+1)/sqrt3) - pi/6)
    Real r3 = sqrt_digits(Int(3), d + 20);
    auto lam = [&](const Rat& x) {
        Real a = to_real(Rat(2) * x + 1, d + 20) / r3;
        mpfr_atan(a.backend().data(), a.backend().data(), MPFR_RNDN);
        return 2 / r3 * (a - p / 6);
    };
    CHECK(close(chpl_eval_series(W("l"), Rat(1, 2), ctx), lam(Rat(1, 2)), d - 2));
    CHECK(close(chpl_eval_series(W("l"), Rat(1, 5), ctx), lam(Rat(1, 5)), d - 2));

    // H(m; 1/2) = log(7/4)/2 - (1/sqrt3)(atan(2/sqrt3) - pi/6)
    Real l74 = to_real(Rat(7, 4), d + 20);
    mpfr_log(l74.backend().data(), l74.backend().data(), MPFR_RNDN);
    Real a = to_real(2, d + 20) / r3;
    mpfr_atan(a.backend().data(), a.backend().data(), MPFR_RNDN);
    CHECK(close(chpl_eval_series(W("m"), Rat(1, 2), ctx), l74 / 2 - (a - p / 6) / r3, d - 2));

    // all-zero words are powers of the log
    Real lx = to_real(Rat(1, 3), d + 20);
    mpfr_log(lx.backend().data(), lx.backend().data(), MPFR_RNDN);
    CHECK(close(chpl_eval_series(W("0,0"), Rat(1, 3), ctx), lx * lx / 2, d - 2));
}

TEST_CASE("repeated-letter words factor through powers") {
    PrecisionContext ctx(40);
    Real h1 = chpl_eval_digits(W("l"), Rat(1, 2), 60);
    CHECK(close(chpl_eval_series(W("l,l"), Rat(1, 2), ctx), h1 * h1 / 2, 38));
    CHECK(close(chpl_eval_series(W("l,l,l"), Rat(1, 2), ctx), h1 * h1 * h1 / 6, 38));
}

TEST_CASE("cyclotomic shuffle identity holds numerically") {
    struct Case {
        const char* u;
        const char* v;
    };
    const Rat x(1, 2);
    for (auto [us, vs] : {Case{"1", "l"}, Case{"0,1", "1"}, Case{"l", "m"}}) {
        Word u = W(us), v = W(vs);
        Real lhs = chpl_eval_digits(u, x, 50) * chpl_eval_digits(v, x, 50);
        Real rhs = make_real(50);
        for (const auto& [w, c] : shuffle(u, v))
            rhs += to_real(c, 50) * chpl_eval_digits(w, x, 50);
        CHECK(close(lhs, rhs, 42));
    }
}

TEST_CASE("cyclotomic evaluation domain errors") {
    PrecisionContext ctx(30);
    CHECK_THROWS_AS(chpl_eval_series(W("1"), Rat(0), ctx), DomainError);
    CHECK_THROWS_AS(chpl_eval_series(W("1"), Rat(-1, 2), ctx), DomainError);
    CHECK_THROWS_AS(chpl_eval_series(W("1"), Rat(2, 3), ctx), DomainError);
    CHECK_THROWS_AS(chpl_eval_series(W("1,0"), Rat(1, 2), ctx), DomainError);
    CHECK_THROWS_AS(chpl_eval_series(W("a"), Rat(1, 2), ctx), DomainError);
    Word deep;
    deep.letters.assign(13, Letter::Lam);
    CHECK_THROWS_AS(chpl_eval_series(deep, Rat(1, 2), ctx), DomainError);
}
