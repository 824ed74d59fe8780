#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zident/binomial.hpp"
#include "zident/holonomic.hpp"

using namespace zident;

namespace {

Poly pw(const Poly& p, int e) {
    Poly r(1);
    for (int i = 0; i < e; ++i)
        r *= p;
    return r;
}

// x + c
Poly xp(long c) { return Poly::variable() + Poly(c); }

// order-1 annihilator of a geometric sequence r^k: r*f(k) - f(k+1) = 0
Recurrence geometric_rec(const Rat& r) {
    Recurrence rec;
    rec.coeffs = {Poly(r), Poly(Rat(-1))};
    return rec;
}

// f(k) = 4 / ((k+1)^7 C(2k+2, k+1)), the tail summand with the k >= 1
// start folded away
Rat tail_inv7(long k) {
    Rat den = Rat(int_pow(Int(k + 1), 7)) * Rat(central_binomial(k + 1));
    return Rat(4) / den;
}

// two-term cross-multiplied proportionality: a and b agree up to a Q(n) scalar
bool proportional(const Recurrence& a, const Recurrence& b) {
    if (a.coeffs.size() != b.coeffs.size())
        return false;
    for (std::size_t i = 0; i + 1 < a.coeffs.size(); ++i)
        if (!(a.coeffs[i] * b.coeffs[i + 1] == b.coeffs[i] * a.coeffs[i + 1]))
            return false;
    return true;
}

} // namespace

TEST_CASE("validation") {
    Recurrence r;
    CHECK_THROWS_AS(r.validate(), DomainError);
    r.coeffs = {Poly(1), Poly()};
    CHECK_THROWS_AS(r.validate(), DomainError);
    r.coeffs = {Poly(1), Poly(2)};
    r.offset = -1;
    CHECK_THROWS_AS(r.validate(), DomainError);
    r.offset = 0;
    CHECK_NOTHROW(r.validate());

    DiffOp op;
    op.coeffs = {Poly(1)};
    CHECK_THROWS_AS(op.validate(), DomainError);
    op.coeffs = {Poly(1), Poly::variable()};
    CHECK_NOTHROW(op.validate());
}

TEST_CASE("term sources") {
    auto h1 = ts_harmonic(1);
    CHECK(h1(0) == 0);
    CHECK(h1(1) == 1);
    CHECK(h1(2) == Rat(3, 2));
    CHECK(h1(3) == Rat(11, 6));
    auto h2 = ts_harmonic(2);
    CHECK(h2(3) == Rat(49, 36));
    CHECK_THROWS_AS(ts_harmonic(0), DomainError);
    CHECK_THROWS_AS(h1(-1), DomainError);

    auto g = ts_geometric(Rat(2, 3));
    CHECK(g(0) == 1);
    CHECK(g(3) == Rat(8, 27));

    CHECK(ts_sum(h1, g)(2) == Rat(3, 2) + Rat(4, 9));
    CHECK(ts_product(h1, g)(2) == Rat(3, 2) * Rat(4, 9));
    CHECK(ts_shift(h1, 2)(1) == h1(3));
    CHECK(ts_constant(Rat(7))(123) == 7);
}

TEST_CASE("harmonic recurrence annihilates harmonic numbers") {
    for (int a : {1, 2, 5}) {
        auto rep = rec_check(harmonic_recurrence(a), ts_harmonic(a), 80);
        CHECK(rep.holds);
        CHECK(rep.checked_to == 80);
        CHECK(!rep.first_failure.has_value());
    }
    CHECK_THROWS_AS(harmonic_recurrence(0), DomainError);
}

TEST_CASE("rec_check reports the first failing index") {
    auto rep = rec_check(geometric_rec(Rat(2)), ts_geometric(Rat(3)), 50);
    CHECK(!rep.holds);
    CHECK(rep.first_failure == 0);

    Recurrence shifted = geometric_rec(Rat(2));
    shifted.offset = 5;
    auto rep2 = rec_check(shifted, ts_geometric(Rat(3)), 50);
    CHECK(rep2.first_failure == 5);

    // below the offset there is nothing to check
    auto rep3 = rec_check(shifted, ts_geometric(Rat(3)), 3);
    CHECK(rep3.holds);
}

TEST_CASE("closure_add combines annihilators") {
    auto rec = closure_add(geometric_rec(Rat(2)), geometric_rec(Rat(3)));
    CHECK(rec.order() <= 2);
    auto f = ts_sum(ts_geometric(Rat(2)), ts_geometric(Rat(3)));
    CHECK(rec_check(rec, f, 60).holds);

    auto rec2 = closure_add(harmonic_recurrence(1), geometric_rec(Rat(1, 2)));
    CHECK(rec2.order() <= 3);
    auto g = ts_sum(ts_harmonic(1), ts_geometric(Rat(1, 2)));
    CHECK(rec_check(rec2, g, 60).holds);
}

TEST_CASE("closure_mul combines annihilators") {
    // product of two geometrics collapses to a single geometric
    auto rec = closure_mul(geometric_rec(Rat(2)), geometric_rec(Rat(3)));
    CHECK(rec.order() == 1);
    CHECK(rec_check(rec, ts_geometric(Rat(6)), 60).holds);

    auto rec2 = closure_mul(harmonic_recurrence(1), geometric_rec(Rat(2)));
    CHECK(rec2.order() <= 2);
    auto f = ts_product(ts_harmonic(1), ts_geometric(Rat(2)));
    CHECK(rec_check(rec2, f, 60).holds);
}

TEST_CASE("closure offset is inherited from the inputs") {
    Recurrence a = geometric_rec(Rat(2));
    a.offset = 3;
    Recurrence b = geometric_rec(Rat(5));
    b.offset = 7;
    CHECK(closure_add(a, b).offset == 7);
    CHECK(closure_mul(a, b).offset == 7);
}

TEST_CASE("inverse-binomial summand satisfies its first-order recurrence") {
    // f(k) = 4/((k+1)^7 C(2k+2,k+1)):
    //   2 (k+2)^6 (2k+3) f(k+1) = (k+1)^7 f(k)
    Recurrence rec;
    rec.coeffs = {-pw(xp(1), 7), Rat(2) * pw(xp(2), 6) * (Rat(2) * Poly::variable() + Poly(3))};
    rec.offset = 0;
    auto rep = rec_check(rec, tail_inv7, 120);
    CHECK(rep.holds);

    // the same recurrence does not hold for the unshifted sequence
    auto unshifted = [](long k) { return k == 0 ? Rat(0) : tail_inv7(k - 1); };
    auto bad = rec_check(rec, unshifted, 120);
    CHECK(!bad.holds);
    CHECK(bad.first_failure == 0);
}

TEST_CASE("order-2 recurrence for the harmonic-weighted summand") {
    // g(k) = 33 H_{k+1}^(5) / ((k+1)^2 C(2k+2,k+1))
    auto h5 = ts_harmonic(5);
    auto g = [&](long k) {
        Rat den = Rat(int_pow(Int(k + 1), 2)) * Rat(central_binomial(k + 1));
        return Rat(33) * h5(k + 1) / den;
    };

    Poly x = Poly::variable();
    Recurrence rec;
    rec.coeffs = {pw(xp(1), 2) * pw(xp(2), 6),
                  Rat(-2) * pw(xp(2), 2) * (Rat(2) * x + Poly(3)) * (Rat(2) * x + Poly(5)) *
                      (Poly(55) + Rat(75) * x + Rat(40) * x * x + Rat(10) * x * x * x +
                       x * x * x * x),
                  Rat(4) * pw(xp(3), 6) * (Rat(2) * x + Poly(3)) * (Rat(2) * x + Poly(5))};
    rec.offset = 0;
    CHECK(rec_check(rec, g, 120).holds);

    // the same operator falls out of holonomic closure: the hypergeometric
    // factor 33/((k+1)^2 C(2k+2,k+1)) times the shifted H^(5)
    Recurrence hyper;
    hyper.coeffs = {-pw(xp(1), 2), Rat(2) * xp(2) * (Rat(2) * x + Poly(3))};
    auto hs = [](long k) {
        return Rat(33) / (Rat(int_pow(Int(k + 1), 2)) * Rat(central_binomial(k + 1)));
    };
    CHECK(rec_check(hyper, hs, 80).holds);

    Recurrence hshift = harmonic_recurrence(5);
    for (auto& c : hshift.coeffs)
        c = c.shifted(Rat(1));
    CHECK(rec_check(hshift, ts_shift(ts_harmonic(5), 1), 80).holds);

    Recurrence combined = closure_mul(hshift, hyper);
    CHECK(combined.order() == 2);
    CHECK(rec_check(combined, g, 120).holds);
    CHECK(proportional(combined, rec));
}

TEST_CASE("rec_to_ode turns the first-order recurrence into an operator") {
    Recurrence rec;
    rec.coeffs = {-pw(xp(1), 7), Rat(2) * pw(xp(2), 6) * (Rat(2) * Poly::variable() + Poly(3))};
    rec.offset = 0;
    DiffOp op = rec_to_ode(rec, tail_inv7);
    CHECK(op.order() == 8);
    auto rep = ode_annihilates(op, tail_inv7, 45);
    CHECK(rep.annihilates);
    CHECK(rep.checked_coeffs == 45 - op.order() + 1);
}

TEST_CASE("rec_to_ode on a geometric sequence") {
    // f(k) = 2^k has generating function 1/(1-2x): (1-2x) F' - 2 F = 0
    DiffOp op = rec_to_ode(geometric_rec(Rat(2)), ts_geometric(Rat(2)));
    CHECK(op.order() == 1);
    CHECK(ode_annihilates(op, ts_geometric(Rat(2)), 30).annihilates);
    // (2x-1) F' + 2 F, normalized so the leading coefficient is positive
    CHECK(op.coeffs[0] == Poly(2));
    CHECK(op.coeffs[1] == Rat(2) * Poly::variable() - Poly(1));
}

TEST_CASE("operator for the power series of the inverse-binomial sum") {
    // annihilates sum_{k>=0} 4 x^k / ((k+1)^7 C(2k+2,k+1)), checked on 50
    // series terms
    auto q = [&](long s, std::vector<long> cs) {
        Poly p;
        for (std::size_t i = 0; i < cs.size(); ++i)
            p += Poly::monomial(Rat(cs[i]), static_cast<int>(s + static_cast<long>(i)));
        return p;
    };
    DiffOp op;
    op.coeffs = {Poly(1),
                 q(0, {-384, 255}),
                 q(1, {-6906, 3025}),
                 q(2, {-21574, 7770}),
                 q(3, {-21784, 6951}),
                 q(4, {-9030, 2646}),
                 q(5, {-1682, 462}),
                 q(6, {-138, 36}),
                 q(7, {-4, 1})};
    op.validate();
    auto rep = ode_annihilates(op, tail_inv7, 50);
    CHECK(rep.annihilates);
    CHECK(!rep.first_failure.has_value());

    // the recurrence-to-operator conversion lands on exactly this operator
    Recurrence rec;
    rec.coeffs = {-pw(xp(1), 7), Rat(2) * pw(xp(2), 6) * (Rat(2) * Poly::variable() + Poly(3))};
    rec.offset = 0;
    DiffOp derived = rec_to_ode(rec, tail_inv7);
    CHECK(derived.coeffs == op.coeffs);

    // perturbing one coefficient breaks it, and the report says where
    DiffOp bad = op;
    bad.coeffs[3] += Poly(1);
    auto brep = ode_annihilates(bad, tail_inv7, 50);
    CHECK(!brep.annihilates);
    CHECK(brep.first_failure.has_value());
}

TEST_CASE("operator for the harmonic-weighted power series") {
    // annihilates sum_{k>=0} 33 H_{k+1}^(5) x^k / ((k+1)^2 C(2k+2,k+1))
    auto q = [&](long s, std::vector<long> cs) {
        Poly p;
        for (std::size_t i = 0; i < cs.size(); ++i)
            p += Poly::monomial(Rat(cs[i]), static_cast<int>(s + static_cast<long>(i)));
        return p;
    };
    DiffOp op;
    op.coeffs = {Poly(128),
                 q(0, {-13200, 17368}),
                 q(0, {43740, -328890, 203752}),
                 q(1, {529700, -1523262, 620876}),
                 q(2, {1417180, -2397968, 732348}),
                 q(3, {1389976, -1652470, 404908}),
                 q(4, {615296, -565104, 115864}),
                 q(5, {135020, -101534, 17921}),
                 q(6, {15020, -9614, 1491}),
                 q(7, {800, -448, 62}),
                 q(8, {16, -8, 1})};
    op.validate();
    CHECK(op.order() == 10);
    auto h5 = ts_harmonic(5);
    auto f = [&](long k) {
        Rat den = Rat(int_pow(Int(k + 1), 2)) * Rat(central_binomial(k + 1));
        return Rat(33) * h5(k + 1) / den;
    };
    auto rep = ode_annihilates(op, f, 50);
    CHECK(rep.annihilates);
}

TEST_CASE("ode_annihilates argument checks") {
    DiffOp op;
    op.coeffs = {Poly(-2), Poly(1) - Rat(2) * Poly::variable()};
    CHECK_THROWS_AS(ode_annihilates(op, ts_geometric(Rat(2)), 1), std::invalid_argument);
}
