#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zident/rational.hpp"

namespace zident {

/// Dense univariate polynomial over Rat, coefficients stored by ascending
/// degree with no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(long c) { if (c != 0) c_.push_back(Rat(c)); }
    explicit Poly(Rat c) { if (c != 0) c_.push_back(std::move(c)); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable();
    static Poly monomial(const Rat& a, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    Rat eval(const Rat& x) const;
    Rat eval_long(long x) const { return eval(Rat(x)); }
    Poly derivative() const;
    /// p(x + c)
    Poly shifted(const Rat& c) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);
    Poly operator-() const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline Poly operator+(Poly a, const Poly& b) { a += b; return a; }
inline Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
inline Poly operator*(Poly a, const Poly& b) { a *= b; return a; }
inline Poly operator*(Poly a, const Rat& s) { a *= s; return a; }
inline Poly operator*(const Rat& s, Poly a) { a *= s; return a; }

/// Quotient and remainder with deg(r) < deg(b); throws DomainError on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
/// Exact division; throws DomainError if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);
/// lcm with monic normalization.
Poly poly_lcm(const Poly& a, const Poly& b);

} // namespace zident
