#pragma once

#include <string>
#include <utility>

#include "zident/poly.hpp"

namespace zident {

/// Rational function over Q, kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_{}, den_{1} {}
    RatFunc(long c) : num_{c}, den_{1} {}
    RatFunc(Poly num) : num_(std::move(num)), den_{1} {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator==(long c) const { return *this == RatFunc(c); }

    std::string str(std::string_view var = "n") const;

private:
    void reduce();
    Poly num_, den_;
};

inline RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
inline RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
inline RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
inline RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }

} // namespace zident
