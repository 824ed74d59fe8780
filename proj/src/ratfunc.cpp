#include "zident/ratfunc.hpp"

namespace zident {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly{1};
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    if (den_.leading() != 1) {
        Rat inv = Rat(1) / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero())
        throw DomainError("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::str(std::string_view var) const {
    if (den_ == Poly{1})
        return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace zident
