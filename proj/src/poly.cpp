#include "zident/poly.hpp"

#include <sstream>

namespace zident {

namespace {
const Rat kZero{0};
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

Poly Poly::monomial(const Rat& a, int deg) {
    Poly p;
    if (a != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
        p.c_.back() = a;
    }
    return p;
}

const Rat& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly{};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rat& c) const {
    // Horner: r <- r*(x+c) + a_i, highest coefficient first.
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::vector<Rat> next(r.c_.size() + 1, Rat(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            next[i + 1] += r.c_[i];
            next[i] += r.c_[i] * c;
        }
        next[0] += *it;
        r.c_ = std::move(next);
        r.trim();
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

std::string Poly::str(std::string_view var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (a == 0)
            continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0)
                os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit)
            os << rat_to_string(mag);
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    Poly q, r = a;
    const int db = b.degree();
    const Rat& lead = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Rat f = r.leading() / lead;
        q += Poly::monomial(f, shift);
        r -= Poly::monomial(f, shift) * b;
    }
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1)
        a *= Rat(1) / a.leading();
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw DomainError("inexact polynomial division");
    return q;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly{};
    Poly g = poly_gcd(a, b);
    Poly l = poly_divexact(a * b, g);
    if (l.leading() != 1)
        l *= Rat(1) / l.leading();
    return l;
}

} // namespace zident
