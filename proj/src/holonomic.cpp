#include "zident/holonomic.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "zident/matrix.hpp"

namespace zident {

void Recurrence::validate() const {
    if (coeffs.size() < 2)
        throw DomainError("recurrence must have order >= 1");
    if (coeffs.back().is_zero())
        throw DomainError("recurrence leading coefficient is zero");
    if (offset < 0)
        throw DomainError("recurrence offset must be >= 0");
}

void DiffOp::validate() const {
    if (coeffs.size() < 2)
        throw DomainError("differential operator must have order >= 1");
    if (coeffs.back().is_zero())
        throw DomainError("differential operator leading coefficient is zero");
}

TermSource ts_constant(const Rat& c) {
    return [c](long) { return c; };
}

TermSource ts_geometric(const Rat& r) {
    return [r](long k) {
        if (k < 0)
            throw DomainError("term index must be >= 0");
        return rat_pow(r, static_cast<unsigned>(k));
    };
}

TermSource ts_harmonic(int a) {
    if (a < 1)
        throw DomainError("harmonic order must be >= 1");
    struct Cache {
        std::mutex m;
        std::vector<Rat> h{Rat(0)};
    };
    auto cache = std::make_shared<Cache>();
    return [cache, a](long k) {
        if (k < 0)
            throw DomainError("term index must be >= 0");
        std::lock_guard lock(cache->m);
        while (static_cast<long>(cache->h.size()) <= k) {
            long i = static_cast<long>(cache->h.size());
            cache->h.push_back(cache->h.back() +
                               Rat(1) / Rat(int_pow(Int(i), static_cast<unsigned>(a))));
        }
        return cache->h[static_cast<std::size_t>(k)];
    };
}

TermSource ts_sum(TermSource f, TermSource g) {
    return [f = std::move(f), g = std::move(g)](long k) { return f(k) + g(k); };
}

TermSource ts_product(TermSource f, TermSource g) {
    return [f = std::move(f), g = std::move(g)](long k) { return f(k) * g(k); };
}

TermSource ts_shift(TermSource f, long s) {
    return [f = std::move(f), s](long k) { return f(k + s); };
}

RecCheckReport rec_check(const Recurrence& rec, const TermSource& f, long k_max) {
    rec.validate();
    RecCheckReport rep;
    rep.checked_from = rec.offset;
    rep.checked_to = k_max;
    rep.holds = true;
    const int d = rec.order();
    if (k_max < rec.offset)
        return rep;
    std::vector<Rat> terms;
    terms.reserve(static_cast<std::size_t>(k_max - rec.offset + d + 1));
    for (long k = rec.offset; k <= k_max + d; ++k)
        terms.push_back(f(k));
    for (long k = rec.offset; k <= k_max; ++k) {
        Rat s(0);
        for (int j = 0; j <= d; ++j)
            s += rec.coeffs[static_cast<std::size_t>(j)].eval(Rat(k)) *
                 terms[static_cast<std::size_t>(k - rec.offset + j)];
        if (s != 0) {
            rep.holds = false;
            rep.first_failure = k;
            break;
        }
    }
    return rep;
}

namespace {

Poly poly_pow(const Poly& p, int e) {
    Poly r(1);
    for (int i = 0; i < e; ++i)
        r *= p;
    return r;
}

// coords[i][m]: coefficient of f(n+m), m < order, expressing f(n+i) in Q(n).
std::vector<std::vector<RatFunc>> shift_coords(const Recurrence& rec, int imax) {
    const int d = rec.order();
    std::vector<std::vector<RatFunc>> rows;
    rows.reserve(static_cast<std::size_t>(imax) + 1);
    for (int i = 0; i <= imax; ++i) {
        std::vector<RatFunc> row(static_cast<std::size_t>(d), RatFunc(0));
        if (i < d) {
            row[static_cast<std::size_t>(i)] = RatFunc(1);
        } else {
            const long sh = i - d;
            RatFunc lead{rec.coeffs[static_cast<std::size_t>(d)].shifted(Rat(sh))};
            for (int j = 0; j < d; ++j) {
                RatFunc c =
                    RatFunc(rec.coeffs[static_cast<std::size_t>(j)].shifted(Rat(sh))) / lead;
                if (c.is_zero())
                    continue;
                const auto& prev = rows[static_cast<std::size_t>(i - d + j)];
                for (int m = 0; m < d; ++m)
                    row[static_cast<std::size_t>(m)] -= c * prev[static_cast<std::size_t>(m)];
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Clears denominators and rescales to primitive integer coefficients.
std::vector<Poly> clear_denominators(const std::vector<RatFunc>& v) {
    Poly lcm_den(1);
    for (const auto& c : v)
        if (!c.is_zero())
            lcm_den = poly_lcm(lcm_den, c.den());
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        if (c.is_zero())
            out.emplace_back();
        else
            out.push_back(c.num() * poly_divexact(lcm_den, c.den()));
    }
    Int den_lcm(1), num_gcd(0);
    for (const auto& p : out)
        for (const auto& cf : p.coeffs()) {
            den_lcm = lcm(den_lcm, rat_den(cf));
            num_gcd = gcd(num_gcd, rat_num(cf));
        }
    if (num_gcd == 0)
        num_gcd = 1;
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    for (auto& p : out)
        p *= scale;
    const Poly* last = nullptr;
    for (const auto& p : out)
        if (!p.is_zero())
            last = &p;
    if (last && last->leading() < 0)
        for (auto& p : out)
            p = -p;
    return out;
}

long total_degree(const std::vector<Poly>& v) {
    long t = 0;
    for (const auto& p : v)
        if (!p.is_zero())
            t += p.degree();
    return t;
}

Recurrence closure_combine(const Recurrence& r1, const Recurrence& r2, bool product) {
    r1.validate();
    r2.validate();
    const int d1 = r1.order(), d2 = r2.order();
    const int bound = product ? d1 * d2 : d1 + d2;
    const int dim = bound;
    auto rows1 = shift_coords(r1, bound);
    auto rows2 = shift_coords(r2, bound);

    for (int r = 1; r <= bound; ++r) {
        Mat<RatFunc> m(static_cast<std::size_t>(dim), static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) {
            if (product) {
                for (int a = 0; a < d1; ++a)
                    for (int b = 0; b < d2; ++b)
                        m(static_cast<std::size_t>(a * d2 + b), static_cast<std::size_t>(i)) =
                            rows1[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                            rows2[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
            } else {
                for (int a = 0; a < d1; ++a)
                    m(static_cast<std::size_t>(a), static_cast<std::size_t>(i)) =
                        rows1[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
                for (int b = 0; b < d2; ++b)
                    m(static_cast<std::size_t>(d1 + b), static_cast<std::size_t>(i)) =
                        rows2[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
            }
        }
        auto ns = nullspace(m);
        if (ns.empty())
            continue;
        std::vector<Poly> best;
        long best_deg = -1;
        for (const auto& vec : ns) {
            auto cleared = clear_denominators(vec);
            long deg = total_degree(cleared);
            if (best_deg < 0 || deg < best_deg) {
                best_deg = deg;
                best = std::move(cleared);
            }
        }
        while (!best.empty() && best.back().is_zero())
            best.pop_back();
        Recurrence result;
        result.coeffs = std::move(best);
        result.offset = std::max(r1.offset, r2.offset);
        result.validate();
        return result;
    }
    throw std::logic_error("closure: no annihilator found within the order bound");
}

} // namespace

Recurrence closure_add(const Recurrence& r1, const Recurrence& r2) {
    return closure_combine(r1, r2, false);
}

Recurrence closure_mul(const Recurrence& r1, const Recurrence& r2) {
    return closure_combine(r1, r2, true);
}

Recurrence harmonic_recurrence(int a) {
    if (a < 1)
        throw DomainError("harmonic order must be >= 1");
    Poly x = Poly::variable();
    Poly k1 = poly_pow(x + Poly(1), a);
    Poly k2 = poly_pow(x + Poly(2), a);
    Recurrence r;
    r.coeffs = {k1, -(k1 + k2), k2};
    r.offset = 0;
    return r;
}

namespace {

// Differential operators as coefficient lists for D^0..D^ord.
using OpPolys = std::vector<Poly>;

OpPolys op_add(const OpPolys& a, const OpPolys& b) {
    OpPolys out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size())
            out[i] += a[i];
        if (i < b.size())
            out[i] += b[i];
    }
    return out;
}

// theta o L with theta = x * d/dx.
OpPolys op_theta_compose(const OpPolys& l) {
    OpPolys out(l.size() + 1);
    const Poly x = Poly::variable();
    for (std::size_t i = 0; i < out.size(); ++i) {
        Poly c;
        if (i < l.size())
            c += l[i].derivative();
        if (i >= 1)
            c += l[i - 1];
        out[i] = x * c;
    }
    while (out.size() > 1 && out.back().is_zero())
        out.pop_back();
    return out;
}

// p(theta) as an operator.
OpPolys op_from_theta_poly(const Poly& p) {
    OpPolys acc{Poly(p.coeff(0))};
    OpPolys theta_m{Poly(1)};
    for (int mdeg = 1; mdeg <= p.degree(); ++mdeg) {
        theta_m = op_theta_compose(theta_m);
        OpPolys scaled = theta_m;
        for (auto& c : scaled)
            c *= p.coeff(mdeg);
        acc = op_add(acc, scaled);
    }
    return acc;
}

void op_trim(OpPolys& l) {
    while (l.size() > 1 && l.back().is_zero())
        l.pop_back();
}

} // namespace

DiffOp rec_to_ode(const Recurrence& rec, const TermSource& f) {
    rec.validate();
    const int d = rec.order();

    OpPolys l{Poly{}};
    std::vector<Poly> ptilde;
    for (int j = 0; j <= d; ++j) {
        ptilde.push_back(rec.coeffs[static_cast<std::size_t>(j)].shifted(Rat(-j)));
        OpPolys pj = op_from_theta_poly(ptilde.back());
        Poly xf = Poly::monomial(Rat(1), d - j);
        for (auto& c : pj)
            c *= xf;
        l = op_add(l, pj);
    }
    op_trim(l);

    // Boundary terms: L0 S = x^d E(x) + sum_j x^(d-j) sum_{m<j} ptilde_j(m) f(m) x^m
    Poly residual;
    for (long k = 0; k < rec.offset; ++k) {
        Rat e(0);
        for (int j = 0; j <= d; ++j)
            e += rec.coeffs[static_cast<std::size_t>(j)].eval(Rat(k)) * f(k + j);
        residual += Poly::monomial(e, static_cast<int>(d + k));
    }
    for (int j = 0; j <= d; ++j)
        for (int m = 0; m < j; ++m)
            residual += Poly::monomial(ptilde[static_cast<std::size_t>(j)].eval(Rat(m)) * f(m),
                                       d - j + m);

    for (int e = 0; e <= residual.degree(); ++e) {
        if (residual.coeff(e) == 0)
            continue;
        OpPolys shifted = op_theta_compose(l);
        for (std::size_t i = 0; i < l.size(); ++i)
            shifted[i] -= Rat(e) * l[i];
        l = std::move(shifted);
        op_trim(l);
    }

    Poly g;
    for (const auto& c : l)
        if (!c.is_zero())
            g = g.is_zero() ? c : poly_gcd(g, c);
    if (g.degree() > 0)
        for (auto& c : l)
            c = poly_divexact(c, g);

    std::vector<RatFunc> as_rf;
    as_rf.reserve(l.size());
    for (const auto& c : l)
        as_rf.emplace_back(c);
    DiffOp op;
    op.coeffs = clear_denominators(as_rf);
    while (op.coeffs.size() > 1 && op.coeffs.back().is_zero())
        op.coeffs.pop_back();
    op.validate();
    return op;
}

OdeCheckReport ode_annihilates(const DiffOp& op, const TermSource& f, long n_max) {
    op.validate();
    const int d = op.order();
    OdeCheckReport rep;
    if (n_max < d + 1)
        throw std::invalid_argument("ode_annihilates: n_max too small for the operator order");

    std::vector<Rat> a;
    a.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long k = 0; k <= n_max; ++k)
        a.push_back(f(k));

    const long n_resid = n_max - d;
    std::vector<Rat> residual(static_cast<std::size_t>(n_resid) + 1, Rat(0));
    for (int i = 0; i <= d; ++i) {
        const Poly& qi = op.coeffs[static_cast<std::size_t>(i)];
        if (qi.is_zero())
            continue;
        // coefficients of S^(i): b_m = a_{m+i} * (m+1)...(m+i)
        std::vector<Rat> b(static_cast<std::size_t>(n_max - i) + 1);
        for (long m = 0; m + i <= n_max; ++m) {
            Rat c = a[static_cast<std::size_t>(m + i)];
            for (long t = m + 1; t <= m + i; ++t)
                c *= Rat(t);
            b[static_cast<std::size_t>(m)] = c;
        }
        for (int e = 0; e <= qi.degree(); ++e) {
            const Rat& ce = qi.coeff(e);
            if (ce == 0)
                continue;
            for (long n = e; n <= n_resid; ++n)
                residual[static_cast<std::size_t>(n)] +=
                    ce * b[static_cast<std::size_t>(n - e)];
        }
    }

    rep.checked_coeffs = n_resid + 1;
    rep.residuals = residual;
    rep.annihilates = true;
    for (long n = 0; n <= n_resid; ++n)
        if (residual[static_cast<std::size_t>(n)] != 0) {
            rep.annihilates = false;
            rep.first_failure = n;
            break;
        }
    return rep;
}

} // namespace zident
