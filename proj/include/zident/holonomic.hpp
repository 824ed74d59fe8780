#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zident/poly.hpp"
#include "zident/ratfunc.hpp"

namespace zident {

/// sum_{j=0}^{d} coeffs[j](k) * f(k+j) = 0 for all k >= offset.
/// coeffs[d] != 0; the shift variable in coeffs is k.
struct Recurrence {
    std::vector<Poly> coeffs;
    long offset = 0;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    void validate() const;
};

/// sum_{i=0}^{d} coeffs[i](x) * F^(i)(x) = 0; coeffs[d] != 0.
struct DiffOp {
    std::vector<Poly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    void validate() const;
};

/// Exact term stream f(0), f(1), ...
using TermSource = std::function<Rat(long)>;

TermSource ts_constant(const Rat& c);
TermSource ts_geometric(const Rat& r);
/// H_k^(a) = sum_{i=1}^{k} 1/i^a, with H_0 = 0.  Memoized.
TermSource ts_harmonic(int a);
TermSource ts_sum(TermSource f, TermSource g);
TermSource ts_product(TermSource f, TermSource g);
TermSource ts_shift(TermSource f, long s);

struct RecCheckReport {
    bool holds = false;
    long checked_from = 0;
    long checked_to = 0;
    std::optional<long> first_failure;
};

/// Verifies the recurrence on exact terms for k = offset .. k_max.
RecCheckReport rec_check(const Recurrence& rec, const TermSource& f, long k_max);

/// Annihilator of f+g from annihilators of f and g; order <= ord(r1)+ord(r2).
Recurrence closure_add(const Recurrence& r1, const Recurrence& r2);
/// Annihilator of f*g from annihilators of f and g; order <= ord(r1)*ord(r2).
Recurrence closure_mul(const Recurrence& r1, const Recurrence& r2);

/// Order-2 annihilator of k -> H_k^(a).
Recurrence harmonic_recurrence(int a);

/// Differential operator annihilating sum_k f(k) x^k, obtained by the
/// theta = x*d/dx rewrite of the recurrence plus boundary-term elimination.
DiffOp rec_to_ode(const Recurrence& rec, const TermSource& f);

struct OdeCheckReport {
    bool annihilates = false;
    long checked_coeffs = 0;
    std::vector<Rat> residuals;
    std::optional<long> first_failure;
};

/// Applies the operator to the truncated power series sum f(k) x^k and
/// reports the coefficient residuals that are fully determined by n_max terms.
OdeCheckReport ode_annihilates(const DiffOp& op, const TermSource& f, long n_max);

} // namespace zident
