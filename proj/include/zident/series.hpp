#pragma once

#include <vector>

#include "zident/holonomic.hpp"
#include "zident/rational.hpp"
#include "zident/real.hpp"

namespace zident {

/// One summand group coeff * H_k^(harmonic_order) / k^k_power, all divided by
/// C(2k, k); harmonic_order = 0 means no harmonic factor.
struct SeriesTerm {
    Rat coeff;
    int harmonic_order = 0;
    int k_power = 0;
};

/// sum_{k>=1} (sum_t coeff_t * H_k^(h_t) / k^(c_t)) / C(2k, k)
struct SeriesSpec {
    std::vector<SeriesTerm> terms;
    void validate() const;
};

/// Exact k-th summand, k >= 1.
Rat term_exact(const SeriesSpec& spec, long k);

/// Summand stream for recurrence checks: f(k) = term_exact(k + shift), with
/// f(0) = 0 when shift = 0 (the series starts at k = 1).
TermSource summand_source(const SeriesSpec& spec, long shift = 0);

/// Rigorous bound on |sum_{k>k0} summand(k)|, decreasing in k0.
Real tail_bound(const SeriesSpec& spec, long k0, int digits);

struct SeriesEval {
    Real value;
    long terms_used = 0;
    Real tail;
};

/// Partial sum with enough terms that the reported tail bound is below
/// 10^(-(digits+5)); the value carries `digits` digits.
SeriesEval eval_series_digits(const SeriesSpec& spec, int digits, long terms_max = 1000000);

/// Same, at ctx working precision with the value re-rounded to the target.
SeriesEval eval_series(const SeriesSpec& spec, const PrecisionContext& ctx,
                       long terms_max = 1000000);

} // namespace zident
