#pragma once

#include <string>
#include <vector>

#include "zident/expr.hpp"
#include "zident/pslq.hpp"
#include "zident/series.hpp"

namespace zident {

struct BasisEntry {
    std::string name;
    ExprPtr expr;
};

struct DiscoveryResult {
    /// S = sum coefficients[i] * basis[i].
    std::vector<Rat> coefficients;
    Real residual;
    int certified_digits = 0;
    int digits_used = 0;
    long pslq_iterations = 0;
};

/// Thrown when PSLQ rules relations out (or gives up) at both precision
/// levels; carries the final status and exclusion bound.
class NoRelationError : public std::runtime_error {
public:
    NoRelationError(std::string message, PslqStatus status, Real bound)
        : std::runtime_error(std::move(message)), status_(status),
          bound_(std::move(bound)) {}
    PslqStatus status() const { return status_; }
    const Real& exclusion_bound() const { return bound_; }

private:
    PslqStatus status_;
    Real bound_;
};

/// Finds rational coefficients expressing the series over the basis via PSLQ
/// at ctx.target_digits, then re-verifies the candidate at twice the digits.
/// Escalates to 2x digits once if the first pass finds nothing.
DiscoveryResult discover(const SeriesSpec& spec, const std::vector<BasisEntry>& basis,
                         const PrecisionContext& ctx,
                         const Int& max_height = Int(1000000000),
                         long terms_max = 1000000);

struct CertifyReport {
    bool pass = false;
    int low_digits = 0, high_digits = 0;
    Real residual_low, residual_high;
    long terms_low = 0, terms_high = 0;
};

/// Checks series == rhs at two precision levels; passes when the high-level
/// residual is below 10^-(high_digits - 15).
CertifyReport certify(const SeriesSpec& spec, const ExprPtr& rhs, int low_digits,
                      int high_digits, long terms_max = 1000000);

} // namespace zident
