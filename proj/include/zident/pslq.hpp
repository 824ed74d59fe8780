#pragma once

#include <vector>

#include "zident/rational.hpp"
#include "zident/real.hpp"

namespace zident {

enum class PslqStatus { Found, Excluded, Insufficient };

struct PslqResult {
    PslqStatus status = PslqStatus::Insufficient;
    /// Integer relation sum m_i x_i = 0 (primitive, first nonzero > 0).
    std::vector<Int> relation;
    /// No relation of Euclidean norm below this bound exists.
    Real exclusion_bound;
    long iterations = 0;
};

/// Integer relation detection on xs (all at one precision).  Stops with
/// Found on a verified relation of height <= max_height, Excluded once the
/// norm bound rules out every candidate within the height cap, Insufficient
/// when the iteration or precision budget runs out first.
PslqResult pslq(const std::vector<Real>& xs, const PrecisionContext& ctx,
                const Int& max_height = Int(1000000000));

} // namespace zident
