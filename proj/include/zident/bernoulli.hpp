#pragma once

#include "zident/rational.hpp"

namespace zident {

/// Bernoulli number B_n (B_1 = -1/2 convention), exact.  Memoized; safe to
/// call from concurrent tests.  Throws DomainError for n < 0.
Rat bernoulli(int n);

} // namespace zident
