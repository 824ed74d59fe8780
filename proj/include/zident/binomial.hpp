#pragma once

#include "zident/rational.hpp"

namespace zident {

/// C(n, k), exact.
Int binomial(unsigned long n, unsigned long k);

/// C(2k, k), exact, built by the multiplicative update
/// C(2k+2, k+1) = C(2k, k) * 2(2k+1)/(k+1); every division is checked exact.
/// Memoized; safe to call from concurrent tests.
Int central_binomial(long k);

/// k! as an Int.
Int factorial(unsigned long k);

} // namespace zident
