#pragma once

#include "zident/rational.hpp"
#include "zident/real.hpp"

namespace zident {

/// pi, correct to ctx.target_digits.
Real const_pi(const PrecisionContext& ctx);

/// sqrt(n) for integer n >= 0; exact squares come out exact.
Real const_sqrt(const Int& n, const PrecisionContext& ctx);

/// Riemann zeta(s) for integer s >= 2 by Euler-Maclaurin summation.
Real zeta(int s, const PrecisionContext& ctx);

/// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^(-s) for integer s >= 2 and
/// rational 0 < a <= 1.
Real hurwitz_zeta(int s, const Rat& a, const PrecisionContext& ctx);

// Engine entry points at an explicit digit count; results carry that
// precision.  The ctx wrappers above run these at working precision and
// re-round to the target.
Real pi_digits(int digits);
Real sqrt_digits(const Int& n, int digits);
Real zeta_digits(int s, int digits);
Real hurwitz_digits(int s, const Rat& a, int digits);

} // namespace zident
