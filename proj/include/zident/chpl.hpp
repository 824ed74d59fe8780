#pragma once

#include <optional>

#include "zident/expr.hpp"
#include "zident/rational.hpp"
#include "zident/real.hpp"
#include "zident/words.hpp"

namespace zident {

/// Convergence at the upper endpoint 1 for cyclotomic words: divergence
/// happens exactly when the outermost letter is '1'.
bool convergent_at_one(const Word& w);

/// Known closed forms at argument 1: the empty word, all-zero words,
/// 0^(w-1) 1, and l^n.  Everything else returns nullopt.
std::optional<ExprPtr> chpl_closed_form(const Word& w);

/// Series evaluation of the cyclotomic polylog at rational 0 < x <= 1/2.
Real chpl_eval_series(const Word& w, const Rat& x, const PrecisionContext& ctx);
Real chpl_eval_digits(const Word& w, const Rat& x, int digits);

} // namespace zident
