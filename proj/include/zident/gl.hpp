#pragma once

#include <vector>

#include "zident/real.hpp"
#include "zident/words.hpp"

namespace zident {

/// p + q*sqrt(3)
struct Sqrt3Rat {
    Rat plain, root3;
    bool is_zero() const { return plain == 0 && root3 == 0; }
};

Real sqrt3rat_eval(const Sqrt3Rat& c, int digits);

struct GlTerm {
    Sqrt3Rat coeff;
    Word word;
};

/// sum of coeff * G(word; 1) plus a constant offset.
struct GlCombo {
    std::vector<GlTerm> terms;
    Sqrt3Rat constant;
};

struct GlValue {
    Real value;
    Real tail;
};

/// Throws DomainError when the word is outside the '0'/'a' alphabet or
/// diverges at the base point.
void validate_g_word(const Word& w);

/// Iterated integral over the letters 1/t and sqrt(t)sqrt(4-t), evaluated at
/// t = 1 by power series in sigma = sqrt(t).
GlValue gl_eval(const Word& w, const PrecisionContext& ctx);
Real gl_eval_digits(const Word& w, int digits);

Real gl_combo_eval(const GlCombo& c, const PrecisionContext& ctx);
Real gl_combo_eval_digits(const GlCombo& c, int digits);

} // namespace zident
