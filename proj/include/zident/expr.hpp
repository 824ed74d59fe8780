#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "zident/rational.hpp"
#include "zident/real.hpp"

namespace zident {

struct ConstExpr;
using ExprPtr = std::shared_ptr<const ConstExpr>;

/// Closed-form constant built from rationals, pi, sqrt(n), zeta(s) and
/// Hurwitz zeta(s, a), combined by + - * / ^ and unary minus.
struct ConstExpr {
    enum class Kind { Literal, Pi, Sqrt, Zeta, HZeta, Add, Sub, Mul, Div, Neg, Pow };

    Kind kind;
    Rat value;        // Literal
    long iarg = 0;    // Sqrt radicand, Zeta/HZeta order, Pow exponent
    Rat aarg;         // HZeta offset
    ExprPtr lhs, rhs; // operands (Neg/Pow use lhs only)
};

ExprPtr expr_literal(Rat v);
ExprPtr expr_pi();
ExprPtr expr_sqrt(long n);
ExprPtr expr_zeta(long s);
ExprPtr expr_hzeta(long s, Rat a);
ExprPtr expr_add(ExprPtr l, ExprPtr r);
ExprPtr expr_sub(ExprPtr l, ExprPtr r);
ExprPtr expr_mul(ExprPtr l, ExprPtr r);
ExprPtr expr_div(ExprPtr l, ExprPtr r);
ExprPtr expr_neg(ExprPtr e);
ExprPtr expr_pow(ExprPtr base, long e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Grammar: expr := term (('+'|'-') term)*;  term := factor (('*'|'/') factor)*;
/// factor := '-' factor | power;  power := atom ['^' INTEGER];
/// atom := RATIONAL | pi | sqrt(INTEGER) | zeta(INTEGER)
///       | hzeta(INTEGER, RATIONAL) | '(' expr ')'.
/// INTEGER '/' INTEGER is consumed greedily as one rational literal.
ExprPtr parse_const_expr(std::string_view s);

/// Prints a form that parse_const_expr maps back to an equal tree.
std::string print_const_expr(const ExprPtr& e);

/// Engine evaluation carrying `digits` digits.
Real expr_eval_digits(const ExprPtr& e, int digits);

/// Evaluation at ctx working precision, re-rounded to the target.
Real eval_const_expr(const ExprPtr& e, const PrecisionContext& ctx);

} // namespace zident
