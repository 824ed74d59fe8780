#include "zident/expr.hpp"

#include <cctype>

#include "zident/constants.hpp"
#include "zident/errors.hpp"

namespace zident {

namespace {

ExprPtr node(ConstExpr e) { return std::make_shared<const ConstExpr>(std::move(e)); }

using Kind = ConstExpr::Kind;

} // namespace

ExprPtr expr_literal(Rat v) {
    ConstExpr e{Kind::Literal};
    e.value = std::move(v);
    return node(std::move(e));
}

ExprPtr expr_pi() { return node(ConstExpr{Kind::Pi}); }

ExprPtr expr_sqrt(long n) {
    if (n < 0)
        throw DomainError("sqrt of a negative integer");
    ConstExpr e{Kind::Sqrt};
    e.iarg = n;
    return node(std::move(e));
}

ExprPtr expr_zeta(long s) {
    if (s < 2)
        throw DomainError("zeta argument must be an integer >= 2");
    ConstExpr e{Kind::Zeta};
    e.iarg = s;
    return node(std::move(e));
}

ExprPtr expr_hzeta(long s, Rat a) {
    if (s < 2)
        throw DomainError("hzeta order must be an integer >= 2");
    if (!(a > 0) || a > 1)
        throw DomainError("hzeta offset must satisfy 0 < a <= 1");
    ConstExpr e{Kind::HZeta};
    e.iarg = s;
    e.aarg = std::move(a);
    return node(std::move(e));
}

namespace {
ExprPtr binary(Kind k, ExprPtr l, ExprPtr r) {
    if (!l || !r)
        throw std::invalid_argument("null expression operand");
    ConstExpr e{k};
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return node(std::move(e));
}
} // namespace

ExprPtr expr_add(ExprPtr l, ExprPtr r) { return binary(Kind::Add, std::move(l), std::move(r)); }
ExprPtr expr_sub(ExprPtr l, ExprPtr r) { return binary(Kind::Sub, std::move(l), std::move(r)); }
ExprPtr expr_mul(ExprPtr l, ExprPtr r) { return binary(Kind::Mul, std::move(l), std::move(r)); }
ExprPtr expr_div(ExprPtr l, ExprPtr r) { return binary(Kind::Div, std::move(l), std::move(r)); }

ExprPtr expr_neg(ExprPtr e) {
    if (!e)
        throw std::invalid_argument("null expression operand");
    if (e->kind == Kind::Literal)
        return expr_literal(-e->value);
    ConstExpr n{Kind::Neg};
    n.lhs = std::move(e);
    return node(std::move(n));
}

ExprPtr expr_pow(ExprPtr base, long p) {
    if (!base)
        throw std::invalid_argument("null expression operand");
    if (p < 1 || p > 200)
        throw DomainError("power exponent must be in 1..200");
    if (p == 1)
        return base;
    ConstExpr e{Kind::Pow};
    e.iarg = p;
    e.lhs = std::move(base);
    return node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    switch (a->kind) {
    case Kind::Literal: return a->value == b->value;
    case Kind::Pi: return true;
    case Kind::Sqrt:
    case Kind::Zeta: return a->iarg == b->iarg;
    case Kind::HZeta: return a->iarg == b->iarg && a->aarg == b->aarg;
    case Kind::Neg: return expr_equal(a->lhs, b->lhs);
    case Kind::Pow: return a->iarg == b->iarg && expr_equal(a->lhs, b->lhs);
    default:
        return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected an integer", pos);
        return Int(std::string(s.substr(start, pos - start)));
    }

    long small_integer(const char* what) {
        Int v = integer();
        if (v > 1000000)
            throw ParseError(std::string(what) + " out of range", pos);
        return static_cast<long>(v);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    Rat rational() {
        Int num = integer();
        std::size_t save = pos;
        if (eat('/')) {
            if (peek_digit()) {
                Int den = integer();
                if (den == 0)
                    throw ParseError("rational literal with zero denominator", save);
                return Rat(num) / Rat(den);
            }
            pos = save;
        }
        return Rat(num);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (eat('+'))
                e = expr_add(e, parse_term());
            else if (eat('-'))
                e = expr_sub(e, parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                e = expr_mul(e, parse_factor());
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                e = expr_div(e, parse_factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_factor() {
        if (eat('-'))
            return expr_neg(parse_factor());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (eat('^')) {
            std::size_t at = pos;
            long p = small_integer("exponent");
            if (p < 1)
                throw ParseError("exponent must be >= 1", at);
            try {
                return expr_pow(base, p);
            } catch (const DomainError& err) {
                throw ParseError(err.what(), at);
            }
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= s.size())
            throw ParseError("unexpected end of expression", pos);
        if (eat('(')) {
            ExprPtr e = parse_expr();
            expect(')', "to close parenthesis");
            return e;
        }
        if (peek_digit())
            return expr_literal(rational());
        std::size_t at = pos;
        std::string name = ident();
        if (name == "pi")
            return expr_pi();
        try {
            if (name == "sqrt") {
                expect('(', "after sqrt");
                long n = small_integer("sqrt argument");
                expect(')', "after sqrt argument");
                return expr_sqrt(n);
            }
            if (name == "zeta") {
                expect('(', "after zeta");
                long v = small_integer("zeta argument");
                expect(')', "after zeta argument");
                return expr_zeta(v);
            }
            if (name == "hzeta") {
                expect('(', "after hzeta");
                long v = small_integer("hzeta order");
                expect(',', "between hzeta arguments");
                skip_ws();
                if (!peek_digit())
                    throw ParseError("expected a rational hzeta offset", pos);
                Rat a = rational();
                expect(')', "after hzeta arguments");
                return expr_hzeta(v, a);
            }
        } catch (const DomainError& err) {
            throw ParseError(err.what(), at);
        }
        if (name.empty())
            throw ParseError(std::string("unexpected character '") + s[pos] + "'", pos);
        throw ParseError("unknown name '" + name + "'", at);
    }
};

} // namespace

ExprPtr parse_const_expr(std::string_view s) {
    Parser p{s};
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size())
        throw ParseError("trailing input after expression", p.pos);
    return e;
}

namespace {

// Precedence: additive 1, multiplicative 2, unary minus 1 (printed with
// parens when nested), power 3, atoms 4.
int level(const ConstExpr& e) {
    switch (e.kind) {
    case Kind::Add:
    case Kind::Sub:
    case Kind::Neg: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Pow: return 3;
    default: return 4;
    }
}

bool negative_head(const ConstExpr& e) {
    if (e.kind == Kind::Neg)
        return true;
    if (e.kind == Kind::Literal)
        return e.value < 0;
    return false;
}

void print(const ExprPtr& e, std::string& out, int min_level, bool leading) {
    const ConstExpr& n = *e;
    bool parens = level(n) < min_level || (!leading && negative_head(n));
    if (parens)
        out += '(';
    switch (n.kind) {
    case Kind::Literal:
        out += rat_to_string(n.value);
        break;
    case Kind::Pi:
        out += "pi";
        break;
    case Kind::Sqrt:
        out += "sqrt(" + std::to_string(n.iarg) + ")";
        break;
    case Kind::Zeta:
        out += "zeta(" + std::to_string(n.iarg) + ")";
        break;
    case Kind::HZeta:
        out += "hzeta(" + std::to_string(n.iarg) + ", " + rat_to_string(n.aarg) + ")";
        break;
    case Kind::Neg:
        out += '-';
        print(n.lhs, out, 3, false);
        break;
    case Kind::Add:
        print(n.lhs, out, 1, parens || leading);
        out += " + ";
        print(n.rhs, out, 2, false);
        break;
    case Kind::Sub:
        print(n.lhs, out, 1, parens || leading);
        out += " - ";
        print(n.rhs, out, 2, false);
        break;
    case Kind::Mul:
        print(n.lhs, out, 2, parens || leading);
        out += "*";
        print(n.rhs, out, 3, false);
        break;
    case Kind::Div: {
        print(n.lhs, out, 2, parens || leading);
        out += "/";
        // A bare literal after '/' could fuse with the greedy rational lexer.
        bool rparens = n.rhs->kind == Kind::Literal;
        if (rparens)
            out += '(';
        print(n.rhs, out, rparens ? 0 : 3, rparens);
        if (rparens)
            out += ')';
        break;
    }
    case Kind::Pow: {
        bool base_parens = level(*n.lhs) < 4 ||
                           (n.lhs->kind == Kind::Literal &&
                            (n.lhs->value < 0 || rat_den(n.lhs->value) != 1));
        if (base_parens)
            out += '(';
        print(n.lhs, out, 0, true);
        if (base_parens)
            out += ')';
        out += "^" + std::to_string(n.iarg);
        break;
    }
    }
    if (parens)
        out += ')';
}

} // namespace

std::string print_const_expr(const ExprPtr& e) {
    if (!e)
        throw std::invalid_argument("null expression");
    std::string out;
    print(e, out, 0, true);
    return out;
}

Real expr_eval_digits(const ExprPtr& e, int digits) {
    if (!e)
        throw std::invalid_argument("null expression");
    const ConstExpr& n = *e;
    switch (n.kind) {
    case Kind::Literal: return to_real(n.value, digits);
    case Kind::Pi: return pi_digits(digits);
    case Kind::Sqrt: return sqrt_digits(Int(n.iarg), digits);
    case Kind::Zeta: return zeta_digits(static_cast<int>(n.iarg), digits);
    case Kind::HZeta: return hurwitz_digits(static_cast<int>(n.iarg), n.aarg, digits);
    case Kind::Neg: return -expr_eval_digits(n.lhs, digits);
    case Kind::Add: return expr_eval_digits(n.lhs, digits) + expr_eval_digits(n.rhs, digits);
    case Kind::Sub: return expr_eval_digits(n.lhs, digits) - expr_eval_digits(n.rhs, digits);
    case Kind::Mul: return expr_eval_digits(n.lhs, digits) * expr_eval_digits(n.rhs, digits);
    case Kind::Div: {
        Real den = expr_eval_digits(n.rhs, digits);
        if (den == 0)
            throw DomainError("division by zero in constant expression");
        return expr_eval_digits(n.lhs, digits) / den;
    }
    case Kind::Pow: {
        Real base = expr_eval_digits(n.lhs, digits);
        Real r = make_real(digits);
        mpfr_pow_si(r.backend().data(), base.backend().data(), n.iarg, MPFR_RNDN);
        return r;
    }
    }
    throw std::logic_error("unreachable expression kind");
}

Real eval_const_expr(const ExprPtr& e, const PrecisionContext& ctx) {
    return at_digits(expr_eval_digits(e, ctx.working()), ctx.target_digits);
}

} // namespace zident
