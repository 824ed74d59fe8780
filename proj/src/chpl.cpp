#include "zident/chpl.hpp"

#include <algorithm>

#include "zident/binomial.hpp"
#include "zident/errors.hpp"

namespace zident {

namespace {

void validate_c_word(const Word& w) {
    if (!w.in_c_alphabet())
        throw DomainError("word is not over the cyclotomic alphabet");
    if (w.weight() > 12)
        throw DomainError("word weight above the supported range");
}

bool all_zero(const Word& w) {
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [](Letter l) { return l == Letter::Z; });
}

} // namespace

bool convergent_at_one(const Word& w) {
    validate_c_word(w);
    if (w.empty() || all_zero(w))
        return true;
    return w.letters.front() != Letter::One;
}

std::optional<ExprPtr> chpl_closed_form(const Word& w) {
    validate_c_word(w);
    if (w.empty())
        return expr_literal(Rat(1));
    if (all_zero(w))
        return expr_literal(Rat(0));

    const int n = w.weight();
    // 0^(w-1) 1  ->  -zeta(w)
    if (n >= 2 && w.letters.back() == Letter::One &&
        std::all_of(w.letters.begin(), w.letters.end() - 1,
                    [](Letter l) { return l == Letter::Z; }))
        return expr_neg(expr_zeta(n));

    // l^n  ->  (pi/(3 sqrt(3)))^n / n!
    if (std::all_of(w.letters.begin(), w.letters.end(),
                    [](Letter l) { return l == Letter::Lam; })) {
        ExprPtr pin = expr_pow(expr_pi(), n);
        // (3 sqrt(3))^n = 3^(3n/2) for even n, 3^((3n-1)/2) * sqrt(3) for odd n
        Int den = int_pow(Int(3), static_cast<unsigned>((3 * n - (n % 2)) / 2));
        den *= factorial(static_cast<unsigned long>(n));
        ExprPtr d = expr_literal(Rat(den));
        if (n % 2 == 1)
            d = expr_mul(d, expr_sqrt(3));
        return expr_div(pin, d);
    }

    return std::nullopt;
}

Real chpl_eval_digits(const Word& w, const Rat& x, int digits) {
    validate_c_word(w);
    if (!(x > 0) || x > Rat(1, 2))
        throw DomainError("series evaluation needs rational 0 < x <= 1/2");
    const int Wi = digits + 15;

    if (w.empty())
        return to_real(1, digits);
    if (all_zero(w)) {
        // log(x)^k / k!
        Real lx = to_real(x, Wi);
        mpfr_log(lx.backend().data(), lx.backend().data(), MPFR_RNDN);
        Real r = to_real(1, Wi);
        for (int i = 0; i < w.weight(); ++i)
            r *= lx;
        return at_digits(r / to_real(factorial(static_cast<unsigned long>(w.weight())), Wi),
                         digits);
    }
    if (w.letters.back() == Letter::Z)
        throw DomainError(
            "divergent word: innermost letter '0' makes the integral blow up at 0");

    const long N = (static_cast<long>(Wi) * 10) / 3 + 80;
    std::vector<Real> inv(static_cast<std::size_t>(N) + 1, make_real(Wi));
    for (long n = 1; n <= N; ++n)
        inv[static_cast<std::size_t>(n)] = to_real(Rat(1) / Rat(n), Wi);

    // Letter weight series around 0:
    //   '1': 1/(y-1)      = -sum y^n
    //   'l': 1/(y^2+y+1)  = sum (y^(3n) - y^(3n+1))
    //   'm': y/(y^2+y+1)  = sum (y^(3n+1) - y^(3n+2))
    auto letter_coeff = [](Letter l, long n) -> int {
        switch (l) {
        case Letter::One: return -1;
        case Letter::Lam: return n % 3 == 0 ? 1 : (n % 3 == 1 ? -1 : 0);
        case Letter::Mu: return n % 3 == 1 ? 1 : (n % 3 == 2 ? -1 : 0);
        default: return 0;
        }
    };

    std::vector<Real> cur(static_cast<std::size_t>(N) + 1, make_real(Wi));
    cur[0] = to_real(1, Wi);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        std::vector<Real> next(cur.size(), make_real(Wi));
        if (*it == Letter::Z) {
            if (!mpfr_zero_p(cur[0].backend().data()))
                throw std::logic_error("chpl_eval: nonzero constant term before a '0' step");
            for (long n = 1; n <= N; ++n)
                next[static_cast<std::size_t>(n)] =
                    cur[static_cast<std::size_t>(n)] * inv[static_cast<std::size_t>(n)];
        } else {
            std::vector<Real> conv(cur.size(), make_real(Wi));
            for (long n = 0; n < N; ++n) {
                if (mpfr_zero_p(cur[static_cast<std::size_t>(n)].backend().data()))
                    continue;
                const Real& cn = cur[static_cast<std::size_t>(n)];
                for (long m = 0; n + m < N; ++m) {
                    int lc = letter_coeff(*it, m);
                    if (lc == 1)
                        conv[static_cast<std::size_t>(n + m)] += cn;
                    else if (lc == -1)
                        conv[static_cast<std::size_t>(n + m)] -= cn;
                }
            }
            for (long n = 1; n <= N; ++n)
                next[static_cast<std::size_t>(n)] =
                    conv[static_cast<std::size_t>(n - 1)] * inv[static_cast<std::size_t>(n)];
        }
        cur = std::move(next);
    }

    Real xr = to_real(x, Wi);
    Real sum = make_real(Wi);
    for (long n = N; n >= 0; --n) {
        sum *= xr;
        sum += cur[static_cast<std::size_t>(n)];
    }
    return at_digits(sum, digits);
}

Real chpl_eval_series(const Word& w, const Rat& x, const PrecisionContext& ctx) {
    return at_digits(chpl_eval_digits(w, x, ctx.working()), ctx.target_digits);
}

} // namespace zident
