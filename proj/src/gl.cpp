#include "zident/gl.hpp"

#include "zident/constants.hpp"
#include "zident/errors.hpp"

namespace zident {

Real sqrt3rat_eval(const Sqrt3Rat& c, int digits) {
    Real v = to_real(c.plain, digits);
    if (c.root3 != 0)
        v += to_real(c.root3, digits) * sqrt_digits(Int(3), digits);
    return v;
}

void validate_g_word(const Word& w) {
    if (!w.in_g_alphabet())
        throw DomainError("word is not over the '0'/'a' alphabet");
    if (w.weight() > 12)
        throw DomainError("word weight above the supported range");
    if (!w.empty() && w.letters.back() == Letter::Z)
        throw DomainError(
            "divergent word: innermost letter '0' makes the integral blow up at 0");
}

namespace {

// Truncated power series in sigma = sqrt(t), dense Real coefficients.
struct Series {
    std::vector<Real> c;
};

// 2 s^2 sqrt(4 - s^2) as exact rationals: even powers only.
std::vector<Rat> weight_a_series(long n_len) {
    std::vector<Rat> v(static_cast<std::size_t>(n_len), Rat(0));
    Rat u(2); // sqrt series coefficient, u_{m+1} = u_m (2m-1) / (8(m+1))
    for (long m = 0; 2 * m + 2 < n_len; ++m) {
        v[static_cast<std::size_t>(2 * m + 2)] = u * 2;
        u *= Rat(2 * m - 1) / Rat(8 * (m + 1));
    }
    return v;
}

} // namespace

Real gl_eval_digits(const Word& w, int digits) {
    validate_g_word(w);
    const int Wi = digits + 25;
    if (w.empty())
        return to_real(1, digits);

    const long N = (static_cast<long>(Wi) * 17) / 5 + 60;
    auto wa = weight_a_series(N + 1);
    std::vector<Real> wa_real(wa.size());
    for (std::size_t i = 0; i < wa.size(); ++i)
        wa_real[i] = to_real(wa[i], Wi);

    std::vector<Real> cur(static_cast<std::size_t>(N) + 1, make_real(Wi));
    cur[0] = to_real(1, Wi);

    std::vector<Real> inv(static_cast<std::size_t>(N) + 1, make_real(Wi));
    for (long n = 1; n <= N; ++n)
        inv[static_cast<std::size_t>(n)] = to_real(Rat(1) / Rat(n), Wi);
    const Real two = to_real(2, Wi);

    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        std::vector<Real> next(cur.size(), make_real(Wi));
        if (*it == Letter::A) {
            // integrate( 2 s^2 sqrt(4-s^2) * cur )
            std::vector<Real> conv(cur.size(), make_real(Wi));
            for (long n = 0; n < N; ++n) {
                if (mpfr_zero_p(cur[static_cast<std::size_t>(n)].backend().data()))
                    continue;
                for (long m = 2; n + m <= N; m += 2)
                    conv[static_cast<std::size_t>(n + m)] +=
                        cur[static_cast<std::size_t>(n)] *
                        wa_real[static_cast<std::size_t>(m)];
            }
            for (long n = 1; n <= N; ++n)
                next[static_cast<std::size_t>(n)] =
                    conv[static_cast<std::size_t>(n - 1)] * inv[static_cast<std::size_t>(n)];
        } else {
            // integrate( (2/s) * cur ), needs cur(0) = 0
            if (!mpfr_zero_p(cur[0].backend().data()))
                throw std::logic_error("gl_eval: nonzero constant term before a '0' step");
            for (long n = 1; n <= N; ++n)
                next[static_cast<std::size_t>(n)] =
                    cur[static_cast<std::size_t>(n)] * two * inv[static_cast<std::size_t>(n)];
        }
        cur = std::move(next);
    }

    Real sum = make_real(Wi);
    for (long n = N; n >= 0; --n)
        sum += cur[static_cast<std::size_t>(n)];
    return at_digits(sum, digits);
}

GlValue gl_eval(const Word& w, const PrecisionContext& ctx) {
    GlValue out;
    out.value = at_digits(gl_eval_digits(w, ctx.working()), ctx.target_digits);
    // Coefficients decay like 2^-n; the truncation sits 25 guard digits deep.
    out.tail = pow10(-(ctx.working() + 18), 20);
    return out;
}

Real gl_combo_eval_digits(const GlCombo& c, int digits) {
    const int Wi = digits + 10;
    Real sum = sqrt3rat_eval(c.constant, Wi);
    for (const auto& t : c.terms) {
        if (t.coeff.is_zero())
            continue;
        sum += sqrt3rat_eval(t.coeff, Wi) * gl_eval_digits(t.word, Wi);
    }
    return at_digits(sum, digits);
}

Real gl_combo_eval(const GlCombo& c, const PrecisionContext& ctx) {
    return at_digits(gl_combo_eval_digits(c, ctx.working()), ctx.target_digits);
}

} // namespace zident
