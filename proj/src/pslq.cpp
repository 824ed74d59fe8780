#include "zident/pslq.hpp"

#include <algorithm>
#include <cmath>

#include "zident/constants.hpp"
#include "zident/errors.hpp"

namespace zident {

namespace {

Int nint_int(const Real& x) {
    Int r;
    Real t = x;
    mpfr_rint(t.backend().data(), x.backend().data(), MPFR_RNDN);
    mpfr_get_z(r.backend().data(), t.backend().data(), MPFR_RNDN);
    return r;
}

std::vector<Int> normalize_relation(std::vector<Int> rel) {
    Int g(0);
    for (const auto& v : rel)
        g = gcd(g, v);
    if (g > 1)
        for (auto& v : rel)
            v /= g;
    for (const auto& v : rel) {
        if (v == 0)
            continue;
        if (v < 0)
            for (auto& u : rel)
                u = -u;
        break;
    }
    return rel;
}

Int height_of(const std::vector<Int>& rel) {
    Int h(0);
    for (const auto& v : rel) {
        Int a = abs(v);
        if (a > h)
            h = a;
    }
    return h;
}

} // namespace

PslqResult pslq(const std::vector<Real>& xs, const PrecisionContext& ctx,
                const Int& max_height) {
    const std::size_t n = xs.size();
    if (n < 2)
        throw std::invalid_argument("pslq needs at least two values");
    if (max_height < 1)
        throw std::invalid_argument("pslq needs max_height >= 1");
    const int P = static_cast<int>(xs[0].precision());
    for (const auto& x : xs)
        if (static_cast<int>(x.precision()) != P)
            throw std::invalid_argument("pslq inputs must share one precision");

    const long height_digits = static_cast<long>(max_height.str().size());
    if (P < 15 + static_cast<long>(n) * height_digits)
        throw PrecisionError("pslq: precision too low for the requested height cap");

    PslqResult res;
    res.exclusion_bound = make_real(20);

    const Real zero = make_real(P);
    const Real eps = pow10(-(P - std::min(ctx.guard_digits, P / 3)), P);
    const Real verify_eps = eps * to_real(100, P);

    Real max_abs = make_real(P);
    for (const auto& x : xs)
        max_abs = std::max(max_abs, Real(abs(x)));
    if (max_abs == 0)
        throw std::invalid_argument("pslq inputs are all zero");

    // A zero entry is already a unit relation.
    for (std::size_t i = 0; i < n; ++i)
        if (abs(xs[i]) < eps * max_abs) {
            res.status = PslqStatus::Found;
            res.relation.assign(n, Int(0));
            res.relation[i] = 1;
            return res;
        }

    // Bailey's one-level PSLQ with gamma = sqrt(4/3).
    Real gamma = sqrt_digits(Int(4), P) / sqrt_digits(Int(3), P);
    std::vector<Real> y(n, zero);
    std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, zero));
    std::vector<std::vector<Int>> B(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        B[i][i] = 1;

    std::vector<Real> s(n, zero);
    {
        Real acc = make_real(P);
        for (std::size_t k = n; k-- > 0;) {
            acc += xs[k] * xs[k];
            s[k] = sqrt(acc);
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        y[k] = xs[k] / s[0];
    for (std::size_t k = 1; k < n; ++k)
        s[k] = s[k] / s[0];
    s[0] = to_real(1, P);

    for (std::size_t j = 0; j < n - 1; ++j) {
        H[j][j] = s[j + 1] / s[j];
        for (std::size_t i = j + 1; i < n; ++i)
            H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1]);
    }

    auto reduce_row = [&](std::size_t i, std::size_t jmax) {
        for (std::size_t j = std::min(i - 1, jmax) + 1; j-- > 0;) {
            if (H[j][j] == 0)
                continue;
            Int t = nint_int(H[i][j] / H[j][j]);
            if (t == 0)
                continue;
            Real tr = to_real(t, P);
            y[j] += tr * y[i];
            for (std::size_t k = 0; k <= j; ++k)
                H[i][k] -= tr * H[j][k];
            for (std::size_t k = 0; k < n; ++k)
                B[k][j] += t * B[k][i];
        }
    };

    for (std::size_t i = 1; i < n; ++i)
        reduce_row(i, n - 2);

    const Real norm_cap = sqrt_digits(Int(static_cast<long>(n)), P) * to_real(max_height, P);
    const long max_iter = 20000 + 400L * static_cast<long>(n) * P;

    auto finish_found = [&](std::size_t col) -> bool {
        std::vector<Int> rel(n);
        for (std::size_t k = 0; k < n; ++k)
            rel[k] = B[k][col];
        rel = normalize_relation(std::move(rel));
        Real dot = make_real(P);
        for (std::size_t k = 0; k < n; ++k)
            dot += to_real(rel[k], P) * xs[k];
        if (!(abs(dot) < verify_eps * max_abs))
            return false;
        if (height_of(rel) > max_height)
            return false;
        res.status = PslqStatus::Found;
        res.relation = std::move(rel);
        return true;
    };

    for (res.iterations = 1; res.iterations <= max_iter; ++res.iterations) {
        // Row with the largest gamma^i |H_ii|.
        std::size_t m = 0;
        {
            Real best = make_real(P), g = gamma;
            for (std::size_t i = 0; i < n - 1; ++i) {
                Real v = g * abs(H[i][i]);
                if (v > best) {
                    best = v;
                    m = i;
                }
                g *= gamma;
            }
        }

        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        for (std::size_t k = 0; k < n; ++k)
            std::swap(B[k][m], B[k][m + 1]);

        if (m < n - 2) {
            Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
            if (t0 == 0)
                throw PrecisionError("pslq: degenerate corner, raise the precision");
            Real t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
            for (std::size_t i = m; i < n; ++i) {
                Real a = H[i][m], b = H[i][m + 1];
                H[i][m] = t1 * a + t2 * b;
                H[i][m + 1] = t1 * b - t2 * a;
            }
        }

        for (std::size_t i = m + 1; i < n; ++i)
            reduce_row(i, std::min(i - 1, m + 1));

        Real hmax = make_real(P);
        for (std::size_t j = 0; j < n - 1; ++j)
            hmax = std::max(hmax, Real(abs(H[j][j])));
        if (hmax == 0)
            throw PrecisionError("pslq: H degenerated, raise the precision");
        Real bound = to_real(1, P) / hmax;
        res.exclusion_bound = at_digits(bound, 20);

        std::size_t best_i = 0;
        Real best_y = abs(y[0]);
        for (std::size_t i = 1; i < n; ++i) {
            Real v = abs(y[i]);
            if (v < best_y) {
                best_y = v;
                best_i = i;
            }
        }
        if (best_y < eps) {
            if (finish_found(best_i))
                return res;
            res.status = PslqStatus::Insufficient;
            return res;
        }

        if (bound > norm_cap) {
            res.status = PslqStatus::Excluded;
            return res;
        }
    }

    res.status = PslqStatus::Insufficient;
    return res;
}

} // namespace zident
