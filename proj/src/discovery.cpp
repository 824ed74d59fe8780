#include "zident/discovery.hpp"

#include "zident/errors.hpp"

namespace zident {

namespace {

Real combo_residual(const SeriesSpec& spec, const std::vector<BasisEntry>& basis,
                    const std::vector<Rat>& coeffs, int digits, long terms_max) {
    Real s = eval_series_digits(spec, digits, terms_max).value;
    Real acc = make_real(digits);
    for (std::size_t i = 0; i < basis.size(); ++i)
        acc += to_real(coeffs[i], digits) * expr_eval_digits(basis[i].expr, digits);
    return abs(s - acc);
}

} // namespace

DiscoveryResult discover(const SeriesSpec& spec, const std::vector<BasisEntry>& basis,
                         const PrecisionContext& ctx, const Int& max_height,
                         long terms_max) {
    spec.validate();
    if (basis.empty())
        throw std::invalid_argument("discover needs a nonempty basis");
    if (ctx.target_digits < 20)
        throw std::invalid_argument("discover needs at least 20 target digits");
    for (const auto& b : basis)
        if (!b.expr)
            throw std::invalid_argument("basis entry without an expression");

    PslqStatus last_status = PslqStatus::Insufficient;
    Real last_bound = make_real(20);

    int digits = ctx.target_digits;
    for (int attempt = 0; attempt < 2; ++attempt, digits *= 2) {
        std::vector<Real> xs;
        xs.reserve(basis.size() + 1);
        xs.push_back(eval_series_digits(spec, digits, terms_max).value);
        for (const auto& b : basis)
            xs.push_back(expr_eval_digits(b.expr, digits));

        PrecisionContext pctx(digits, ctx.guard_digits);
        PslqResult pr;
        try {
            pr = pslq(xs, pctx, max_height);
        } catch (const PrecisionError&) {
            // height cap does not fit this precision; escalate instead
            last_status = PslqStatus::Insufficient;
            continue;
        }
        last_status = pr.status;
        last_bound = pr.exclusion_bound;
        if (pr.status != PslqStatus::Found)
            continue;
        if (pr.relation[0] == 0)
            continue; // relation among the basis constants alone

        std::vector<Rat> coeffs;
        coeffs.reserve(basis.size());
        for (std::size_t i = 1; i < pr.relation.size(); ++i)
            coeffs.push_back(Rat(-pr.relation[i]) / Rat(pr.relation[0]));

        const int verify_digits = 2 * digits;
        Real resid = combo_residual(spec, basis, coeffs, verify_digits, terms_max);
        long certified = 0;
        if (resid == 0) {
            certified = verify_digits;
        } else {
            long e = mpfr_get_exp(resid.backend().data());
            // digits certified ~ -log10 |resid|
            certified = static_cast<long>(-static_cast<double>(e) * 0.30102999566398) - 1;
            if (certified < 0)
                certified = 0;
            if (certified > verify_digits)
                certified = verify_digits;
        }
        // A spurious relation matches only to ~digits; a real one re-verifies
        // almost to the doubled precision.
        if (certified < digits + 15)
            continue;

        DiscoveryResult out;
        out.coefficients = std::move(coeffs);
        out.residual = at_digits(resid, 20);
        out.certified_digits = static_cast<int>(certified);
        out.digits_used = digits;
        out.pslq_iterations = pr.iterations;
        return out;
    }

    const char* why = last_status == PslqStatus::Excluded
                          ? "no relation exists within the height cap"
                          : "relation search exhausted its budget";
    throw NoRelationError(std::string("discover: ") + why, last_status, last_bound);
}

CertifyReport certify(const SeriesSpec& spec, const ExprPtr& rhs, int low_digits,
                      int high_digits, long terms_max) {
    spec.validate();
    if (!rhs)
        throw std::invalid_argument("certify needs a right-hand side");
    if (low_digits < 10 || high_digits < 2 * low_digits)
        throw std::invalid_argument("certify needs low_digits >= 10 and high >= 2*low");

    CertifyReport rep;
    rep.low_digits = low_digits;
    rep.high_digits = high_digits;

    {
        const int D = low_digits + 10;
        SeriesEval ev = eval_series_digits(spec, D, terms_max);
        Real rhs_v = expr_eval_digits(rhs, D);
        rep.residual_low = at_digits(abs(ev.value - rhs_v), 15);
        rep.terms_low = ev.terms_used;
    }
    {
        const int D = high_digits + 10;
        SeriesEval ev = eval_series_digits(spec, D, terms_max);
        Real rhs_v = expr_eval_digits(rhs, D);
        rep.residual_high = at_digits(abs(ev.value - rhs_v), 15);
        rep.terms_high = ev.terms_used;
    }

    rep.pass = rep.residual_high < pow10(-(high_digits - 15), 30);
    return rep;
}

} // namespace zident
