#include "zident/series.hpp"

#include <map>

#include "zident/binomial.hpp"
#include "zident/errors.hpp"

namespace zident {

void SeriesSpec::validate() const {
    if (terms.empty())
        throw DomainError("series spec has no terms");
    for (const auto& t : terms) {
        if (t.coeff == 0)
            throw DomainError("series term with zero coefficient");
        if (t.harmonic_order == 1)
            throw DomainError("series term with harmonic order 1 is not supported");
        if (t.harmonic_order < 0 || t.k_power < 0)
            throw DomainError("series term with negative exponent");
        if (t.harmonic_order == 0 && t.k_power < 2)
            throw DomainError("series term needs k_power >= 2 when no harmonic factor");
        if (t.harmonic_order + t.k_power > 9)
            throw DomainError("series term weight above the supported range");
    }
}

Rat term_exact(const SeriesSpec& spec, long k) {
    spec.validate();
    if (k < 1)
        throw DomainError("series terms start at k = 1");
    Rat num(0);
    for (const auto& t : spec.terms) {
        Rat part = t.coeff;
        if (t.harmonic_order > 0) {
            Rat h(0);
            for (long i = 1; i <= k; ++i)
                h += Rat(1) / Rat(int_pow(Int(i), static_cast<unsigned>(t.harmonic_order)));
            part *= h;
        }
        if (t.k_power > 0)
            part /= Rat(int_pow(Int(k), static_cast<unsigned>(t.k_power)));
        num += part;
    }
    return num / Rat(central_binomial(k));
}

TermSource summand_source(const SeriesSpec& spec, long shift) {
    spec.validate();
    return [spec, shift](long k) {
        long idx = k + shift;
        if (idx == 0)
            return Rat(0);
        return term_exact(spec, idx);
    };
}

Real tail_bound(const SeriesSpec& spec, long k0, int digits) {
    spec.validate();
    if (k0 < 1)
        throw DomainError("tail bound needs k0 >= 1");
    const int W = digits < 20 ? 20 : digits;
    // |summand(k)| <= sum_t |c_t| * hf_t * k^(1/2 - c_t) * 2 * 4^(-k)
    // using C(2k,k) >= 4^k / (2 sqrt(k)) and H_k^(a) < zeta(2) < 2 for a >= 2.
    Real four_pow = to_real(4, W);
    mpfr_pow_si(four_pow.backend().data(), four_pow.backend().data(), -k0, MPFR_RNDN);
    Real k1 = to_real(k0 + 1, W);
    Real sqrt_k1 = sqrt(k1);
    Real total = make_real(W);
    for (const auto& t : spec.terms) {
        Rat c = t.coeff < 0 ? Rat(-t.coeff) : t.coeff;
        if (t.harmonic_order >= 2)
            c *= 2;
        Real s;
        if (t.k_power >= 1) {
            // sum_{k>k0} k^(1/2-c) 4^(-k) <= (k0+1)^(1/2-c) * 4^(-k0) / 3
            Real p = k1;
            mpfr_pow_si(p.backend().data(), p.backend().data(), -t.k_power, MPFR_RNDN);
            s = p * sqrt_k1 * four_pow / to_real(3, W);
        } else {
            // sum_{k>k0} sqrt(k) 4^(-k) <= (3 k0 + 4)/(9 sqrt(k0+1)) * 4^(-k0)
            s = to_real(3 * k0 + 4, W) * four_pow / (to_real(9, W) * sqrt_k1);
        }
        total += to_real(c, W) * to_real(2, W) * s;
    }
    total *= to_real(Rat(101, 100), W);
    return at_digits(total, digits);
}

SeriesEval eval_series_digits(const SeriesSpec& spec, int digits, long terms_max) {
    spec.validate();
    if (terms_max < 2)
        throw std::invalid_argument("terms_max must be >= 2");
    const int W = digits + 10;
    Real cutoff = pow10(-(digits + 6), 30);

    long k0 = 64;
    while (tail_bound(spec, k0, 30) >= cutoff) {
        if (k0 >= terms_max) {
            k0 = terms_max;
            if (tail_bound(spec, k0, 30) >= cutoff)
                throw PrecisionError("eval_series: term budget too small for requested digits");
            break;
        }
        k0 = std::min(k0 * 2, terms_max);
    }

    const long k_exact = std::min<long>(k0, 80);
    std::map<int, Rat> h_exact;
    for (const auto& t : spec.terms)
        if (t.harmonic_order > 0)
            h_exact.emplace(t.harmonic_order, Rat(0));

    Rat exact_sum(0);
    for (long k = 1; k <= k_exact; ++k) {
        for (auto& [a, h] : h_exact)
            h += Rat(1) / Rat(int_pow(Int(k), static_cast<unsigned>(a)));
        Rat num(0);
        for (const auto& t : spec.terms) {
            Rat part = t.coeff;
            if (t.harmonic_order > 0)
                part *= h_exact[t.harmonic_order];
            if (t.k_power > 0)
                part /= Rat(int_pow(Int(k), static_cast<unsigned>(t.k_power)));
            num += part;
        }
        exact_sum += num / Rat(central_binomial(k));
    }

    Real sum = to_real(exact_sum, W);
    std::map<int, Real> h_float;
    for (const auto& [a, h] : h_exact)
        h_float.emplace(a, to_real(h, W));
    for (long k = k_exact + 1; k <= k0; ++k) {
        for (auto& [a, h] : h_float)
            h += to_real(Rat(1) / Rat(int_pow(Int(k), static_cast<unsigned>(a))), W);
        Real num = make_real(W);
        for (const auto& t : spec.terms) {
            Real part = to_real(t.coeff, W);
            if (t.harmonic_order > 0)
                part *= h_float[t.harmonic_order];
            if (t.k_power > 0)
                part /= to_real(int_pow(Int(k), static_cast<unsigned>(t.k_power)), W);
            num += part;
        }
        sum += num / to_real(central_binomial(k), W);
    }

    SeriesEval out;
    out.terms_used = k0;
    Real slop = to_real(k0 + 1, 30) * pow10(-W + 2, 30);
    out.tail = at_digits(tail_bound(spec, k0, 30) + slop, 20);
    out.value = at_digits(sum, digits);
    return out;
}

SeriesEval eval_series(const SeriesSpec& spec, const PrecisionContext& ctx, long terms_max) {
    SeriesEval ev = eval_series_digits(spec, ctx.working(), terms_max);
    ev.value = at_digits(ev.value, ctx.target_digits);
    return ev;
}

} // namespace zident
