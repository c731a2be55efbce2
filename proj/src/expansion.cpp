#include "trinomial/expansion.hpp"

#include "trinomial/translate.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace trinomial {

namespace {

// Regroup prefactor * sum_k s_k u^(k-1/2) into a single series in 1/n:
//   g_m = sum_{k<=m} s_k / r_k * e_{m-k}(1/2 - k),   Gamma(1/2-k) = r_k sqrt(pi).
std::vector<QuadExt> regroup_corrections(const PowerSeries& local_series, int order) {
    const Rational& c = local_series.radicand();
    const std::size_t J = static_cast<std::size_t>(order);
    std::vector<Rational> inv_gamma(J + 1);
    std::vector<std::vector<Rational>> e(J + 1);
    for (std::size_t k = 0; k <= J; ++k) {
        const Rational alpha = Rational(1, 2) - Rational(k);
        inv_gamma[k] = Rational(1) / gamma_half_integer(alpha);
        if (J - k >= 1) e[k] = binom_asym_coeffs(alpha, static_cast<int>(J - k)).coeffs;
    }
    std::vector<QuadExt> g;
    g.reserve(J + 1);
    for (std::size_t m = 0; m <= J; ++m) {
        QuadExt acc = QuadExt::zero(c);
        for (std::size_t k = 0; k <= m; ++k) {
            const Rational e_mk = m == k ? Rational(1) : e[k][m - k - 1];
            acc += local_series[k] * (inv_gamma[k] * e_mk);
        }
        g.push_back(acc);
    }
    return g;
}

Real minus_infinity(unsigned bits) {
    Real out;
    mpfr_set_prec(out.backend().data(), bits);
    mpfr_set_inf(out.backend().data(), -1);
    return out;
}

}  // namespace

AsymptoticExpansion assemble_expansion(const TrinomialParams& params, int order) {
    if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
    const SymmetryReduction reduced = symmetry_reduce(params);
    const Regime regime = classify_regime(params);
    const TrinomialParams& p = reduced.params;

    AsymptoticExpansion out;
    out.params = params;
    out.regime = regime;

    switch (regime) {
        case Regime::Trivial:
            throw std::domain_error("the trivial regime has no asymptotic expansion");
        case Regime::CZero: {
            out.negate_odd_n = reduced.negate_odd_n;
            out.growth = QuadExt::from_rational(p.b, p.c);
            out.poly_exponent = 0;
            out.prefactor = RadicalScalar::one(p.c);
            out.pi_power = 0;
            out.corrections = {QuadExt::one(p.c)};
            return out;
        }
        case Regime::ConjugatePair: {
            // Leading-order cosine form only; the phase is taken from the
            // original (unreduced) b, which also absorbs the (-1)^n flip.
            const QuadExt s = QuadExt::sqrt_radicand(params.c);
            const QuadExt bq = QuadExt::from_rational(params.b, params.c);
            const QuadExt inv1 = bq + Rational(2) * s;
            const QuadExt r = (bq - Rational(2) * s) / inv1;
            out.growth = inv1;
            out.poly_exponent = Rational(-1, 2);
            out.prefactor = RadicalScalar{QuadExt::one(params.c) - r, Rational(-1, 2)};
            out.pi_power = Rational(-1, 2);
            out.corrections = {QuadExt::one(params.c)};
            out.oscillation = Oscillation{
                RadicalScalar{QuadExt::from_rational(-params.c, params.c), Rational(-1, 4)}, inv1};
            return out;
        }
        default:
            break;
    }

    SingularityData data = local_expansion(p, 0, order);
    out.negate_odd_n = reduced.negate_odd_n;
    out.growth = data.inv_location;
    out.poly_exponent = Rational(-1, 2);
    out.pi_power = Rational(-1, 2);
    out.prefactor = data.prefactor;
    out.corrections = regroup_corrections(data.local_series, order);
    if (regime == Regime::SymmetricPair) {
        // the mirrored singularity doubles even coefficients and cancels odd
        // ones; 2 (1-r)^(-1/2) = ((1-r)/4)^(-1/2)
        out.zero_at_odd_n = true;
        out.prefactor.base /= Rational(4);
    }
    return out;
}

Real phase_phi(const TrinomialParams& params, unsigned precision_bits) {
    if (params.c >= 0) throw std::domain_error("the phase is defined only for c < 0");
    const unsigned wb = precision_bits + 32;
    PrecisionGuard guard(wb);
    const Real phi = atan2(2 * sqrt(to_real(-params.c, wb)), to_real(params.b, wb));
    return round_to_bits(phi, precision_bits);
}

ExpansionValue eval_expansion(const AsymptoticExpansion& expansion, unsigned long n,
                              unsigned precision_bits) {
    if (n < 1) throw std::domain_error("evaluation needs n >= 1");
    if (precision_bits < 64) throw std::domain_error("precision below 64 bits");
    const unsigned wb = precision_bits + 32;
    PrecisionGuard guard(wb);

    if (expansion.zero_at_odd_n && n % 2 == 1) {
        return {round_to_bits(Real(0), precision_bits), minus_infinity(precision_bits),
                Rational(0)};
    }

    if (expansion.regime == Regime::CZero) {
        // geometric T_n = b^n, exact as a rational
        Rational exact = rational_pow(expansion.params.b, static_cast<long>(n));
        const Real log_abs =
            Real(n) * log(abs(to_real(expansion.params.b, wb)));
        ExpansionValue out{to_real(exact, precision_bits), round_to_bits(log_abs, precision_bits),
                           std::move(exact)};
        return out;
    }

    const Real nn(n);
    const Real pi = pi_bits(wb);

    if (expansion.regime == Regime::ConjugatePair) {
        const Real d = to_real(expansion.params.discriminant(), wb);
        const Real mc = to_real(-expansion.params.c, wb);
        const Real phi = atan2(2 * sqrt(mc), to_real(expansion.params.b, wb));
        const Real quarter(Rational(1, 4));
        const Real modulus =
            pow(d, nn / 2 + quarter) / (pow(mc, quarter) * sqrt(pi * nn));
        const Real cosine = cos((nn + Real(Rational(1, 2))) * phi - pi / 4);
        const Real value = modulus * cosine;
        const Real log_abs = (nn / 2 + quarter) * log(d) - quarter * log(mc) -
                             log(pi * nn) / 2 + log(abs(cosine));
        return {round_to_bits(value, precision_bits), round_to_bits(log_abs, precision_bits), {}};
    }

    // sign * prefactor * rho^n * n^pe * pi^pp * sum_j g_j n^-j
    Real series(0);
    for (std::size_t j = expansion.corrections.size(); j-- > 0;) {
        series = series / nn + numeric_eval(expansion.corrections[j], wb);
    }
    const Real rho = numeric_eval(expansion.growth, wb);
    const Real pref = numeric_eval(expansion.prefactor, wb);
    const Real pe = to_real(expansion.poly_exponent, wb);
    const Real pp = to_real(expansion.pi_power, wb);
    Real value = pref * pow(rho, n) * pow(nn, pe) * pow(pi, pp) * series;
    Real log_abs = log(pref) + nn * log(rho) + pe * log(nn) + pp * log(pi) + log(abs(series));
    const bool negate = expansion.negate_odd_n && n % 2 == 1;
    if (negate) value = -value;
    return {round_to_bits(value, precision_bits), round_to_bits(log_abs, precision_bits), {}};
}

}  // namespace trinomial
