#include "trinomial/singularity.hpp"

#include <stdexcept>

namespace trinomial {

std::string_view regime_tag(Regime regime) {
    switch (regime) {
        case Regime::Trivial: return "TRIVIAL";
        case Regime::CZero: return "C_ZERO";
        case Regime::DZero: return "D_ZERO";
        case Regime::SingleDominant: return "SINGLE_DOMINANT";
        case Regime::SymmetricPair: return "SYMMETRIC_PAIR";
        case Regime::ConjugatePair: return "CONJUGATE_PAIR";
    }
    return "UNKNOWN";
}

Regime classify_regime(const TrinomialParams& params) {
    const TrinomialParams p = symmetry_reduce(params).params;
    if (p.b == 0 && p.c == 0) return Regime::Trivial;
    if (p.c == 0) return Regime::CZero;
    if (p.discriminant() == 0) return Regime::DZero;
    if (p.c < 0) return Regime::ConjugatePair;
    if (p.b == 0) return Regime::SymmetricPair;
    return Regime::SingleDominant;
}

std::vector<SingularityLocation> locate_singularities(const TrinomialParams& params) {
    const TrinomialParams p = symmetry_reduce(params).params;
    const Regime regime = classify_regime(p);
    const Rational& b = p.b;
    const Rational& c = p.c;
    switch (regime) {
        case Regime::Trivial:
            throw std::domain_error("constant generating function has no singularity");
        case Regime::CZero:
            // 1 - 2bt + b^2 t^2 = (1 - bt)^2: simple pole at t = 1/b
            return {{QuadExt::from_rational(b, c), true}};
        case Regime::DZero:
            // 1 - 2bt: single branch point at t = 1/(2b)
            return {{QuadExt::from_rational(2 * b, c), true}};
        default:
            break;
    }
    // 1 - 2bt + d t^2 = (1 - t/t1)(1 - t/t2) with 1/t1,2 = b +- 2 sqrt(c).
    const QuadExt s = QuadExt::sqrt_radicand(c);
    const QuadExt bq = QuadExt::from_rational(b, c);
    const QuadExt inv1 = bq + Rational(2) * s;
    const QuadExt inv2 = bq - Rational(2) * s;
    // |b + 2 sqrt(c)| > |b - 2 sqrt(c)| exactly when b sqrt(c) > 0, which
    // after reduction is just b > 0; that is the SingleDominant case.
    const bool single = regime == Regime::SingleDominant;
    return {{inv1, true}, {inv2, !single}};
}

SingularityData local_expansion(const TrinomialParams& params, std::size_t which, int order) {
    if (order < 0) throw std::invalid_argument("expansion order must be nonnegative");
    const TrinomialParams p = symmetry_reduce(params).params;
    const Regime regime = classify_regime(p);
    const Rational& b = p.b;
    const Rational& c = p.c;
    const std::size_t terms = static_cast<std::size_t>(order) + 1;

    switch (regime) {
        case Regime::Trivial:
            throw std::domain_error("constant generating function has no singularity");
        case Regime::CZero: {
            if (which != 0) throw std::out_of_range("the c = 0 pole is the only singularity");
            return {QuadExt::from_rational(b, c), Rational(-1), RadicalScalar::one(c),
                    PowerSeries::one(c, terms), true};
        }
        case Regime::DZero: {
            if (which != 0) throw std::out_of_range("the d = 0 regime has a single singularity");
            // F = (1 - 2bt)^(-1/2) exactly: h == 1
            return {QuadExt::from_rational(2 * b, c), Rational(-1, 2), RadicalScalar::one(c),
                    PowerSeries::one(c, terms), true};
        }
        default:
            break;
    }
    if (which > 1) throw std::out_of_range("two singularities in this regime");

    // Around t_i, with u = 1 - t/t_i and r = t_i/t_other:
    //   F(t) = (1-r)^(-1/2) u^(-1/2) (1 + (r/(1-r)) u)^(-1/2)
    const QuadExt s = QuadExt::sqrt_radicand(c);
    const QuadExt bq = QuadExt::from_rational(b, c);
    const QuadExt inv1 = bq + Rational(2) * s;
    const QuadExt inv2 = bq - Rational(2) * s;
    const QuadExt& inv_this = which == 0 ? inv1 : inv2;
    const QuadExt& inv_other = which == 0 ? inv2 : inv1;
    const QuadExt r = inv_other / inv_this;  // = t_this / t_other
    const QuadExt one_minus_r = QuadExt::one(c) - r;
    const QuadExt rho_hat = r / one_minus_r;

    PowerSeries series = rsqrt(PowerSeries::linear(QuadExt::one(c), rho_hat, terms));
    const bool dominant = regime == Regime::SingleDominant ? which == 0 : true;
    return {inv_this, Rational(-1, 2), RadicalScalar{one_minus_r, Rational(-1, 2)},
            std::move(series), dominant};
}

}  // namespace trinomial
