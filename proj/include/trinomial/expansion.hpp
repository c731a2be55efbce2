#pragma once

#include "trinomial/numeric.hpp"
#include "trinomial/params.hpp"
#include "trinomial/radical.hpp"
#include "trinomial/singularity.hpp"

#include <optional>
#include <vector>

namespace trinomial {

// Oscillatory data for the conjugate-pair regime (c < 0): the value is
//   d^(n/2+1/4) / ((-c)^(1/4) sqrt(pi n)) * cos((n+1/2) phi - pi/4)
// with e^(i phi) = (b + 2i sqrt(-c)) / sqrt(d), d = b^2 - 4c.
struct Oscillation {
    RadicalScalar quartic_prefactor;  // (-c)^(-1/4)
    QuadExt phase_unit;               // b + 2s over radicand c < 0
};

// Asymptotics of T_n assembled from the translated Puiseux terms:
//   T_n ~ sign * prefactor * growth^n * n^poly_exponent * pi^pi_power
//              * sum_j corrections[j] n^-j
// per dominant singularity, with the symmetric pair folded into a doubled
// prefactor plus parity mask, and the conjugate pair into the cosine form.
struct AsymptoticExpansion {
    TrinomialParams params;  // original, unreduced
    Regime regime = Regime::Trivial;
    bool negate_odd_n = false;  // (-1)^n flip from symmetry reduction
    bool zero_at_odd_n = false; // parity mask of the b = 0 regime
    QuadExt growth;             // rho = 1/t1
    Rational poly_exponent;     // -1/2, or 0 for the c = 0 pole
    RadicalScalar prefactor;
    Rational pi_power;                // -1/2, or 0 for the c = 0 pole
    std::vector<QuadExt> corrections; // g_0..g_J, exact in Q(sqrt(c)), g_0 = 1
    std::optional<Oscillation> oscillation;
};

// Throws std::domain_error for the Trivial regime. For the conjugate pair
// only the leading-order cosine form is assembled (higher oscillatory
// corrections are out of scope), so `order` is effectively 0 there.
AsymptoticExpansion assemble_expansion(const TrinomialParams& params, int order);

// phi = atan2(2 sqrt(-c), b) in (0, pi); requires c < 0.
Real phase_phi(const TrinomialParams& params, unsigned precision_bits);

struct ExpansionValue {
    Real value;
    Real log_abs;
    // Present when the estimate is exact as a rational: the c = 0 pole
    // (geometric T_n = b^n) and the parity zeros at b = 0, odd n.
    std::optional<Rational> exact;
};

// Evaluates the expansion at n >= 1 with `precision_bits` >= 64 (both
// violations throw std::domain_error). log_abs is computed in log-space and
// stays finite far beyond the floating-point range of value itself.
ExpansionValue eval_expansion(const AsymptoticExpansion& expansion, unsigned long n,
                              unsigned precision_bits);

}  // namespace trinomial
