#pragma once

#include "trinomial/params.hpp"
#include "trinomial/power_series.hpp"
#include "trinomial/radical.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace trinomial {

// Singularity structure of F(t) = 1/sqrt(1 - 2bt + (b^2-4c) t^2).
// The whole engine works on the symmetry-reduced parameters (b >= 0); the
// (-1)^n flip for b < 0 is applied downstream.
enum class Regime {
    Trivial,         // b = c = 0, F constant
    CZero,           // c = 0: simple pole, T_n = b^n
    DZero,           // d = 0: single square-root singularity, local series 1
    SingleDominant,  // c > 0, b != 0, d != 0: t1 strictly dominant
    SymmetricPair,   // b = 0, c > 0: +-t1 of equal modulus
    ConjugatePair,   // c < 0: complex-conjugate dominant pair
};

// Wire/display tag, e.g. "SINGLE_DOMINANT".
std::string_view regime_tag(Regime regime);

Regime classify_regime(const TrinomialParams& params);

struct SingularityLocation {
    QuadExt inv_location;  // 1/t_i = b + 2s or b - 2s
    bool dominant;
};

// Throws std::domain_error for the Trivial regime (F has no singularity).
std::vector<SingularityLocation> locate_singularities(const TrinomialParams& params);

// Exact local Puiseux data at singularity t_i in the variable u = 1 - t/t_i:
//   F(t) = prefactor * u^exponent * local_series(u) + O(u^(order + exponent + 1))
// local_series has constant term 1; the normalisation sits in the prefactor.
struct SingularityData {
    QuadExt inv_location;
    Rational exponent;        // -1/2 for branch points, -1 for the c = 0 pole
    RadicalScalar prefactor;  // (1-r)^(-1/2) with r = t_this/t_other
    PowerSeries local_series;
    bool dominant;
};

// `which` is 0 for t1, 1 for t2 (out of range for single-singularity
// regimes throws std::out_of_range). `order` is the number of series terms
// beyond the constant.
SingularityData local_expansion(const TrinomialParams& params, std::size_t which, int order);

}  // namespace trinomial
