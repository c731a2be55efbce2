#pragma once

#include "trinomial/quadext.hpp"
#include "trinomial/rational.hpp"

#include <vector>

namespace trinomial {

// B_0 .. B_count (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(int count);

// Coefficients e_1..e_J of the binomial-coefficient asymptotic expansion
//   C(n+alpha-1, n) = n^(alpha-1)/Gamma(alpha) * (1 + sum_j e_j n^-j + O(n^-J-1)).
// Generated to arbitrary order from the Stirling series of
// log Gamma(n+alpha) - log Gamma(n+1), composed and exponentiated as a formal
// series in 1/n with exact rational coefficients.
struct TranslationCoeffs {
    Rational alpha;
    std::vector<Rational> coeffs;  // e_1 .. e_J
};

// Throws std::domain_error for alpha in {0, -1, -2, ...} (1/Gamma(alpha) = 0
// makes the normalised form meaningless) and std::invalid_argument for J < 1.
TranslationCoeffs binom_asym_coeffs(const Rational& alpha, int order);

// Gamma(alpha) = r * sqrt(pi) for half-integer alpha; returns the exact r,
// walked from Gamma(1/2) = sqrt(pi) via the functional equation.
Rational gamma_half_integer(const Rational& alpha);

// One translated Puiseux term:  coeff * (1 - t/t1)^(-alpha)  becomes
//   scalar * pi^pi_power * growth^n * n^(n_exponent) * (1 + sum_j corrections[j-1] n^-j).
struct TranslatedTerm {
    QuadExt growth;
    Rational n_exponent;  // alpha - 1
    QuadExt scalar;       // coeff / (Gamma(alpha) pi-part removed)
    Rational pi_power;    // -1/2 for half-integer alpha, 0 for integer alpha
    std::vector<Rational> corrections;
};

// alpha must be a half-integer or a positive integer so the Gamma
// normalisation stays exact; anything else throws std::domain_error.
TranslatedTerm translate_term(const QuadExt& coeff, const Rational& alpha, const QuadExt& growth,
                              int order);

}  // namespace trinomial
