#pragma once

#include "trinomial/params.hpp"
#include "trinomial/rational.hpp"

#include <vector>

namespace trinomial {

// Four independent exact routes to T_n(b,c). They must agree exactly on all
// inputs; the CLI's `exact --method all` and the test suite enforce this.

// Multinomial sum  T_n = sum_k  n!/(k! k! (n-2k)!) b^(n-2k) c^k.
Rational tn_direct_sum(const TrinomialParams& params, unsigned long n);

// Coefficient of x^n in (x^2 + b x + c)^n via repeated squaring of the dense
// coefficient array, truncated at degree n.
Rational tn_poly_power(const TrinomialParams& params, unsigned long n);

// Three-term recurrence  n T_n = (2n-1) b T_{n-1} - (n-1) d T_{n-2} with
// T_0 = 1, T_1 = b. For integer b, c every division by n must be exact;
// an inexact division throws std::logic_error (internal consistency check).
std::vector<Rational> tn_recurrence(const TrinomialParams& params, unsigned long n_max);

// Taylor coefficients of the generating function 1/sqrt(1 - 2bt + d t^2),
// extracted with the exact power-series reciprocal square root.
std::vector<Rational> tn_series(const TrinomialParams& params, unsigned long n_max);

}  // namespace trinomial
