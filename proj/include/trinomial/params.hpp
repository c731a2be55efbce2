#pragma once

#include "trinomial/rational.hpp"

namespace trinomial {

// The pair (b, c) of T_n(b,c) = [x^n] (x^2 + b x + c)^n. The discriminant
// d = b^2 - 4c is always derived, never stored.
struct TrinomialParams {
    Rational b;
    Rational c;

    Rational discriminant() const { return b * b - 4 * c; }
};

bool operator==(const TrinomialParams& a, const TrinomialParams& b);

// T_n(b,c) = (-1)^n T_n(-b,c): canonical form has b >= 0 and a flag telling
// the caller to negate odd-index values.
struct SymmetryReduction {
    TrinomialParams params;
    bool negate_odd_n;
};

SymmetryReduction symmetry_reduce(const TrinomialParams& params);

}  // namespace trinomial
