#pragma once

#include "trinomial/quadext.hpp"
#include "trinomial/rational.hpp"

#include <string>

namespace trinomial {

// base^exponent, held symbolically until numeric evaluation. Used for the
// prefactors (like (1-r)^(-1/2) or c^(-1/4)) that are not elements of the
// series coefficient field.
struct RadicalScalar {
    QuadExt base;
    Rational exponent;

    static RadicalScalar one(Rational radicand) {
        return RadicalScalar{QuadExt::one(std::move(radicand)), Rational(1)};
    }

    std::string str() const;
};

}  // namespace trinomial
