#include "trinomial/radical.hpp"

namespace trinomial {

std::string RadicalScalar::str() const {
    if (exponent == 1) return base.str();
    return "(" + base.str() + ")^(" + to_string(exponent) + ")";
}

}  // namespace trinomial
