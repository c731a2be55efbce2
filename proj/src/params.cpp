#include "trinomial/params.hpp"

namespace trinomial {

bool operator==(const TrinomialParams& a, const TrinomialParams& b) {
    return a.b == b.b && a.c == b.c;
}

SymmetryReduction symmetry_reduce(const TrinomialParams& params) {
    if (params.b < 0) {
        return {TrinomialParams{-params.b, params.c}, true};
    }
    return {params, false};
}

}  // namespace trinomial
