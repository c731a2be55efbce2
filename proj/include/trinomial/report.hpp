#pragma once

#include "trinomial/expansion.hpp"
#include "trinomial/numeric.hpp"
#include "trinomial/params.hpp"
#include "trinomial/singularity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trinomial {

enum class GridKind { Geometric, Linear };

struct ConvergenceRow {
    unsigned long n;
    Rational exact;
    Real estimate;
    Real rel_err;     // T_n / estimate - 1, signed
    Real scaled_err;  // |rel_err| * n^(J+1)
};

struct VerifyOptions {
    int order = 2;
    // 0 means "regime default": geometric 16..4096 in general, the linear
    // window 1900..2000 for the oscillatory c < 0 regime.
    unsigned long n_min = 0;
    unsigned long n_max = 0;
    std::optional<GridKind> grid;
    unsigned precision_bits = 256;
};

struct ConvergenceReport {
    TrinomialParams params;
    Regime regime = Regime::Trivial;
    int order = 0;
    std::vector<ConvergenceRow> rows;
    Real max_scaled_err;
    bool tail_bounded = false;
    std::int64_t elapsed_ms = 0;
};

// Computes exact values, evaluates the assembled expansion on the grid and
// issues the boundedness verdict: the scaled error over the top half of the
// grid must not exceed 1.05x its minimum there. For c < 0 the verdict is
// instead the root-growth test  max_n |T_n|^(1/n) within 1% of sqrt(b^2-4c).
ConvergenceReport run_verify(const TrinomialParams& params, const VerifyOptions& options);

// Deterministic scientific form with `digits` significant digits ("0" for
// zero); used verbatim by both renderings so their numeric fields agree.
std::string format_real(const Real& value, unsigned digits);

// Columns: n, exact, estimate, rel_err, scaled_err. RFC-4180, header row.
std::string render_csv(const ConvergenceReport& report, unsigned digits);
std::string render_json(const ConvergenceReport& report, unsigned digits);

}  // namespace trinomial
