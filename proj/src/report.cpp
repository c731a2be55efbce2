#include "trinomial/report.hpp"

#include "trinomial/exact.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace trinomial {

namespace {

std::vector<unsigned long> make_grid(GridKind kind, unsigned long n_min, unsigned long n_max) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("empty verification grid");
    std::vector<unsigned long> grid;
    if (kind == GridKind::Geometric) {
        for (unsigned long n = n_min; n <= n_max; n *= 2) grid.push_back(n);
    } else {
        grid.reserve(n_max - n_min + 1);
        for (unsigned long n = n_min; n <= n_max; ++n) grid.push_back(n);
    }
    return grid;
}

// scaled error over the top half of the grid must stay within 5% of its
// minimum there; a wrong convergence order grows or decays geometrically
// across the half and fails by a wide margin
bool scaled_tail_bounded(const std::vector<ConvergenceRow>& rows) {
    if (rows.empty()) return false;
    const std::size_t start = rows.size() / 2;
    Real lo = rows[start].scaled_err;
    Real hi = rows[start].scaled_err;
    for (std::size_t i = start; i < rows.size(); ++i) {
        if (rows[i].scaled_err < lo) lo = rows[i].scaled_err;
        if (rows[i].scaled_err > hi) hi = rows[i].scaled_err;
    }
    return hi <= lo * Real(21) / Real(20);
}

// oscillatory verdict: max_n |T_n|^(1/n) within 1% of sqrt(b^2 - 4c)
bool root_growth_bounded(const std::vector<ConvergenceRow>& rows, const TrinomialParams& params,
                         unsigned bits) {
    PrecisionGuard guard(bits);
    Real best(0);
    for (const ConvergenceRow& row : rows) {
        if (row.exact == 0) continue;
        Real t = abs(to_real(row.exact, bits));
        Real root = exp(log(t) / Real(row.n));
        if (root > best) best = root;
    }
    const Real target = sqrt(to_real(params.discriminant(), bits));
    return abs(best - target) <= target / 100;
}

}  // namespace

ConvergenceReport run_verify(const TrinomialParams& params, const VerifyOptions& options) {
    const auto t_start = std::chrono::steady_clock::now();
    const Regime regime = classify_regime(params);
    if (regime == Regime::Trivial) {
        throw std::domain_error("the trivial regime has nothing to verify");
    }
    const bool oscillatory = regime == Regime::ConjugatePair;
    // only the leading-order cosine form exists for c < 0
    const int order = oscillatory ? 0 : options.order;
    const unsigned long n_min = options.n_min != 0 ? options.n_min : (oscillatory ? 1900 : 16);
    const unsigned long n_max = options.n_max != 0 ? options.n_max : (oscillatory ? 2000 : 4096);
    const GridKind grid_kind =
        options.grid.value_or(oscillatory ? GridKind::Linear : GridKind::Geometric);
    const unsigned bits = options.precision_bits;
    if (bits < 64) throw std::domain_error("precision below 64 bits");

    const std::vector<unsigned long> grid = make_grid(grid_kind, n_min, n_max);
    const std::vector<Rational> exact = tn_recurrence(params, n_max);
    const AsymptoticExpansion expansion = assemble_expansion(params, order);

    const unsigned wb = bits + 32;
    ConvergenceReport report;
    report.params = params;
    report.regime = regime;
    report.order = order;
    report.rows.reserve(grid.size());

    PrecisionGuard guard(wb);
    Real max_scaled(0);
    for (unsigned long n : grid) {
        const ExpansionValue ev = eval_expansion(expansion, n, bits);
        const Rational& t = exact[n];
        Real rel;
        if (ev.exact.has_value()) {
            if (t == *ev.exact) {
                rel = 0;
            } else if (*ev.exact == 0) {
                rel = to_real(t, wb) / ev.value - 1;
            } else {
                rel = to_real((t - *ev.exact) / *ev.exact, wb);
            }
        } else {
            rel = to_real(t, wb) / ev.value - 1;
        }
        Real scaled = abs(rel) * pow(Real(n), order + 1);
        if (scaled > max_scaled) max_scaled = scaled;
        report.rows.push_back({n, t, ev.value, round_to_bits(rel, bits), round_to_bits(scaled, bits)});
    }
    report.max_scaled_err = round_to_bits(max_scaled, bits);
    report.tail_bounded = oscillatory ? root_growth_bounded(report.rows, params, wb)
                                      : scaled_tail_bounded(report.rows);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t_start)
                            .count();
    return report;
}

std::string format_real(const Real& value, unsigned digits) {
    if (digits == 0) throw std::invalid_argument("need at least one significant digit");
    mpfr_srcptr v = value.backend().data();
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v)) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v, MPFR_RNDN);
    std::string digits_str(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!digits_str.empty() && digits_str.front() == '-') {
        sign = "-";
        digits_str.erase(digits_str.begin());
    }
    // value = 0.digits * 10^exp10
    std::string mantissa = digits_str.substr(0, 1);
    if (digits_str.size() > 1) mantissa += "." + digits_str.substr(1);
    return sign + mantissa + "e" + std::to_string(static_cast<long long>(exp10) - 1);
}

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char ch : raw) {
        quoted += ch;
        if (ch == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string render_csv(const ConvergenceReport& report, unsigned digits) {
    std::ostringstream out;
    out << "n,exact,estimate,rel_err,scaled_err\r\n";
    for (const ConvergenceRow& row : report.rows) {
        out << row.n << ',' << csv_field(to_string(row.exact)) << ','
            << csv_field(format_real(row.estimate, digits)) << ','
            << csv_field(format_real(row.rel_err, digits)) << ','
            << csv_field(format_real(row.scaled_err, digits)) << "\r\n";
    }
    return out.str();
}

std::string render_json(const ConvergenceReport& report, unsigned digits) {
    nlohmann::ordered_json doc;
    doc["b"] = to_string(report.params.b);
    doc["c"] = to_string(report.params.c);
    doc["regime"] = std::string(regime_tag(report.regime));
    doc["order"] = report.order;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ConvergenceRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["exact"] = to_string(row.exact);
        r["estimate"] = format_real(row.estimate, digits);
        r["rel_err"] = format_real(row.rel_err, digits);
        r["scaled_err"] = format_real(row.scaled_err, digits);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["max_scaled_err"] = format_real(report.max_scaled_err, digits);
    doc["tail_bounded"] = report.tail_bounded;
    doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump(2) + "\n";
}

}  // namespace trinomial
