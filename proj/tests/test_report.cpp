#include "trinomial/report.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

using namespace trinomial;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("second-order verification at (1,16)") {
    VerifyOptions opts;
    opts.order = 2;
    const ConvergenceReport report = run_verify({Rational(1), Rational(16)}, opts);
    CHECK(report.tail_bounded);
    CHECK(report.regime == Regime::SingleDominant);
    REQUIRE(report.rows.size() == 9);
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        CHECK(report.rows[i].n < report.rows[i + 1].n);
    }
    CHECK(report.rows.front().n == 16);
    CHECK(report.rows.back().n == 4096);
    for (const auto& row : report.rows) CHECK(row.scaled_err >= 0);
    // the scaled error settles near |g_3| = 18555/524288
    const Real limit = to_real(Rational(18555, 524288), 128);
    CHECK(report.rows.back().scaled_err > limit * Real(Rational(9, 10)));
    CHECK(report.rows.back().scaled_err < limit * Real(Rational(11, 10)));
}

TEST_CASE("d = 0 scaled error settles near the next translation coefficient") {
    VerifyOptions opts;
    opts.order = 3;
    const ConvergenceReport report = run_verify({Rational(2), Rational(1)}, opts);
    CHECK(report.tail_bounded);
    const Real limit = to_real(Rational(21, 32768), 128);
    CHECK(report.rows.back().scaled_err > limit * Real(Rational(9, 10)));
    CHECK(report.rows.back().scaled_err < limit * Real(Rational(11, 10)));
}

TEST_CASE("a degenerate order is rejected by the tail verdict") {
    // at (4,1) the 1/n correction vanishes, so J = 0 overstates the error
    // order and the scaled error decays across the tail
    VerifyOptions opts;
    opts.order = 0;
    const ConvergenceReport report = run_verify({Rational(4), Rational(1)}, opts);
    CHECK_FALSE(report.tail_bounded);
}

TEST_CASE("exact pole rows carry zero error") {
    VerifyOptions opts;
    opts.order = 2;
    const ConvergenceReport report = run_verify({Rational(3), Rational(0)}, opts);
    CHECK(report.tail_bounded);
    for (const auto& row : report.rows) {
        CHECK(row.rel_err == 0);
        CHECK(row.scaled_err == 0);
    }
    CHECK(report.max_scaled_err == 0);
}

TEST_CASE("symmetric pair verifies on the geometric grid") {
    VerifyOptions opts;
    opts.order = 1;
    const ConvergenceReport report = run_verify({Rational(0), Rational(1)}, opts);
    CHECK(report.tail_bounded);
}

TEST_CASE("convergence order holds across the regime/order matrix") {
    // orders chosen so the next correction coefficient is nonzero
    const std::vector<std::pair<TrinomialParams, int>> matrix = {
        {{Rational(1), Rational(16)}, 1}, {{Rational(1), Rational(16)}, 2},
        {{Rational(3), Rational(1)}, 1},  {{Rational(4), Rational(1)}, 2},
        {{Rational(2), Rational(1)}, 0},  {{Rational(2), Rational(1)}, 3},
        {{Rational(0), Rational(1)}, 0},  {{Rational(0), Rational(1)}, 1},
        {{Rational(3), Rational(0)}, 2},
    };
    for (const auto& [params, order] : matrix) {
        VerifyOptions opts;
        opts.order = order;
        const ConvergenceReport report = run_verify(params, opts);
        INFO("b=", to_string(params.b), " c=", to_string(params.c), " J=", order);
        CHECK(report.tail_bounded);
    }
}

TEST_CASE("oscillatory regime uses the root-growth criterion") {
    VerifyOptions opts;
    const ConvergenceReport report = run_verify({Rational(1), Rational(-1)}, opts);
    CHECK(report.regime == Regime::ConjugatePair);
    CHECK(report.order == 0);
    REQUIRE(report.rows.size() == 101);
    CHECK(report.rows.front().n == 1900);
    CHECK(report.rows.back().n == 2000);
    CHECK(report.tail_bounded);
}

TEST_CASE("grid validation") {
    VerifyOptions opts;
    opts.n_min = 30;
    opts.n_max = 20;
    CHECK_THROWS_AS(run_verify({Rational(1), Rational(1)}, opts), std::invalid_argument);
    CHECK_THROWS_AS(run_verify({Rational(0), Rational(0)}, opts), std::domain_error);
}

TEST_CASE("deterministic formatting") {
    CHECK(format_real(Real(0), 10) == "0");
    CHECK(format_real(Real(1), 5) == "1.0000e0");
    CHECK(format_real(Real(-0.5), 4) == "-5.000e-1");
    CHECK(format_real(Real(1536), 6) == "1.53600e3");
    Real inf = std::numeric_limits<Real>::infinity();
    CHECK(format_real(inf, 5) == "inf");
    CHECK(format_real(-inf, 5) == "-inf");
}

TEST_CASE("CSV and JSON renderings agree field by field") {
    VerifyOptions opts;
    opts.order = 2;
    opts.n_max = 512;
    const ConvergenceReport report = run_verify({Rational(1), Rational(16)}, opts);

    const std::string csv = render_csv(report, 20);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == report.rows.size() + 1);
    CHECK(lines[0] == "n,exact,estimate,rel_err,scaled_err");

    const auto doc = nlohmann::json::parse(render_json(report, 20));
    CHECK(doc["b"] == "1");
    CHECK(doc["c"] == "16");
    CHECK(doc["regime"] == "SINGLE_DOMINANT");
    CHECK(doc["order"] == 2);
    CHECK(doc["tail_bounded"] == true);
    REQUIRE(doc["rows"].size() == report.rows.size());
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        std::ostringstream want;
        want << report.rows[i].n << ',' << to_string(report.rows[i].exact) << ','
             << format_real(report.rows[i].estimate, 20) << ','
             << format_real(report.rows[i].rel_err, 20) << ','
             << format_real(report.rows[i].scaled_err, 20);
        CHECK(lines[i + 1] == want.str());
        const auto& row = doc["rows"][i];
        CHECK(row["n"] == report.rows[i].n);
        CHECK(row["exact"] == to_string(report.rows[i].exact));
        CHECK(row["estimate"] == format_real(report.rows[i].estimate, 20));
        CHECK(row["rel_err"] == format_real(report.rows[i].rel_err, 20));
        CHECK(row["scaled_err"] == format_real(report.rows[i].scaled_err, 20));
    }
}

TEST_CASE("repeated runs produce identical reports") {
    VerifyOptions opts;
    opts.order = 1;
    opts.n_max = 1024;
    const ConvergenceReport a = run_verify({Rational(3), Rational(2)}, opts);
    const ConvergenceReport b = run_verify({Rational(3), Rational(2)}, opts);
    CHECK(render_csv(a, 40) == render_csv(b, 40));  // no timing field in CSV

    auto ja = nlohmann::json::parse(render_json(a, 40));
    auto jb = nlohmann::json::parse(render_json(b, 40));
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}
