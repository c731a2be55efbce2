// Command-line surface: exact values, symbolic expansions, asymptotic
// estimates and convergence verification for generalised central trinomial
// coefficients T_n(b,c) = [x^n] (x^2 + b x + c)^n.
//
// Exit codes: 0 ok, 2 parse error, 3 cross-check mismatch, 4 unsupported
// regime, 5 verification failure.

#include "trinomial/exact.hpp"
#include "trinomial/expansion.hpp"
#include "trinomial/report.hpp"
#include "trinomial/singularity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace trinomial;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitRegime = 4;
constexpr int kExitVerifyFailed = 5;

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

nlohmann::ordered_json quadext_json(const QuadExt& x, bool with_radicand) {
    const auto [p, q] = x.canonical();
    nlohmann::ordered_json doc;
    doc["p"] = to_string(p);
    doc["q"] = to_string(q);
    if (with_radicand) doc["c"] = to_string(x.radicand());
    return doc;
}

struct ExactArgs {
    std::string b, c;
    std::optional<unsigned long> n;
    std::optional<unsigned long> n_max;
    std::string method = "recurrence";
    std::string format = "text";
};

int run_exact(const ExactArgs& args) {
    const TrinomialParams params{parse_rational(args.b), parse_rational(args.c)};
    const unsigned long lo = args.n ? *args.n : 0;
    const unsigned long hi = args.n ? *args.n : *args.n_max;

    std::vector<Rational> values;
    const auto per_n = [&](auto&& f) {
        for (unsigned long n = lo; n <= hi; ++n) values.push_back(f(params, n));
    };
    if (args.method == "sum") {
        per_n([](const TrinomialParams& p, unsigned long n) { return tn_direct_sum(p, n); });
    } else if (args.method == "power") {
        per_n([](const TrinomialParams& p, unsigned long n) { return tn_poly_power(p, n); });
    } else if (args.method == "recurrence") {
        auto list = tn_recurrence(params, hi);
        values.assign(list.begin() + lo, list.end());
    } else if (args.method == "series") {
        auto list = tn_series(params, hi);
        values.assign(list.begin() + lo, list.end());
    } else {  // all: every method must agree exactly
        auto rec = tn_recurrence(params, hi);
        auto ser = tn_series(params, hi);
        for (unsigned long n = lo; n <= hi; ++n) {
            const Rational direct = tn_direct_sum(params, n);
            const Rational power = tn_poly_power(params, n);
            if (direct != power || direct != rec[n] || direct != ser[n]) {
                std::cerr << "cross-check mismatch at n=" << n << ": sum=" << direct
                          << " power=" << power << " recurrence=" << rec[n] << " series=" << ser[n]
                          << "\n";
                return kExitMismatch;
            }
            values.push_back(direct);
        }
    }

    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rational& v : values) arr.push_back(to_string(v));
        std::cout << arr.dump() << "\n";
    } else {
        for (const Rational& v : values) std::cout << to_string(v) << "\n";
    }
    return kExitOk;
}

struct ExpandArgs {
    std::string b, c;
    int order = 6;
    std::string format = "text";
    std::string out;
};

int run_expand(const ExpandArgs& args) {
    const TrinomialParams params{parse_rational(args.b), parse_rational(args.c)};
    const Regime regime = classify_regime(params);
    if (regime == Regime::Trivial) {
        std::cerr << "no asymptotic expansion in the trivial regime (b = c = 0)\n";
        return kExitRegime;
    }
    const AsymptoticExpansion exp = assemble_expansion(params, args.order);

    std::string payload;
    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["b"] = to_string(params.b);
        doc["c"] = to_string(params.c);
        doc["regime"] = std::string(regime_tag(regime));
        doc["growth"] = quadext_json(exp.growth, true);
        doc["prefactor"] =
            nlohmann::ordered_json{{"base", quadext_json(exp.prefactor.base, true)},
                                   {"exponent", to_string(exp.prefactor.exponent)}};
        nlohmann::ordered_json corrections = nlohmann::ordered_json::array();
        for (const QuadExt& g : exp.corrections) corrections.push_back(quadext_json(g, false));
        doc["corrections"] = std::move(corrections);
        doc["pi_power"] = to_string(exp.pi_power);
        payload = doc.dump(2) + "\n";
    } else {
        std::string text;
        text += "regime " + std::string(regime_tag(regime)) + "\n";
        text += "growth " + exp.growth.str() + "\n";
        text += "prefactor " + exp.prefactor.str() + "\n";
        text += "n_power " + to_string(exp.poly_exponent) + "\n";
        text += "pi_power " + to_string(exp.pi_power) + "\n";
        for (std::size_t j = 0; j < exp.corrections.size(); ++j) {
            text += "g[" + std::to_string(j) + "] " + exp.corrections[j].str() + "\n";
        }
        if (exp.oscillation) {
            text += "phase_unit " + exp.oscillation->phase_unit.str() + "\n";
            text += "oscillation cos((n+1/2)*phi - pi/4), e^(i*phi) = phase_unit/sqrt(" +
                    to_string(params.discriminant()) + ")\n";
        }
        payload = text;
    }
    write_output(args.out, payload);
    return kExitOk;
}

struct ApproxArgs {
    std::string b, c;
    unsigned long n = 1;
    int order = 6;
    unsigned precision = 256;
    unsigned digits = 40;
};

int run_approx(const ApproxArgs& args) {
    const TrinomialParams params{parse_rational(args.b), parse_rational(args.c)};
    const Regime regime = classify_regime(params);
    if (regime == Regime::Trivial) {
        // T_n(0,0) = 0 exactly for n >= 1
        std::cout << "estimate 0\nexact 0\nrel_err 0\n";
        return kExitOk;
    }
    const AsymptoticExpansion exp = assemble_expansion(params, args.order);
    const ExpansionValue ev = eval_expansion(exp, args.n, args.precision);
    std::cout << "estimate " << format_real(ev.value, args.digits) << "\n";
    if (regime == Regime::ConjugatePair) {
        const unsigned wb = args.precision + 32;
        PrecisionGuard guard(wb);
        const Real phi = phase_phi(params, wb);
        const Real pi = pi_bits(wb);
        const Real cosine = cos((Real(args.n) + Real(Rational(1, 2))) * phi - pi / 4);
        std::cout << "cos " << format_real(round_to_bits(cosine, args.precision), args.digits)
                  << "\n";
    }
    if (args.n <= 100000) {
        const Rational exact = tn_recurrence(params, args.n).back();
        const unsigned wb = args.precision + 32;
        PrecisionGuard guard(wb);
        Real rel;
        if (ev.exact.has_value() && *ev.exact == exact) {
            rel = 0;
        } else {
            rel = to_real(exact, wb) / ev.value - 1;
        }
        std::cout << "exact " << to_string(exact) << "\n";
        std::cout << "rel_err " << format_real(round_to_bits(rel, args.precision), args.digits)
                  << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string b, c;
    int order = 2;
    unsigned long n_min = 0;
    unsigned long n_max = 0;
    std::string grid;
    std::string format = "csv";
    std::string out;
    unsigned precision = 256;
    unsigned digits = 40;
};

int run_verify_cmd(const VerifyArgs& args) {
    const TrinomialParams params{parse_rational(args.b), parse_rational(args.c)};
    if (classify_regime(params) == Regime::Trivial) {
        std::cerr << "nothing to verify in the trivial regime (b = c = 0)\n";
        return kExitRegime;
    }
    VerifyOptions options;
    options.order = args.order;
    options.n_min = args.n_min;
    options.n_max = args.n_max;
    options.precision_bits = args.precision;
    if (args.grid == "geometric") options.grid = GridKind::Geometric;
    if (args.grid == "linear") options.grid = GridKind::Linear;

    const ConvergenceReport report = run_verify(params, options);
    const std::string payload = args.format == "json" ? render_json(report, args.digits)
                                                      : render_csv(report, args.digits);
    write_output(args.out, payload);
    if (!report.tail_bounded) {
        std::cerr << "verification failed: error order not confirmed on the grid tail\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised central trinomial coefficients: exact values and asymptotics"};
    app.require_subcommand(1);

    ExactArgs exact_args;
    CLI::App* cmd_exact = app.add_subcommand("exact", "compute T_n exactly");
    cmd_exact->add_option("--b", exact_args.b, "parameter b (integer, fraction or short decimal)")
        ->required();
    cmd_exact->add_option("--c", exact_args.c, "parameter c")->required();
    auto* opt_n = cmd_exact->add_option("--n", exact_args.n, "single index n");
    auto* opt_n_max = cmd_exact->add_option("--n-max", exact_args.n_max, "compute T_0..T_n_max");
    opt_n->excludes(opt_n_max);
    opt_n_max->excludes(opt_n);
    cmd_exact->add_option("--method", exact_args.method, "sum|power|recurrence|series|all")
        ->check(CLI::IsMember({"sum", "power", "recurrence", "series", "all"}))
        ->capture_default_str();
    cmd_exact->add_option("--format", exact_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    ExpandArgs expand_args;
    CLI::App* cmd_expand = app.add_subcommand("expand", "print the symbolic asymptotic expansion");
    cmd_expand->add_option("--b", expand_args.b)->required();
    cmd_expand->add_option("--c", expand_args.c)->required();
    cmd_expand->add_option("--order", expand_args.order, "number of correction terms")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd_expand->add_option("--format", expand_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd_expand->add_option("--out", expand_args.out, "write to file instead of stdout");

    ApproxArgs approx_args;
    CLI::App* cmd_approx = app.add_subcommand("approx", "evaluate the asymptotic estimate");
    cmd_approx->add_option("--b", approx_args.b)->required();
    cmd_approx->add_option("--c", approx_args.c)->required();
    cmd_approx->add_option("--n", approx_args.n)->required()->check(CLI::PositiveNumber);
    cmd_approx->add_option("--order", approx_args.order)
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd_approx->add_option("--precision", approx_args.precision, "working precision in bits")
        ->check(CLI::Range(64u, 1u << 20))
        ->capture_default_str();
    cmd_approx->add_option("--digits", approx_args.digits, "printed significant digits")
        ->check(CLI::Range(1u, 100000u))
        ->capture_default_str();

    VerifyArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand("verify", "empirical convergence-order report");
    cmd_verify->add_option("--b", verify_args.b)->required();
    cmd_verify->add_option("--c", verify_args.c)->required();
    cmd_verify->add_option("--order", verify_args.order)
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd_verify->add_option("--n-min", verify_args.n_min, "grid start (default 16; 1900 for c<0)");
    cmd_verify->add_option("--n-max", verify_args.n_max, "grid end (default 4096; 2000 for c<0)");
    cmd_verify->add_option("--grid", verify_args.grid, "geometric|linear")
        ->check(CLI::IsMember({"geometric", "linear"}));
    cmd_verify->add_option("--format", verify_args.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd_verify->add_option("--out", verify_args.out, "write to file instead of stdout");
    cmd_verify->add_option("--precision", verify_args.precision)
        ->check(CLI::Range(64u, 1u << 20))
        ->capture_default_str();
    cmd_verify->add_option("--digits", verify_args.digits)
        ->check(CLI::Range(1u, 100000u))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(cmd_exact)) {
            if (!exact_args.n && !exact_args.n_max) {
                std::cerr << "one of --n or --n-max is required\n";
                return kExitParse;
            }
            return run_exact(exact_args);
        }
        if (app.got_subcommand(cmd_expand)) return run_expand(expand_args);
        if (app.got_subcommand(cmd_approx)) return run_approx(approx_args);
        if (app.got_subcommand(cmd_verify)) return run_verify_cmd(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
