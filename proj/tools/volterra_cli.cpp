#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "volterra/experiments.hpp"
#include "volterra/operators.hpp"
#include "volterra/serialize.hpp"
#include "volterra/spectra.hpp"
#include "volterra/symbol_parser.hpp"
#include "volterra/weights.hpp"

namespace {

using namespace volterra;
using nlohmann::json;

struct GlobalOpts {
    int degree = kDefaultWorkingDegree;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 2026;
};

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path path(out);
    if (const char* dir = std::getenv("VOLTERRA_OUT_DIR");
        dir != nullptr && path.is_relative()) {
        path = std::filesystem::path(dir) / path;
    }
    return path;
}

void write_output(const GlobalOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    const auto path = resolve_out(opts.out);
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path.string());
    file << text;
}

TruncatedSeries read_series(const std::string& input) {
    json j;
    if (input == "-") {
        std::cin >> j;
    } else {
        std::ifstream file(input);
        if (!file) throw std::runtime_error("cannot open " + input);
        file >> j;
    }
    return series_from_json(j);
}

std::string matrix_csv(const SectionMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) os << ",";
            const Cplx e = m.at(i, j);
            os << e.real() << "," << e.imag();
        }
        os << "\n";
    }
    return os.str();
}

json matrix_json(const SectionMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) {
            const Cplx e = m.at(i, j);
            row.push_back({e.real(), e.imag()});
        }
        rows.push_back(row);
    }
    return {{"size", m.size()}, {"entries", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volterra operators on weighted spaces of entire functions"};
    app.fallthrough();
    app.set_config("--config")->configurable(false);

    GlobalOpts opts;
    app.add_option("--degree", opts.degree, "working truncation degree")
        ->capture_default_str();
    app.add_option("--out", opts.out, "output file (default stdout)");
    app.add_option("--format", opts.format, "output format: json|csv|text")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized experiments")
        ->capture_default_str();

    std::string symbol_text, lambda_text, input_path = "-";
    double alpha = 1.0, p_exp = 1.0, a_exp = 1.0, gc_scale = 1.0;
    int size = 8;
    std::string window_text, hormander_space = "both";

    auto* classify = app.add_subcommand("classify", "spectrum classifiers");
    classify->require_subcommand(1);

    auto* banach = classify->add_subcommand(
        "banach", "sigma(V_g) on H^inf_v, v(r)=exp(-alpha r^p)");
    banach->add_option("--symbol", symbol_text, "polynomial symbol g")
        ->required();
    banach->add_option("--alpha", alpha)->required();
    banach->add_option("--p", p_exp)->required();

    auto* hormander = classify->add_subcommand(
        "hormander", "sigma(V_g) on A_p / A0_p, p(r)=scale r^a");
    hormander->add_option("--symbol", symbol_text)->required();
    hormander->add_option("--a", a_exp)->required();
    hormander->add_option("--scale", gc_scale)->capture_default_str();
    hormander->add_option("--space", hormander_space, "ap|a0p|both")
        ->capture_default_str();

    auto* entire = classify->add_subcommand("entire", "sigma(V_g) on H(C)");
    entire->add_option("--symbol", symbol_text)->required();

    auto* resolvent = app.add_subcommand(
        "resolvent", "apply R_{lambda,g} to a series read as JSON");
    resolvent->add_option("--symbol", symbol_text)->required();
    resolvent->add_option("--lambda", lambda_text)->required();
    resolvent->add_option("--rhs", input_path, "series JSON file, - for stdin")
        ->capture_default_str();

    auto* apply_cmd =
        app.add_subcommand("apply", "apply V_g to a series read as JSON");
    apply_cmd->add_option("--symbol", symbol_text)->required();
    apply_cmd->add_option("--input", input_path)->capture_default_str();

    auto* matrix = app.add_subcommand(
        "matrix", "finite section of V_g in the monomial basis");
    matrix->add_option("--symbol", symbol_text)->required();
    matrix->add_option("--size", size)->capture_default_str();

    auto* ordertype_cmd = app.add_subcommand(
        "ordertype", "order/type of an entire function from coefficients");
    ordertype_cmd->add_option("--input", input_path)->capture_default_str();
    ordertype_cmd->add_option("--window", window_text,
                              "coefficient window lo:hi");

    std::string verify_kind;
    int verify_cases = 0;
    auto* verify = app.add_subcommand(
        "verify", "run a verification experiment and report pass/fail");
    verify
        ->add_option("kind", verify_kind,
                     "resolvent|tgamma|membership|caratheodory|nilpotent|"
                     "crosscheck|all")
        ->required();
    verify->add_option("--cases", verify_cases, "override case count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (banach->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            const PowerWeight w(alpha, p_exp);
            const BoundednessVerdict bv = classify_boundedness_Hv(g, w);
            json out{{"bounded", bv.bounded}, {"compact", bv.compact}};
            if (bv.bounded) {
                out["spectrum"] = spectrum_to_json(classify_spectrum_Hv(g, w));
            }
            write_output(opts, out.dump(2) + "\n");
        } else if (hormander->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            const GrowthCondition gc(gc_scale, a_exp);
            json out;
            if (hormander_space == "ap" || hormander_space == "both") {
                out["Ap"] = spectrum_to_json(classify_spectrum_Ap(g, gc));
            }
            if (hormander_space == "a0p" || hormander_space == "both") {
                out["A0p"] = spectrum_to_json(classify_spectrum_A0p(g, gc));
            }
            if (out.empty()) throw CLI::ValidationError("--space", "ap|a0p|both");
            write_output(opts, out.dump(2) + "\n");
        } else if (entire->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            write_output(opts,
                         spectrum_to_json(classify_spectrum_entire(g)).dump(2) +
                             "\n");
        } else if (resolvent->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            const Cplx lambda = parse_complex(lambda_text);
            const TruncatedSeries h = read_series(input_path);
            const TruncatedSeries f = resolvent_apply(g, lambda, h, opts.degree);
            write_output(opts, series_to_json(f).dump() + "\n");
        } else if (apply_cmd->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            const TruncatedSeries f = read_series(input_path);
            const TruncatedSeries out =
                apply_volterra(g, f, opts.degree);
            write_output(opts, series_to_json(out).dump() + "\n");
        } else if (matrix->parsed()) {
            const PolynomialSymbol g = parse_symbol(symbol_text);
            const SectionMatrix m = finite_section(g, size);
            if (opts.format == "csv") {
                write_output(opts, matrix_csv(m));
            } else if (opts.format == "json") {
                write_output(opts, matrix_json(m).dump() + "\n");
            } else {
                throw CLI::ValidationError("--format", "matrix: json|csv");
            }
        } else if (ordertype_cmd->parsed()) {
            const TruncatedSeries f = read_series(input_path);
            int lo = std::max(2, f.trunc_degree() / 2);
            int hi = f.trunc_degree();
            if (!window_text.empty()) {
                const auto colon = window_text.find(':');
                if (colon == std::string::npos) {
                    throw CLI::ValidationError("--window", "expected lo:hi");
                }
                lo = std::stoi(window_text.substr(0, colon));
                hi = std::stoi(window_text.substr(colon + 1));
            }
            const OrderTypeEstimate est = order_type(f, lo, hi);
            json out{{"order", est.order},
                     {"type", est.type_infinite ? json("infinite")
                                                : json(est.type_val)},
                     {"window", {est.window_lo, est.window_hi}}};
            write_output(opts, out.dump(2) + "\n");
        } else if (verify->parsed()) {
            std::vector<std::string> kinds;
            if (verify_kind == "all") {
                kinds = {"resolvent",    "tgamma",    "membership",
                         "caratheodory", "nilpotent", "crosscheck"};
            } else {
                kinds = {verify_kind};
            }
            bool ok = true;
            std::string combined;
            for (const std::string& kind : kinds) {
                ExperimentSpec spec;
                spec.kind = experiment_kind_from_name(kind);
                spec.seed = opts.seed;
                spec.degree = opts.degree;
                spec.cases = verify_cases;
                const Report report = run_experiment(spec);
                combined += emit_report(report, opts.format);
                ok = ok && all_passed(report);
                std::cerr << kind << ": pass=" << report.passed
                          << " fail=" << report.failed
                          << " skipped=" << report.skipped << " ("
                          << report.wall_ms << " ms)\n";
            }
            write_output(opts, combined);
            return ok ? 0 : 1;
        } else {
            std::cerr << app.help();
            return 2;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
