// fdbench: finite-difference stencil queries, series differentiation,
// case-study error tables, and convergence sweeps.
//
// Exit codes: 0 success, 2 usage/parse error, 3 grid mismatch,
// 4 model singularity, 5 convergence smoke alarm.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdbench/convergence.hpp"
#include "fdbench/csv_io.hpp"
#include "fdbench/error_metrics.hpp"
#include "fdbench/errors.hpp"
#include "fdbench/models.hpp"
#include "fdbench/numfmt.hpp"
#include "fdbench/presets.hpp"
#include "fdbench/stencil.hpp"
#include "fdbench/svg.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGrid = 3;
constexpr int kExitSingularity = 4;
constexpr int kExitOrderMismatch = 5;

using nlohmann::json;

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        fdbench::write_file_atomic(output_path, content);
}

fdbench::PresetRegistry load_registry() {
    if (const char* path = std::getenv("FDBENCH_PRESETS"))
        return fdbench::PresetRegistry::load(path);
    return fdbench::PresetRegistry::builtin();
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        double v;
        if (eq == std::string::npos ||
            !fdbench::parse_double(kv.substr(eq + 1), v))
            throw fdbench::Error("override must be name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = v;
    }
    return out;
}

std::vector<int> parse_offsets(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw fdbench::Error("bad offset '" + tok + "' in --offsets");
        }
    }
    if (out.empty()) throw fdbench::Error("--offsets list is empty");
    return out;
}

json stencil_to_json(const fdbench::Stencil& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients)
        coeffs.push_back(fdbench::rational_to_string(c));
    return {{"offsets", s.offsets},
            {"coefficients", coeffs},
            {"derivative_order", s.derivative_order},
            {"accuracy_order", s.accuracy_order}};
}

std::string stencil_to_text(const fdbench::Stencil& s) {
    std::ostringstream os;
    os << "offsets:";
    for (int o : s.offsets) os << ' ' << o;
    os << "\ncoefficients:";
    for (const auto& c : s.coefficients)
        os << ' ' << fdbench::rational_to_string(c);
    os << "\nderivative_order: " << s.derivative_order
       << "\naccuracy_order: " << s.accuracy_order << "\n";
    return os.str();
}

struct CaseGridArgs {
    std::optional<double> t0, t1, h;
    std::optional<int> n;

    fdbench::CaseGrid resolve(const std::string& case_id) const {
        fdbench::CaseGrid g = fdbench::default_grid(case_id);
        if (t0) g.t0 = *t0;
        if (t1) g.t1 = *t1;
        if (h) g.h = *h;
        if (n) {
            if (*n < 2) throw fdbench::GridError("--n must be at least 2");
            g.h = (g.t1 - g.t0) / (*n - 1);
        }
        if (!(g.t1 > g.t0) || !(g.h > 0))
            throw fdbench::GridError("grid requires t1 > t0 and h > 0");
        return g;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Finite-difference differentiation benchmark"};
    app.require_subcommand(1);
    // --h is a grid-spacing option below, so help is --help only
    app.set_help_flag("--help", "Print help");

    // --- stencil ---
    auto* cmd_stencil = app.add_subcommand(
        "stencil", "Print a builtin or generated stencil");
    std::string st_scheme, st_accuracy = "low", st_offsets, st_format = "text";
    int st_deriv = 1;
    cmd_stencil->add_option("--scheme", st_scheme,
                            "forward | backward | centered");
    cmd_stencil->add_option("--accuracy", st_accuracy, "low | high");
    cmd_stencil->add_option("--offsets", st_offsets,
                            "comma-separated integer offsets");
    cmd_stencil->add_option("--deriv", st_deriv, "derivative order");
    cmd_stencil->add_option("--format", st_format, "json | text");
    std::string st_output;
    cmd_stencil->add_option("--output,-o", st_output, "output file");

    // --- diff ---
    auto* cmd_diff = app.add_subcommand(
        "diff", "Differentiate a t,value CSV series");
    std::string df_input, df_output, df_scheme = "centered",
                df_accuracy = "low", df_policy = "fallback";
    cmd_diff->add_option("--input,-i", df_input, "input CSV")->required();
    cmd_diff->add_option("--output,-o", df_output, "output CSV");
    cmd_diff->add_option("--scheme", df_scheme, "forward | backward | centered");
    cmd_diff->add_option("--accuracy", df_accuracy, "low | high");
    cmd_diff->add_option("--policy", df_policy,
                         "fallback | shrink | mark-missing");

    // --- case run ---
    auto* cmd_case = app.add_subcommand("case", "Case-study benchmarks");
    auto* cmd_case_run = cmd_case->add_subcommand(
        "run", "Error table for one case study");
    cmd_case_run->set_help_flag("--help", "Print help");
    std::string cr_case, cr_format = "md", cr_output, cr_plot, cr_experimental;
    std::vector<std::string> cr_set;
    CaseGridArgs cr_grid;
    cmd_case_run->add_option("case", cr_case, "logistic | temperature | market")
        ->required();
    cmd_case_run->add_option("--t0", cr_grid.t0, "grid start");
    cmd_case_run->add_option("--t1", cr_grid.t1, "grid end");
    cmd_case_run->add_option("--h", cr_grid.h, "grid spacing");
    cmd_case_run->add_option("--n", cr_grid.n, "sample count (overrides --h)");
    cmd_case_run->add_option("--experimental", cr_experimental,
                             "experimental rate series CSV (same grid)");
    cmd_case_run->add_option("--set", cr_set, "model override name=value");
    cmd_case_run->add_option("--format", cr_format, "md | json | csv");
    cmd_case_run->add_option("--plot", cr_plot, "write an SVG figure here");
    cmd_case_run->add_option("--output,-o", cr_output, "output file");

    // --- converge ---
    auto* cmd_conv = app.add_subcommand(
        "converge", "Observed order of accuracy via an h sweep");
    std::string cv_case, cv_scheme = "centered", cv_accuracy = "high",
                cv_format = "csv", cv_output;
    std::vector<std::string> cv_set;
    double cv_t = 0, cv_hmax = 1.0, cv_hmin = 1.0 / 128.0;
    int cv_points = 8;
    cmd_conv->add_option("case", cv_case, "logistic | temperature | market")
        ->required();
    cmd_conv->add_option("--scheme", cv_scheme, "forward | backward | centered");
    cmd_conv->add_option("--accuracy", cv_accuracy, "low | high");
    cmd_conv->add_option("--t", cv_t, "evaluation point")->required();
    cmd_conv->add_option("--h-max", cv_hmax, "largest step");
    cmd_conv->add_option("--h-min", cv_hmin, "smallest step");
    cmd_conv->add_option("--points", cv_points, "sweep length");
    cmd_conv->add_option("--set", cv_set, "model override name=value");
    cmd_conv->add_option("--format", cv_format, "csv | json");
    cmd_conv->add_option("--output,-o", cv_output, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // --help exits 0
    }

    const auto registry = load_registry();

    if (cmd_stencil->parsed()) {
        fdbench::Stencil s;
        if (!st_scheme.empty()) {
            s = fdbench::builtin_stencil({fdbench::parse_family(st_scheme),
                                          fdbench::parse_accuracy(st_accuracy)});
        } else if (!st_offsets.empty()) {
            s = fdbench::generate_stencil(parse_offsets(st_offsets), st_deriv);
        } else {
            throw fdbench::Error("need either --scheme or --offsets");
        }
        if (st_format == "json")
            emit(stencil_to_json(s).dump(2) + "\n", st_output);
        else
            emit(stencil_to_text(s), st_output);
        return 0;
    }

    if (cmd_diff->parsed()) {
        const fdbench::Series input = fdbench::read_series_csv_file(df_input);
        const fdbench::Scheme scheme{fdbench::parse_family(df_scheme),
                                     fdbench::parse_accuracy(df_accuracy)};
        const auto policy = fdbench::parse_boundary_policy(df_policy);
        const auto result = fdbench::differentiate_series(input, scheme, policy);

        if (!df_output.empty())
            fdbench::write_series_csv_file(result.series, df_output);
        else
            std::cout << fdbench::series_to_csv(result.series);

        std::map<std::string, int> trace;
        for (const auto& label : result.stencil_used) ++trace[label];
        std::ostringstream note;
        note << "h=" << fdbench::format_double(fdbench::uniform_spacing(input))
             << " scheme=" << scheme.name()
             << " policy=" << fdbench::boundary_policy_name(policy)
             << " applied:";
        for (const auto& [label, count] : trace)
            note << ' ' << label << "x" << count;
        std::cerr << note.str() << "\n";
        if (trace.count("missing"))
            std::cerr << "warning: " << trace["missing"]
                      << " output values are missing sentinels\n";
        return 0;
    }

    if (cmd_case_run->parsed()) {
        const auto cs =
            fdbench::make_case(cr_case, parse_overrides(cr_set), registry);
        const fdbench::CaseGrid grid = cr_grid.resolve(cr_case);

        std::optional<fdbench::Series> experimental;
        if (!cr_experimental.empty())
            experimental = fdbench::read_series_csv_file(cr_experimental);

        const auto report = fdbench::case_error_table(
            cs, grid.t0, grid.t1, grid.h,
            experimental ? &*experimental : nullptr);

        if (cr_format == "json")
            emit(fdbench::error_report_to_json(report).dump(2) + "\n", cr_output);
        else if (cr_format == "csv")
            emit(fdbench::error_report_to_csv(report), cr_output);
        else
            emit(fdbench::error_report_to_markdown(report), cr_output);

        if (!cr_plot.empty()) {
            const int n = grid.sample_count();
            const auto sampled = fdbench::sample_model(cs.value, grid.t0,
                                                       grid.t1, n,
                                                       cs.time_unit,
                                                       cs.value_unit);
            std::vector<fdbench::ChartCurve> curves;
            curves.push_back({"analytic rate",
                              fdbench::sample_model(cs.rate, grid.t0, grid.t1,
                                                    n, cs.time_unit, "")});
            for (const auto& scheme : fdbench::all_schemes()) {
                auto d = fdbench::differentiate_series(
                    sampled, scheme, fdbench::BoundaryPolicy::fallback);
                curves.push_back({scheme.name(), std::move(d.series)});
            }
            fdbench::write_file_atomic(
                cr_plot,
                fdbench::render_line_chart(
                    "Derivative estimates: " + cs.name,
                    "t [" + cs.time_unit + "]",
                    "d/dt [" + cs.value_unit + "/" + cs.time_unit + "]",
                    curves));
        }
        return 0;
    }

    if (cmd_conv->parsed()) {
        const auto cs =
            fdbench::make_case(cv_case, parse_overrides(cv_set), registry);
        const fdbench::Scheme scheme{fdbench::parse_family(cv_scheme),
                                     fdbench::parse_accuracy(cv_accuracy)};
        const auto stencil = fdbench::builtin_stencil(scheme);
        const auto grid = fdbench::geometric_grid(cv_hmax, cv_hmin, cv_points);
        const auto result = fdbench::observed_order(stencil, cs.value_ld,
                                                    cs.rate_ld, cv_t, grid);

        if (cv_format == "json")
            emit(fdbench::convergence_to_json(result).dump(2) + "\n", cv_output);
        else
            emit(fdbench::convergence_to_csv(result), cv_output);

        if (result.indeterminate) {
            std::cerr << "order indeterminate: fewer than 3 sweep points "
                         "above the round-off floor\n";
            return 0;
        }
        std::cerr << "slope=" << fdbench::format_double(result.slope)
                  << " theoretical=" << result.theoretical << "\n";
        if (std::abs(result.slope - result.theoretical) > 0.5) {
            std::cerr << "order mismatch: |slope - theoretical| > 0.5\n";
            return kExitOrderMismatch;
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fdbench::SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingularity;
    } catch (const fdbench::ParseError& e) {
        std::cerr << "error (line " << e.line() << ", column " << e.column()
                  << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const fdbench::GridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGrid;
    } catch (const fdbench::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
