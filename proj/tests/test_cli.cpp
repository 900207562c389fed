#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fdbench/csv_io.hpp"
#include "fdbench/models.hpp"
#include "fdbench/stencil.hpp"

using namespace fdbench;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(FDBENCH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("stencil --help").code == 0);
    CHECK(run_cli("stencil").code == 2);  // needs --scheme or --offsets
    CHECK(run_cli("converge logistic").code == 2);  // missing --t
    CHECK(run_cli("case run weather --t0 0 --t1 1 --h 0.5").code == 2);
}

TEST_CASE("stencil subcommand") {
    SUBCASE("builtin centered high as json") {
        const auto r = run_cli(
            "stencil --scheme centered --accuracy high --format json");
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("offsets") == json({-2, -1, 1, 2}));
        CHECK(j.at("coefficients") ==
              json({"1/12", "-2/3", "2/3", "-1/12"}));
        CHECK(j.at("derivative_order") == 1);
        CHECK(j.at("accuracy_order") == 4);
    }
    SUBCASE("generated from offsets") {
        const auto r =
            run_cli("stencil --offsets 0,1,2 --deriv 1 --format json");
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("coefficients") == json({"-3/2", "2", "-1/2"}));
        CHECK(j.at("accuracy_order") == 2);
    }
    SUBCASE("text output names the orders") {
        const auto r = run_cli("stencil --scheme forward");
        REQUIRE(r.code == 0);
        CHECK(r.out.find("derivative_order: 1") != std::string::npos);
        CHECK(r.out.find("accuracy_order: 1") != std::string::npos);
    }
    SUBCASE("bad offsets exit 2") {
        CHECK(run_cli("stencil --offsets 0,zero").code == 2);
        CHECK(run_cli("stencil --offsets 0,0,1").code == 2);
    }
    SUBCASE("output is deterministic") {
        const auto a = run_cli("stencil --scheme backward --format json");
        const auto b = run_cli("stencil --scheme backward --format json");
        CHECK(a.out == b.out);
    }
}

TEST_CASE("diff subcommand") {
    // t^2 on an integer grid: the 2-point centered rule is exact, so
    // interior outputs must equal 2t bit for bit.
    Series quad;
    for (int i = 0; i <= 10; ++i) {
        quad.times.push_back(i);
        quad.values.push_back(double(i) * double(i));
    }
    write_series_csv_file(quad, "cli_quad.csv");

    SUBCASE("centered low on t^2") {
        const auto r = run_cli("diff -i cli_quad.csv --scheme centered");
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        const Series d = read_series_csv(in);
        REQUIRE(d.size() == 11);
        for (int i = 1; i < 10; ++i) CHECK(d.values[i] == 2.0 * i);
    }
    SUBCASE("stdout equals the library result byte for byte") {
        const auto r = run_cli(
            "diff -i cli_quad.csv --scheme forward --accuracy high "
            "--policy shrink");
        REQUIRE(r.code == 0);
        const auto lib = differentiate_series(
            quad, {Family::forward, Accuracy::high}, BoundaryPolicy::shrink);
        CHECK(r.out == series_to_csv(lib.series));
    }
    SUBCASE("mark-missing writes nan rows") {
        const auto r = run_cli(
            "diff -i cli_quad.csv --scheme centered --policy mark-missing");
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        const Series d = read_series_csv(in);
        CHECK(is_missing(d.values.front()));
        CHECK(is_missing(d.values.back()));
        CHECK(d.values[5] == 10.0);
    }
    SUBCASE("3 rows with centered high and mark-missing: all missing") {
        write_file("cli_three.csv", "t,value\n0,0\n1,1\n2,4\n");
        const auto r = run_cli(
            "diff -i cli_three.csv --scheme centered --accuracy high "
            "--policy mark-missing");
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        const Series d = read_series_csv(in);
        REQUIRE(d.size() == 3);
        for (double v : d.values) CHECK(is_missing(v));
        std::remove("cli_three.csv");
    }
    SUBCASE("--output writes the same bytes as stdout") {
        const auto r = run_cli("diff -i cli_quad.csv --scheme backward");
        REQUIRE(r.code == 0);
        const auto r2 = run_cli(
            "diff -i cli_quad.csv --scheme backward -o cli_quad_out.csv");
        REQUIRE(r2.code == 0);
        CHECK(read_file("cli_quad_out.csv") == r.out);
        std::remove("cli_quad_out.csv");
    }
    SUBCASE("non-uniform grid exits 3") {
        write_file("cli_bad_grid.csv", "t,value\n0,0\n1,1\n3,9\n10,100\n");
        CHECK(run_cli("diff -i cli_bad_grid.csv").code == 3);
        std::remove("cli_bad_grid.csv");
    }
    SUBCASE("malformed csv exits 2") {
        write_file("cli_bad_text.csv", "t,value\n0,zero\n");
        CHECK(run_cli("diff -i cli_bad_text.csv").code == 2);
        std::remove("cli_bad_text.csv");
        CHECK(run_cli("diff -i cli_missing_file.csv").code == 2);
    }
    SUBCASE("unknown policy exits 2") {
        CHECK(run_cli("diff -i cli_quad.csv --policy extrapolate").code == 2);
    }

    std::remove("cli_quad.csv");
}

TEST_CASE("case run subcommand") {
    SUBCASE("json error table for the temperature defaults") {
        const auto r = run_cli("case run temperature --format json");
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("case") == "temperature");
        REQUIRE(j.at("entries").size() == 6);
        CHECK(j.at("entries").at(0).at("scheme") == "forward1");
    }
    SUBCASE("markdown table is the default") {
        const auto r = run_cli("case run logistic");
        REQUIRE(r.code == 0);
        CHECK(r.out.find("e_emp^centered2") != std::string::npos);
        CHECK(r.out.find("|") != std::string::npos);
    }
    SUBCASE("model overrides") {
        const auto r = run_cli(
            "case run market --set D=0.5 --set lambda=-2 --format csv");
        CHECK(r.code == 0);
        CHECK(run_cli("case run market --set omega=1").code == 2);
    }
    SUBCASE("grid over the logistic blow-up exits 4") {
        CHECK(run_cli("case run logistic --t0 0 --t1 500 --n 6").code == 4);
    }
    SUBCASE("degenerate grid exits 3") {
        CHECK(run_cli("case run logistic --t0 10 --t1 0 --h 1").code == 3);
        CHECK(run_cli("case run logistic --n 1").code == 3);
    }
    SUBCASE("experimental series on the wrong grid exits 3") {
        write_file("cli_exp.csv", "t,value\n0,1\n7,2\n14,3\n");
        CHECK(run_cli("case run logistic --experimental cli_exp.csv").code ==
              3);
        std::remove("cli_exp.csv");
    }
    SUBCASE("plot output is a standalone SVG") {
        const auto r =
            run_cli("case run temperature --plot cli_plot.svg -o cli_tab.md");
        REQUIRE(r.code == 0);
        const std::string svg = read_file("cli_plot.svg");
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("version=\"1.1\"") != std::string::npos);
        std::size_t polylines = 0;
        for (std::size_t pos = svg.find("<polyline");
             pos != std::string::npos; pos = svg.find("<polyline", pos + 1))
            ++polylines;
        // analytic rate plus six scheme estimates
        CHECK(polylines == 7);
        std::remove("cli_plot.svg");
        std::remove("cli_tab.md");
    }
}

TEST_CASE("converge subcommand") {
    SUBCASE("logistic centered high recovers fourth order") {
        const auto r = run_cli(
            "converge logistic --scheme centered --accuracy high --t 60 "
            "--format json");
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("theoretical_order") == 4);
        CHECK(j.at("indeterminate") == false);
        CHECK(std::abs(double(j.at("slope")) - 4.0) < 0.3);
    }
    SUBCASE("csv sweep output") {
        const auto r = run_cli(
            "converge temperature --scheme forward --accuracy low --t 6 "
            "--h-max 0.5 --h-min 0.00390625 --points 8");
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("h,error,above_floor", 0) == 0);
        std::size_t rows = 0;
        for (char c : r.out) rows += (c == '\n');
        CHECK(rows == 9);
    }
    SUBCASE("constant target reports indeterminate order, exit 0") {
        const auto r = run_cli(
            "converge market --set D=0 --scheme centered --accuracy low "
            "--t 10 --format json");
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("indeterminate") == true);
    }
    SUBCASE("mismatch between observed and theoretical order exits 5") {
        // Steps of 6 to 96 hours alias the 24-hour forcing cycle, so the
        // sweep cannot show the centered rule's second-order decay.
        const auto r = run_cli(
            "converge temperature --scheme centered --accuracy low --t 6 "
            "--h-max 96 --h-min 6 --points 5");
        CHECK(r.code == 5);
    }
    SUBCASE("preset registry file via environment") {
        write_file("cli_presets.json",
                   "{\"version\":1,\"presets\":[{\"name\":\"paper-market\","
                   "\"model\":\"market\",\"source\":\"user\","
                   "\"params\":{\"D\":2.0,\"lambda\":-2.0,\"a\":4.0,"
                   "\"b\":-1.0,\"c\":0.1}}]}");
        // popen runs through sh, so set the variable inline
        const std::string cmd =
            "FDBENCH_PRESETS=cli_presets.json " +
            std::string(FDBENCH_CLI_PATH) +
            " converge market --scheme centered --accuracy low --t 1 "
            "--h-max 0.5 --h-min 0.00390625 --points 8 --format json "
            "2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
        const int status = pclose(pipe);
        REQUIRE(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == 0);
        const json j = json::parse(out);
        CHECK(std::abs(double(j.at("slope")) - 2.0) < 0.3);
        std::remove("cli_presets.json");
    }
}
