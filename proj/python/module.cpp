// Python bindings for the finite-difference benchmark library.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdbench/convergence.hpp"
#include "fdbench/csv_io.hpp"
#include "fdbench/error_metrics.hpp"
#include "fdbench/errors.hpp"
#include "fdbench/models.hpp"
#include "fdbench/presets.hpp"
#include "fdbench/stencil.hpp"

namespace py = pybind11;
using namespace fdbench;

namespace {

Series make_series(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size())
        throw GridError("times and values must have equal length");
    Series s;
    s.times = std::move(times);
    s.values = std::move(values);
    return s;
}

Scheme make_scheme(const std::string& family, const std::string& accuracy) {
    return {parse_family(family), parse_accuracy(accuracy)};
}

std::vector<double> coefficients_as_floats(const Stencil& s) {
    std::vector<double> out;
    out.reserve(s.coefficients.size());
    for (const auto& c : s.coefficients)
        out.push_back(static_cast<double>(c));
    return out;
}

std::vector<std::string> coefficients_as_strings(const Stencil& s) {
    std::vector<std::string> out;
    out.reserve(s.coefficients.size());
    for (const auto& c : s.coefficients) out.push_back(rational_to_string(c));
    return out;
}

} // namespace

PYBIND11_MODULE(_fdbench, m) {
    m.doc() = "Finite-difference differentiation benchmark bindings";

    py::register_exception<Error>(m, "FdbenchError", PyExc_RuntimeError);

    py::class_<Stencil>(m, "Stencil")
        .def_readonly("offsets", &Stencil::offsets)
        .def_readonly("derivative_order", &Stencil::derivative_order)
        .def_readonly("accuracy_order", &Stencil::accuracy_order)
        .def_property_readonly("coefficients", &coefficients_as_floats)
        .def_property_readonly("coefficient_strings", &coefficients_as_strings)
        .def("__repr__", [](const Stencil& s) {
            std::string r = "Stencil(offsets=[";
            for (std::size_t i = 0; i < s.offsets.size(); ++i) {
                if (i) r += ", ";
                r += std::to_string(s.offsets[i]);
            }
            r += "], d=" + std::to_string(s.derivative_order) +
                 ", p=" + std::to_string(s.accuracy_order) + ")";
            return r;
        });

    m.def(
        "builtin_stencil",
        [](const std::string& family, const std::string& accuracy) {
            return builtin_stencil(make_scheme(family, accuracy));
        },
        py::arg("family"), py::arg("accuracy") = "low");
    m.def("generate_stencil", &generate_stencil, py::arg("offsets"),
          py::arg("derivative_order") = 1);
    m.def("scheme_names", []() {
        std::vector<std::string> names;
        for (const Scheme& s : all_schemes()) names.push_back(s.name());
        return names;
    });

    m.def(
        "estimate",
        [](const Stencil& s, const std::function<double(double)>& f, double x,
           double h) { return estimate(s, f, x, h); },
        py::arg("stencil"), py::arg("f"), py::arg("x"), py::arg("h"));

    m.def(
        "differentiate_series",
        [](std::vector<double> times, std::vector<double> values,
           const std::string& family, const std::string& accuracy,
           const std::string& policy) {
            const auto result = differentiate_series(
                make_series(std::move(times), std::move(values)),
                make_scheme(family, accuracy), parse_boundary_policy(policy));
            return py::make_tuple(result.series.times, result.series.values,
                                  result.stencil_used);
        },
        py::arg("times"), py::arg("values"), py::arg("family"),
        py::arg("accuracy") = "low", py::arg("policy") = "fallback");

    py::class_<LogisticModel>(m, "LogisticModel")
        .def(py::init<double, double, double>(), py::arg("A"), py::arg("p1"),
             py::arg("p0"))
        .def_readwrite("A", &LogisticModel::A)
        .def_readwrite("p1", &LogisticModel::p1)
        .def_readwrite("p0", &LogisticModel::p0)
        .def("value", &LogisticModel::value)
        .def("rate", &LogisticModel::rate)
        .def("singularity", [](const LogisticModel& m) {
            return m.singularity();
        });

    py::class_<TemperatureModel>(m, "TemperatureModel")
        .def(py::init<double, double, double, double, double>(), py::arg("B1"),
             py::arg("B2"), py::arg("k1"), py::arg("omega"), py::arg("T0"))
        .def_readwrite("B1", &TemperatureModel::B1)
        .def_readwrite("B2", &TemperatureModel::B2)
        .def_readwrite("k1", &TemperatureModel::k1)
        .def_readwrite("omega", &TemperatureModel::omega)
        .def_readwrite("T0", &TemperatureModel::T0)
        .def("f1", &TemperatureModel::f1)
        .def("value", &TemperatureModel::value)
        .def("rate", &TemperatureModel::rate);

    py::class_<MarketModel>(m, "MarketModel")
        .def(py::init<double, double, double, double, double>(), py::arg("D"),
             py::arg("lam"), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readwrite("D", &MarketModel::D)
        .def_readwrite("lam", &MarketModel::lambda)
        .def_readwrite("a", &MarketModel::a)
        .def_readwrite("b", &MarketModel::b)
        .def_readwrite("c", &MarketModel::c)
        .def("growth_rate", &MarketModel::growth_rate)
        .def("equilibrium_price", &MarketModel::equilibrium_price)
        .def("value", &MarketModel::value)
        .def("rate", &MarketModel::rate);

    m.def("preset_names", []() {
        return PresetRegistry::builtin().names();
    });

    m.def(
        "sample_case",
        [](const std::string& case_id, double t0, double t1, int n) {
            const auto cs = make_case(case_id);
            const Series s = sample_model(cs.value, t0, t1, n);
            return py::make_tuple(s.times, s.values);
        },
        py::arg("case_id"), py::arg("t0"), py::arg("t1"), py::arg("n"));

    m.def(
        "error_variants",
        [](std::vector<double> times, std::vector<double> reference,
           std::vector<double> estimate) {
            const auto ref = make_series(times, std::move(reference));
            const auto est = make_series(times, std::move(estimate));
            const auto v = error_variants(ref, est);
            py::dict out;
            out["signed"] = v.signed_err;
            out["abs_l1"] = v.abs_l1;
            out["rms"] = v.rms;
            return out;
        },
        py::arg("times"), py::arg("reference"), py::arg("estimate"));

    m.def(
        "case_error_table",
        [](const std::string& case_id, double t0, double t1, double h) {
            const auto report =
                case_error_table(make_case(case_id), t0, t1, h);
            py::list rows;
            for (const auto& e : report.entries) {
                py::dict row;
                row["scheme"] = e.scheme;
                row["reference"] = e.reference;
                row["signed"] = e.values.signed_err;
                row["abs_l1"] = e.values.abs_l1;
                row["rms"] = e.values.rms;
                rows.append(row);
            }
            return rows;
        },
        py::arg("case_id"), py::arg("t0"), py::arg("t1"), py::arg("h"));

    py::class_<ConvergenceResult>(m, "ConvergenceResult")
        .def_readonly("h", &ConvergenceResult::h)
        .def_readonly("error", &ConvergenceResult::error)
        .def_readonly("slope", &ConvergenceResult::slope)
        .def_readonly("slope_halfwidth", &ConvergenceResult::slope_halfwidth)
        .def_readonly("theoretical", &ConvergenceResult::theoretical)
        .def_readonly("indeterminate", &ConvergenceResult::indeterminate);

    m.def("geometric_grid", &geometric_grid, py::arg("h_max"),
          py::arg("h_min"), py::arg("points"));

    m.def(
        "observed_order",
        [](const Stencil& s, const std::function<double(double)>& f,
           const std::function<double(double)>& f_rate, double x,
           const std::vector<double>& h_grid) {
            return observed_order(
                s, [&](long double t) { return (long double)f((double)t); },
                [&](long double t) { return (long double)f_rate((double)t); },
                x, h_grid);
        },
        py::arg("stencil"), py::arg("f"), py::arg("f_rate"), py::arg("x"),
        py::arg("h_grid"));

    py::class_<CostProfile>(m, "CostProfile")
        .def_readonly("evaluations", &CostProfile::evaluations)
        .def_readonly("multiply_adds", &CostProfile::multiply_adds)
        .def_readonly("points_before", &CostProfile::points_before)
        .def_readonly("points_after", &CostProfile::points_after);
    m.def("cost_profile", &cost_profile, py::arg("stencil"));

    m.def("series_to_csv", [](std::vector<double> times,
                              std::vector<double> values) {
        return series_to_csv(make_series(std::move(times), std::move(values)));
    });
}
