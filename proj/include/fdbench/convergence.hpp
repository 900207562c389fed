#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdbench/stencil.hpp"

namespace fdbench {

/// One h-sweep: per-h absolute error, the log-log fitted slope over the
/// points above the round-off floor, and the stencil's theoretical order.
struct ConvergenceResult {
    std::vector<double> h;        // strictly decreasing, geometric
    std::vector<double> error;    // |estimate - analytic rate|
    std::vector<bool> above_floor;
    double slope = 0;
    double slope_halfwidth = 0;   // ~2 sigma confidence half-width
    int theoretical = 0;
    bool indeterminate = false;   // fewer than 3 points survived the floor
};

/// Geometric grid from h_max down to h_min with the given point count.
std::vector<double> geometric_grid(double h_max, double h_min, int points);

namespace detail {
ConvergenceResult observed_order_impl(
    const Stencil& stencil, const std::function<long double(long double)>& f,
    const std::function<long double(long double)>& f_rate, double x,
    const std::vector<double>& h_grid);
} // namespace detail

/// Measures the observed order of accuracy of a stencil at x against an
/// analytic derivative. Errors below 100*eps*|f_rate(x)| (double
/// machine epsilon, the precision of the data the stencils normally
/// consume) count as round-off floor and are excluded from the fit.
/// Stencil sums are evaluated in extended precision so that surviving
/// points measure truncation, not cancellation.
template <typename F, typename G>
ConvergenceResult observed_order(const Stencil& stencil, F&& f, G&& f_rate,
                                 double x, const std::vector<double>& h_grid) {
    std::function<long double(long double)> fw =
        [&](long double t) -> long double { return f(t); };
    std::function<long double(long double)> gw =
        [&](long double t) -> long double { return f_rate(t); };
    return detail::observed_order_impl(stencil, fw, gw, x, h_grid);
}

/// Static per-point cost of applying a stencil.
struct CostProfile {
    int evaluations;    // nonzero coefficients
    int multiply_adds;  // one fused multiply-add per nonzero coefficient
    int points_before;  // context needed before the evaluation index
    int points_after;
};

CostProfile cost_profile(const Stencil& s);

nlohmann::json convergence_to_json(const ConvergenceResult& r);
std::string convergence_to_csv(const ConvergenceResult& r);
nlohmann::json cost_profile_to_json(const CostProfile& c);

} // namespace fdbench
