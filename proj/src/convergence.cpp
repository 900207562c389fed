#include "fdbench/convergence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

std::vector<double> geometric_grid(double h_max, double h_min, int points) {
    if (!(h_max > h_min) || !(h_min > 0))
        throw Error("geometric grid requires h_max > h_min > 0");
    if (points < 2) throw Error("geometric grid needs at least 2 points");
    const double ratio = std::pow(h_min / h_max, 1.0 / (points - 1));
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = h_max * std::pow(ratio, i);
    grid.back() = h_min;
    return grid;
}

namespace {

void check_geometric(const std::vector<double>& h_grid) {
    if (h_grid.size() < 5)
        throw Error("h sweep needs at least 5 points");
    const double ratio = h_grid[1] / h_grid[0];
    if (!(ratio > 0) || !(ratio < 1))
        throw Error("h sweep must decrease geometrically (ratio in (0,1))");
    for (std::size_t i = 1; i < h_grid.size(); ++i) {
        const double r = h_grid[i] / h_grid[i - 1];
        if (std::abs(r - ratio) > 1e-9 * ratio)
            throw Error("h sweep is not geometric at index " + std::to_string(i));
    }
}

} // namespace

ConvergenceResult detail::observed_order_impl(
    const Stencil& stencil, const std::function<long double(long double)>& f,
    const std::function<long double(long double)>& f_rate, double x,
    const std::vector<double>& h_grid) {
    check_geometric(h_grid);

    ConvergenceResult res;
    res.h = h_grid;
    res.theoretical = stencil.accuracy_order;
    const long double exact = f_rate(x);
    const double floor = 100.0 * std::numeric_limits<double>::epsilon() *
                         std::abs(static_cast<double>(exact));

    for (double h : h_grid) {
        const long double est =
            estimate_as<long double>(stencil, f, (long double)x, (long double)h);
        const double err = static_cast<double>(std::abs(est - exact));
        res.error.push_back(err);
        res.above_floor.push_back(err > floor);
    }

    // OLS fit of log(error) vs log(h) over surviving points.
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < res.h.size(); ++i) {
        if (!res.above_floor[i]) continue;
        lx.push_back(std::log(res.h[i]));
        ly.push_back(std::log(res.error[i]));
    }
    if (lx.size() < 3) {
        res.indeterminate = true;
        return res;
    }
    const std::size_t n = lx.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += lx[i]; my += ly[i]; }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    res.slope = sxy / sxx;
    double ssr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = ly[i] - my - res.slope * (lx[i] - mx);
        ssr += resid * resid;
    }
    const double se =
        n > 2 ? std::sqrt(ssr / (static_cast<double>(n) - 2) / sxx) : 0.0;
    res.slope_halfwidth = 2.0 * se;
    return res;
}

CostProfile cost_profile(const Stencil& s) {
    CostProfile c{0, 0, s.points_before(), s.points_after()};
    for (const Rational& coeff : s.coefficients)
        if (coeff != 0) ++c.evaluations;
    c.multiply_adds = c.evaluations;
    return c;
}

nlohmann::json convergence_to_json(const ConvergenceResult& r) {
    nlohmann::json sweep = nlohmann::json::array();
    for (std::size_t i = 0; i < r.h.size(); ++i) {
        sweep.push_back({{"h", r.h[i]},
                         {"error", r.error[i]},
                         {"above_floor", static_cast<bool>(r.above_floor[i])}});
    }
    nlohmann::json j = {{"sweep", sweep},
                        {"theoretical_order", r.theoretical},
                        {"indeterminate", r.indeterminate}};
    if (!r.indeterminate) {
        j["slope"] = r.slope;
        j["slope_halfwidth"] = r.slope_halfwidth;
    }
    return j;
}

std::string convergence_to_csv(const ConvergenceResult& r) {
    std::ostringstream os;
    os << "h,error,above_floor\n";
    for (std::size_t i = 0; i < r.h.size(); ++i) {
        os << format_double(r.h[i]) << ',' << format_double(r.error[i]) << ','
           << (r.above_floor[i] ? 1 : 0) << "\n";
    }
    return os.str();
}

nlohmann::json cost_profile_to_json(const CostProfile& c) {
    return {{"evaluations", c.evaluations},
            {"multiply_adds", c.multiply_adds},
            {"points_before", c.points_before},
            {"points_after", c.points_after}};
}

} // namespace fdbench
