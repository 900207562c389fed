#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace fdbench {

/// Paired (time, value) samples. Values may contain explicit missing
/// sentinels (NaN); times are always strictly increasing.
struct Series {
    std::vector<double> times;
    std::vector<double> values;
    std::string time_unit;
    std::string value_unit;

    std::size_t size() const { return times.size(); }
    bool empty() const { return times.empty(); }
};

inline bool is_missing(double v) { return std::isnan(v); }
inline double missing_sentinel() { return std::nan(""); }

/// Relative tolerance for treating a grid as uniform.
inline constexpr double kUniformGridTolerance = 1e-9;

/// Returns the common spacing h of a uniform grid, or throws GridError
/// when any gap deviates from h by more than the relative tolerance.
double uniform_spacing(const Series& s);

/// True when both series share the same time axis to 1e-12 relative.
bool same_time_axis(const Series& a, const Series& b);

} // namespace fdbench
