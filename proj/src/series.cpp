#include "fdbench/series.hpp"

#include <cmath>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

double uniform_spacing(const Series& s) {
    if (s.size() < 2)
        throw GridError("series has fewer than 2 samples; no spacing defined");
    const double h = (s.times.back() - s.times.front()) /
                     static_cast<double>(s.size() - 1);
    if (!(h > 0))
        throw GridError("series times are not increasing");
    double worst = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const double gap = s.times[i] - s.times[i - 1];
        worst = std::max(worst, std::abs(gap - h));
    }
    if (worst > kUniformGridTolerance * std::abs(h))
        throw GridError("non-uniform grid: max spacing deviation " +
                        format_double(worst) + " exceeds tolerance " +
                        format_double(kUniformGridTolerance * std::abs(h)));
    return h;
}

bool same_time_axis(const Series& a, const Series& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max({std::abs(a.times[i]), std::abs(b.times[i]), 1.0});
        if (std::abs(a.times[i] - b.times[i]) > 1e-12 * scale) return false;
    }
    return true;
}

} // namespace fdbench
