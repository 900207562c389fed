#pragma once

#include <string>
#include <vector>

#include "fdbench/series.hpp"

namespace fdbench {

/// One labeled polyline on a chart. Missing values break the line.
struct ChartCurve {
    std::string label;
    Series data;
};

/// Renders a self-contained SVG 1.1 line chart: framed plot area, axis
/// ticks, and a legend. No timestamps or external resources, so the
/// output is byte-stable for identical inputs.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartCurve>& curves,
                              int width = 800, int height = 500);

} // namespace fdbench
