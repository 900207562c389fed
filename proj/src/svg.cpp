#include "fdbench/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fdbench/errors.hpp"
#include "fdbench/numfmt.hpp"

namespace fdbench {

namespace {

const char* kPalette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c",
                          "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

// Fixed 2-decimal pixel coordinates keep the output compact and stable.
std::string px(double v) { return format_fixed(v, 2); }

// Round tick labels to a short general form.
std::string tick_label(double v) {
    if (v == 0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartCurve>& curves, int width,
                              int height) {
    if (curves.empty()) throw Error("chart needs at least one curve");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves) {
        for (std::size_t i = 0; i < c.data.size(); ++i) {
            if (is_missing(c.data.values[i])) continue;
            xmin = std::min(xmin, c.data.times[i]);
            xmax = std::max(xmax, c.data.times[i]);
            ymin = std::min(ymin, c.data.values[i]);
            ymax = std::max(ymax, c.data.values[i]);
        }
    }
    if (!(xmax >= xmin)) throw Error("chart has no plottable points");
    if (xmax == xmin) { xmax = xmin + 1; }
    if (ymax == ymin) { ymax = ymin + 1; ymin -= 1; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double ml = 70, mr = 160, mt = 40, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
       << " " << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << px(ml + pw / 2) << "\" y=\"24\" font-size=\"16\" "
          "text-anchor=\"middle\" font-family=\"sans-serif\">"
       << xml_escape(title) << "</text>\n";

    // frame
    os << "<rect x=\"" << px(ml) << "\" y=\"" << px(mt) << "\" width=\""
       << px(pw) << "\" height=\"" << px(ph)
       << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // ticks
    const int nticks = 6;
    for (int i = 0; i < nticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / (nticks - 1);
        const double gx = sx(fx);
        os << "<line x1=\"" << px(gx) << "\" y1=\"" << px(mt + ph) << "\" x2=\""
           << px(gx) << "\" y2=\"" << px(mt + ph + 5)
           << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << px(gx) << "\" y=\"" << px(mt + ph + 20)
           << "\" font-size=\"11\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\">"
           << tick_label(fx) << "</text>\n";
        const double fy = ymin + (ymax - ymin) * i / (nticks - 1);
        const double gy = sy(fy);
        os << "<line x1=\"" << px(ml - 5) << "\" y1=\"" << px(gy) << "\" x2=\""
           << px(ml) << "\" y2=\"" << px(gy) << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << px(ml - 8) << "\" y=\"" << px(gy + 4)
           << "\" font-size=\"11\" text-anchor=\"end\" "
              "font-family=\"sans-serif\">"
           << tick_label(fy) << "</text>\n";
    }
    os << "<text x=\"" << px(ml + pw / 2) << "\" y=\"" << px(height - 12)
       << "\" font-size=\"13\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\">"
       << xml_escape(x_label) << "</text>\n";
    os << "<text x=\"18\" y=\"" << px(mt + ph / 2)
       << "\" font-size=\"13\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
       << px(mt + ph / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

    // curves: missing points split the polyline into segments
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        const char* color = kPalette[ci % (sizeof(kPalette) / sizeof(*kPalette))];
        std::vector<std::string> segment;
        auto flush = [&]() {
            if (segment.size() >= 2) {
                os << "<polyline fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t k = 0; k < segment.size(); ++k) {
                    if (k) os << ' ';
                    os << segment[k];
                }
                os << "\"/>\n";
            }
            segment.clear();
        };
        for (std::size_t i = 0; i < c.data.size(); ++i) {
            if (is_missing(c.data.values[i])) {
                flush();
                continue;
            }
            segment.push_back(px(sx(c.data.times[i])) + "," +
                              px(sy(c.data.values[i])));
        }
        flush();

        // legend entry
        const double ly = mt + 14 + 18.0 * ci;
        os << "<line x1=\"" << px(ml + pw + 12) << "\" y1=\"" << px(ly)
           << "\" x2=\"" << px(ml + pw + 36) << "\" y2=\"" << px(ly)
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << px(ml + pw + 42) << "\" y=\"" << px(ly + 4)
           << "\" font-size=\"12\" font-family=\"sans-serif\">"
           << xml_escape(c.label) << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace fdbench
