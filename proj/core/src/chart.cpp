#include "gores/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gores {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 48;
constexpr int kTicks = 5;

std::string fixed(double v, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

struct Range {
    double lo;
    double hi;
};

Range padded_range(double lo, double hi) {
    if (lo == hi) {
        // Degenerate span (single point): widen by one unit each way.
        return {lo - 1.0, hi + 1.0};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

} // namespace

std::string emit_chart(std::span<const ChartPoint> series, const ChartOptions& options) {
    if (series.empty()) {
        throw EmptySeries("chart requires at least one data point");
    }

    double x_min = series[0].x;
    double x_max = series[0].x;
    double y_min = series[0].y;
    double y_max = series[0].y;
    for (const auto& p : series) {
        x_min = std::min(x_min, p.x);
        x_max = std::max(x_max, p.x);
        y_min = std::min(y_min, p.y);
        y_max = std::max(y_max, p.y);
    }
    const bool draw_curve = series.size() >= 2 && options.curve.size() >= 2;
    if (draw_curve) {
        for (const auto& p : options.curve) {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    const Range xr = padded_range(x_min, x_max);
    const Range yr = padded_range(y_min, y_max);

    const double plot_w = static_cast<double>(options.width - kMarginLeft - kMarginRight);
    const double plot_h = static_cast<double>(options.height - kMarginTop - kMarginBottom);
    auto sx = [&](double x) {
        return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
    };
    auto sy = [&](double y) {
        return kMarginTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << " " << options.height
        << "\">\n";
    svg << "  <rect width=\"" << options.width << "\" height=\"" << options.height
        << "\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "  <text x=\"" << options.width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(options.title)
            << "</text>\n";
    }

    // Axes
    const double x0 = sx(xr.lo);
    const double x1 = sx(xr.hi);
    const double y0 = sy(yr.lo);
    const double y1 = sy(yr.hi);
    svg << "  <line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x1)
        << "\" y2=\"" << fixed(y0) << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(x0)
        << "\" y2=\"" << fixed(y1) << "\" stroke=\"black\"/>\n";

    for (int i = 0; i < kTicks; ++i) {
        const double t = static_cast<double>(i) / (kTicks - 1);
        const double xv = xr.lo + t * (xr.hi - xr.lo);
        const double yv = yr.lo + t * (yr.hi - yr.lo);
        const double px = sx(xv);
        const double py = sy(yv);
        svg << "  <line x1=\"" << fixed(px) << "\" y1=\"" << fixed(y0) << "\" x2=\"" << fixed(px)
            << "\" y2=\"" << fixed(y0 + 5.0) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << fixed(px) << "\" y=\"" << fixed(y0 + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << xml_escape(tick_label(xv)) << "</text>\n";
        svg << "  <line x1=\"" << fixed(x0 - 5.0) << "\" y1=\"" << fixed(py) << "\" x2=\""
            << fixed(x0) << "\" y2=\"" << fixed(py) << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << fixed(x0 - 8.0) << "\" y=\"" << fixed(py + 3.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << xml_escape(tick_label(yv)) << "</text>\n";
    }
    if (!options.x_label.empty()) {
        svg << "  <text x=\"" << fixed((x0 + x1) / 2.0) << "\" y=\""
            << fixed(static_cast<double>(options.height) - 10.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << xml_escape(options.x_label) << "</text>\n";
    }
    if (!options.y_label.empty()) {
        svg << "  <text x=\"14\" y=\"" << fixed((y0 + y1) / 2.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
            << "transform=\"rotate(-90 14 " << fixed((y0 + y1) / 2.0) << ")\">"
            << xml_escape(options.y_label) << "</text>\n";
    }

    if (draw_curve) {
        svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < options.curve.size(); ++i) {
            if (i > 0) {
                svg << " ";
            }
            svg << fixed(sx(options.curve[i].x)) << "," << fixed(sy(options.curve[i].y));
        }
        svg << "\"/>\n";
    }
    for (const auto& p : series) {
        svg << "  <circle cx=\"" << fixed(sx(p.x)) << "\" cy=\"" << fixed(sy(p.y))
            << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace gores
