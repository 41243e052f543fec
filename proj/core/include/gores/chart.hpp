#pragma once

#include <span>
#include <string>
#include <vector>

#include "gores/errors.hpp"

namespace gores {

struct ChartPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const ChartPoint&) const = default;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 640;
    int height = 400;
    // Optional fitted-curve polyline (>= 2 samples). Only drawn when the
    // scatter series itself has at least two points.
    std::vector<ChartPoint> curve;
};

// Self-contained SVG scatter chart: axes with tick labels, one circle marker
// per point, optional curve polyline. Output is deterministic byte-for-byte
// for equal inputs (fixed coordinate precision, no timestamps or generated
// ids). Throws EmptySeries when the series has no points.
std::string emit_chart(std::span<const ChartPoint> series, const ChartOptions& options);

} // namespace gores
