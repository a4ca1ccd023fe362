#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdcwalk/types.hpp"

namespace sdcwalk::harness {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // non-finite points are skipped
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;  // non-positive values are skipped on a log axis
    std::vector<PlotSeries> series;
};

// Static SVG line chart with fixed size, fonts and palette.
std::string render(const LinePlot& plot);

struct HeatmapPanel {
    std::string label;
    std::vector<std::pair<Site, double>> values;
};

// One square-cell panel per entry, side by side, colour linear in P / max P.
std::string render_heatmaps(const std::string& title, const std::vector<HeatmapPanel>& panels);

}  // namespace sdcwalk::harness
