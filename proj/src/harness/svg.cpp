#include "sdcwalk/harness/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace sdcwalk::harness {
namespace {

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 150, kTop = 40, kBottom = 60;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& s, const char* anchor = "middle", const std::string& extra = "") {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\"" + extra + ">" +
           escape(s) + "</text>\n";
}

}  // namespace

std::string render(const LinePlot& plot) {
    auto usable = [&](double y) { return std::isfinite(y) && (!plot.log_y || y > 0.0); };
    auto ty = [&](double y) { return plot.log_y ? std::log10(y) : y; };

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : plot.series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.y[i]) || !std::isfinite(s.x[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, ty(s.y[i]));
            y1 = std::max(y1, ty(s.y[i]));
        }
    }
    if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

    std::string out = header(kWidth, kHeight);
    out += text(kWidth / 2, 24, plot.title, "middle", " font-size=\"15\"");
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4;
        out += text(px(xv), kTop + ph + 18, tick(xv));
        if (!plot.log_y) out += text(kLeft - 6, py(y0 + (y1 - y0) * k / 4) + 4, tick(y0 + (y1 - y0) * k / 4), "end");
    }
    if (plot.log_y) {
        const int lo = static_cast<int>(std::ceil(y0)), hi = static_cast<int>(std::floor(y1));
        const int stride = std::max(1, (hi - lo + 7) / 8);
        for (int e = lo; e <= hi; e += stride) out += text(kLeft - 6, py(e) + 4, "1e" + std::to_string(e), "end");
    }
    out += text(kLeft + pw / 2, kHeight - 16, plot.x_label);
    out += text(20, kTop + ph / 2, plot.y_label, "middle",
                " transform=\"rotate(-90 20 " + num(kTop + ph / 2) + ")\"");

    for (std::size_t si = 0; si < plot.series.size(); ++si) {
        const auto& s = plot.series[si];
        const char* colour = kPalette[si % kPalette.size()];
        std::string path;
        bool pen_down = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.y[i]) || !std::isfinite(s.x[i])) {
                pen_down = false;
                continue;
            }
            path += (pen_down ? " L" : " M") + num(px(s.x[i])) + " " + num(py(ty(s.y[i])));
            pen_down = true;
        }
        if (!path.empty()) {
            out += "<path d=\"" + path.substr(1) + "\" fill=\"none\" stroke=\"" + colour + "\" stroke-width=\"1.5\"/>\n";
        }
        const double ly = kTop + 14 + 18 * static_cast<double>(si);
        out += "<line x1=\"" + num(kWidth - kRight + 12) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(kWidth - kRight + 32) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        out += text(kWidth - kRight + 38, ly, s.label, "start");
    }
    out += "</svg>\n";
    return out;
}

std::string render_heatmaps(const std::string& title, const std::vector<HeatmapPanel>& panels) {
    constexpr double kPanel = 320, kGap = 30, kPad = 40;
    const double width = kPad * 2 + static_cast<double>(panels.size()) * kPanel +
                         static_cast<double>(panels.empty() ? 0 : panels.size() - 1) * kGap;
    const double height = kPanel + 2 * kPad + 20;
    std::string out = header(std::max(width, 200.0), height);
    out += text(std::max(width, 200.0) / 2, 22, title, "middle", " font-size=\"15\"");

    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& panel = panels[k];
        const double left = kPad + static_cast<double>(k) * (kPanel + kGap), top = kPad + 10;
        int radius = 0;
        double pmax = 0.0;
        for (const auto& [s, p] : panel.values) {
            radius = std::max({radius, std::abs(s.m), std::abs(s.n)});
            pmax = std::max(pmax, p);
        }
        const double cell = kPanel / (2 * radius + 1);
        out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(kPanel) + "\" height=\"" +
               num(kPanel) + "\" fill=\"#f4f4f4\" stroke=\"black\"/>\n";
        for (const auto& [s, p] : panel.values) {
            if (pmax <= 0.0 || p <= 0.0) continue;
            const int shade = static_cast<int>(std::lround(255.0 * (1.0 - p / pmax)));
            char colour[16];
            std::snprintf(colour, sizeof colour, "#%02x%02xff", shade, shade);
            out += "<rect x=\"" + num(left + (s.m + radius) * cell) + "\" y=\"" + num(top + (radius - s.n) * cell) +
                   "\" width=\"" + num(cell) + "\" height=\"" + num(cell) + "\" fill=\"" + colour + "\"/>\n";
        }
        out += text(left + kPanel / 2, top + kPanel + 20, panel.label + "  (max P = " + tick(pmax) + ")");
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sdcwalk::harness
