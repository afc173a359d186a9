#include "ptbath/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ptbath::svg {

namespace {

constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Tick spacing of the form {1, 2, 5} * 10^k giving roughly `target` ticks.
double nice_step(double range, int target) {
    const double raw = range / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm <= 1.0)
        step = 1.0;
    else if (norm <= 2.0)
        step = 2.0;
    else if (norm <= 5.0)
        step = 5.0;
    return step * mag;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad(double frac) {
        const double span = hi - lo;
        lo -= frac * span;
        hi += frac * span;
    }
    void degenerate_fix() {
        if (!(hi > lo)) {
            lo -= 1.0;
            hi += 1.0;
        }
    }
};

}  // namespace

void Panel::add_vline(double x, std::string color, std::string label) {
    vlines_.push_back({x, std::move(color), std::move(label)});
}

std::string Panel::render_group(double y_offset) const {
    Range xr, yr;
    bool first = true;
    for (const auto& s : series_)
        for (const auto& p : s.points) {
            if (first) {
                xr = {p[0], p[0]};
                yr = {p[1], p[1]};
                first = false;
            } else {
                xr.include(p[0]);
                yr.include(p[1]);
            }
        }
    for (const auto& v : vlines_) xr.include(v.x);
    xr.degenerate_fix();
    yr.degenerate_fix();
    yr.pad(0.06);

    const double x0 = kMarginLeft;
    const double x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom;  // pixel y of data minimum
    const double y1 = kMarginTop;

    auto px = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
    auto py = [&](double y) { return y0 + (y - yr.lo) / (yr.hi - yr.lo) * (y1 - y0); };

    std::ostringstream out;
    out << "<g transform=\"translate(0," << fmt(y_offset) << ")\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\""
        << fmt(kHeight) << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y1) << "\" width=\""
        << fmt(x1 - x0) << "\" height=\"" << fmt(y0 - y1)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Axis ticks and labels.
    const double xstep = nice_step(xr.hi - xr.lo, 6);
    for (double t = std::ceil(xr.lo / xstep) * xstep; t <= xr.hi + 1e-9 * xstep;
         t += xstep) {
        const double x = px(t);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(y0 + 6.0) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y0 + 22.0)
            << "\" font-size=\"13\" text-anchor=\"middle\">" << fmt(t, "%g")
            << "</text>\n";
    }
    const double ystep = nice_step(yr.hi - yr.lo, 6);
    for (double t = std::ceil(yr.lo / ystep) * ystep; t <= yr.hi + 1e-9 * ystep;
         t += ystep) {
        const double y = py(t);
        out << "<line x1=\"" << fmt(x0 - 6.0) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(x0) << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(x0 - 10.0) << "\" y=\"" << fmt(y + 4.0)
            << "\" font-size=\"13\" text-anchor=\"end\">" << fmt(t, "%g")
            << "</text>\n";
    }

    // Titles.
    out << "<text x=\"" << fmt((x0 + x1) / 2.0) << "\" y=\"" << fmt(kMarginTop - 18.0)
        << "\" font-size=\"17\" text-anchor=\"middle\">" << title_ << "</text>\n";
    out << "<text x=\"" << fmt((x0 + x1) / 2.0) << "\" y=\"" << fmt(kHeight - 14.0)
        << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label_ << "</text>\n";
    out << "<text x=\"20\" y=\"" << fmt((y0 + y1) / 2.0)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << fmt((y0 + y1) / 2.0) << ")\">" << y_label_ << "</text>\n";

    // Vertical markers.
    for (const auto& v : vlines_) {
        const double x = px(v.x);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << fmt(y0) << "\" stroke=\"" << v.color
            << "\" stroke-width=\"1.5\" stroke-dasharray=\"4,4\"/>\n";
        if (!v.label.empty())
            out << "<text x=\"" << fmt(x + 5.0) << "\" y=\"" << fmt(y1 + 16.0)
                << "\" font-size=\"13\" fill=\"" << v.color << "\">" << v.label
                << "</text>\n";
    }

    // Curves.
    for (const auto& s : series_) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"";
        if (!s.dash.empty()) out << " stroke-dasharray=\"" << s.dash << "\"";
        out << " points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) out << ' ';
            out << fmt(px(s.points[i][0])) << ',' << fmt(py(s.points[i][1]));
        }
        out << "\"/>\n";
    }

    // Legend, top right of the plot area.
    double ly = y1 + 16.0;
    for (const auto& s : series_) {
        out << "<line x1=\"" << fmt(x1 - 150.0) << "\" y1=\"" << fmt(ly) << "\" x2=\""
            << fmt(x1 - 120.0) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"";
        if (!s.dash.empty()) out << " stroke-dasharray=\"" << s.dash << "\"";
        out << "/>\n";
        out << "<text x=\"" << fmt(x1 - 112.0) << "\" y=\"" << fmt(ly + 4.0)
            << "\" font-size=\"13\">" << s.label << "</text>\n";
        ly += 18.0;
    }

    out << "</g>\n";
    return out.str();
}

std::string render_document(const std::vector<Panel>& panels) {
    const double total_height = Panel::kHeight * static_cast<double>(panels.size());
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(Panel::kWidth)
        << "\" height=\"" << fmt(total_height) << "\" viewBox=\"0 0 "
        << fmt(Panel::kWidth) << ' ' << fmt(total_height) << "\">\n";
    double offset = 0.0;
    for (const auto& p : panels) {
        out << p.render_group(offset);
        offset += Panel::kHeight;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ptbath::svg
