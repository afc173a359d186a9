#ifndef PTBATH_SVG_PLOT_HPP
#define PTBATH_SVG_PLOT_HPP

#include <array>
#include <string>
#include <vector>

namespace ptbath::svg {

/// One curve: drawn as a single <polyline>. `dash` is an SVG dash pattern
/// ("" for a solid line).
struct Series {
    std::string label;
    std::string color;
    std::string dash;
    std::vector<std::array<double, 2>> points;
};

/// One 800x600 panel with linear axes, computed ticks and a legend.
/// Rendering is deterministic: fixed formatting, no timestamps, no
/// randomness.
class Panel {
  public:
    Panel(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)),
          x_label_(std::move(x_label)),
          y_label_(std::move(y_label)) {}

    void add_series(Series series) { series_.push_back(std::move(series)); }

    /// Vertical marker, drawn as a dashed <line> spanning the plot area.
    void add_vline(double x, std::string color, std::string label = "");

    /// Emit the panel as a <g> translated by (0, y_offset).
    std::string render_group(double y_offset) const;

    static constexpr double kWidth = 800.0;
    static constexpr double kHeight = 600.0;

  private:
    struct VLine {
        double x;
        std::string color;
        std::string label;
    };

    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
    std::vector<VLine> vlines_;
};

/// Wrap panels, stacked vertically, into a standalone SVG document.
std::string render_document(const std::vector<Panel>& panels);

}  // namespace ptbath::svg

#endif  // PTBATH_SVG_PLOT_HPP
