#pragma once

#include <string>
#include <vector>

namespace fermisea::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// One plot panel. Polar panels interpret x as theta in radians over [0, pi]
// (mirrored to a full circle, theta = 0 at the top) and y as the radius.
// Stem panels draw a vertical impulse per point.
struct Panel {
  enum class Kind { XY, Polar, Stem };
  Kind kind = Kind::XY;
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<std::string> x_tick_text;  // optional, Stem panels only
};

/// Render panels stacked vertically into a self-contained SVG document.
/// Output bytes are deterministic for identical input.
std::string render(const std::vector<Panel>& panels, const std::string& meta_comment);

}  // namespace fermisea::svg
