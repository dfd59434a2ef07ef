#include "fermisea/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fermisea::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 520.0;
constexpr double kMargin = 64.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

// Locale-independent fixed-point formatting keeps the output byte-stable.
std::string fixed(double v, int decimals = 2) {
  if (!std::isfinite(v)) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

std::string sig(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void text_at(std::ostringstream& out, double x, double y, const std::string& s,
             const std::string& anchor, int size = 13) {
  out << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" font-size=\"" << size
      << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << escape(s)
      << "</text>\n";
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2,
          const std::string& stroke, double width = 1.0) {
  out << "<line x1=\"" << fixed(x1) << "\" y1=\"" << fixed(y1) << "\" x2=\"" << fixed(x2)
      << "\" y2=\"" << fixed(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
      << fixed(width, 1) << "\"/>\n";
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range data_range(const std::vector<Series>& series, bool use_x) {
  Range r{1e300, -1e300};
  for (const Series& s : series) {
    for (double v : use_x ? s.x : s.y) {
      if (!std::isfinite(v)) continue;
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  }
  if (r.lo > r.hi) return {0.0, 1.0};
  if (r.hi == r.lo) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  return r;
}

void legend(std::ostringstream& out, const std::vector<Series>& series, double x, double y) {
  if (series.size() < 2) return;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double yy = y + 18.0 * static_cast<double>(i);
    line(out, x, yy - 4.0, x + 22.0, yy - 4.0, kPalette[i % kPaletteSize], 2.0);
    text_at(out, x + 28.0, y + 18.0 * static_cast<double>(i), series[i].label, "start", 12);
  }
}

void render_cartesian(std::ostringstream& out, const Panel& panel, double top, bool stems) {
  const double left = kMargin;
  const double right = kWidth - kMargin;
  const double bottom = top + kPanelHeight - kMargin;
  const double plot_top = top + kMargin;

  Range xr = data_range(panel.series, true);
  Range yr = data_range(panel.series, false);
  if (stems) yr.lo = std::min(yr.lo, 0.0);
  const double xpad = 0.03 * (xr.hi - xr.lo);
  const double ypad = 0.06 * (yr.hi - yr.lo);
  xr.lo -= xpad;
  xr.hi += xpad;
  yr.hi += ypad;
  if (!stems) yr.lo -= ypad;

  const auto sx = [&](double v) { return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left); };
  const auto sy = [&](double v) {
    return bottom - (v - yr.lo) / (yr.hi - yr.lo) * (bottom - plot_top);
  };

  // frame and ticks
  line(out, left, plot_top, left, bottom, "#333333");
  line(out, left, bottom, right, bottom, "#333333");
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / ticks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / ticks;
    line(out, sx(fx), bottom, sx(fx), bottom + 5.0, "#333333");
    line(out, left - 5.0, sy(fy), left, sy(fy), "#333333");
    if (panel.x_tick_text.empty()) text_at(out, sx(fx), bottom + 20.0, sig(fx), "middle", 11);
    text_at(out, left - 8.0, sy(fy) + 4.0, sig(fy), "end", 11);
  }
  if (!panel.x_tick_text.empty() && !panel.series.empty()) {
    const Series& s0 = panel.series.front();
    for (std::size_t i = 0; i < s0.x.size() && i < panel.x_tick_text.size(); ++i) {
      text_at(out, sx(s0.x[i]), bottom + 20.0, panel.x_tick_text[i], "middle", 10);
    }
  }
  text_at(out, (left + right) / 2.0, bottom + 40.0, panel.x_label, "middle");
  text_at(out, left, plot_top - 26.0, panel.y_label, "start");
  text_at(out, (left + right) / 2.0, plot_top - 26.0, panel.title, "middle", 15);

  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const Series& s = panel.series[si];
    const char* color = kPalette[si % kPaletteSize];
    if (stems) {
      const double base = sy(std::max(0.0, yr.lo));
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        line(out, sx(s.x[i]), base, sx(s.x[i]), sy(s.y[i]), color, 2.0);
        out << "<circle cx=\"" << fixed(sx(s.x[i])) << "\" cy=\"" << fixed(sy(s.y[i]))
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (i) out << ' ';
        out << fixed(sx(s.x[i])) << ',' << fixed(sy(s.y[i]));
      }
      out << "\"/>\n";
    }
  }
  legend(out, panel.series, right - 150.0, plot_top + 10.0);
}

void render_polar(std::ostringstream& out, const Panel& panel, double top) {
  const double cx = kWidth / 2.0;
  const double cy = top + kPanelHeight / 2.0 + 10.0;
  const double radius = (kPanelHeight - 2.0 * kMargin) / 2.0;

  double rmax = 0.0;
  for (const Series& s : panel.series) {
    for (double v : s.y) {
      if (std::isfinite(v)) rmax = std::max(rmax, v);
    }
  }
  if (rmax <= 0.0) rmax = 1.0;
  // round the radial full scale up to one significant digit
  const double mag = std::pow(10.0, std::floor(std::log10(rmax)));
  const double rscale = std::ceil(rmax / mag) * mag;

  for (int i = 1; i <= 4; ++i) {
    out << "<circle cx=\"" << fixed(cx) << "\" cy=\"" << fixed(cy) << "\" r=\""
        << fixed(radius * i / 4.0) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    text_at(out, cx + 4.0, cy - radius * i / 4.0 - 3.0, sig(rscale * i / 4.0), "start", 10);
  }
  line(out, cx, cy - radius, cx, cy + radius, "#bbbbbb");
  line(out, cx - radius, cy, cx + radius, cy, "#bbbbbb");
  text_at(out, cx, cy - radius - 8.0, "theta = 0", "middle", 12);
  text_at(out, cx + radius + 6.0, cy + 4.0, "theta = 90 deg", "start", 12);
  text_at(out, (kWidth) / 2.0, top + kMargin - 26.0, panel.title, "middle", 15);
  text_at(out, kMargin, top + kMargin - 26.0, panel.y_label, "start");

  for (std::size_t si = 0; si < panel.series.size(); ++si) {
    const Series& s = panel.series[si];
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[si % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    // theta = 0 at the top, curve over [0, pi] then its mirror image to
    // close the full circle.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < s.x.size(); ++j) {
        const std::size_t i = pass == 0 ? j : s.x.size() - 1 - j;
        const double r = radius * s.y[i] / rscale;
        const double sign = pass == 0 ? 1.0 : -1.0;
        const double px = cx + sign * r * std::sin(s.x[i]);
        const double py = cy - r * std::cos(s.x[i]);
        if (pass || j) out << ' ';
        out << fixed(px) << ',' << fixed(py);
      }
    }
    out << "\"/>\n";
  }
  legend(out, panel.series, kWidth - kMargin - 150.0, top + kMargin + 10.0);
}

}  // namespace

std::string render(const std::vector<Panel>& panels, const std::string& meta_comment) {
  std::ostringstream out;
  const double height = kPanelHeight * static_cast<double>(panels.empty() ? 1 : panels.size());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0)
      << "\" height=\"" << fixed(height, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' '
      << fixed(height, 0) << "\">\n";
  if (!meta_comment.empty()) out << "<!-- " << meta_comment << " -->\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const double top = kPanelHeight * static_cast<double>(p);
    switch (panels[p].kind) {
      case Panel::Kind::Polar:
        render_polar(out, panels[p], top);
        break;
      case Panel::Kind::Stem:
        render_cartesian(out, panels[p], top, true);
        break;
      case Panel::Kind::XY:
      default:
        render_cartesian(out, panels[p], top, false);
        break;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fermisea::svg
