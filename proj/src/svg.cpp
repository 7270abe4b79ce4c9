#include <algorithm>
#include <cmath>
#include <ostream>

#include "numfmt.hpp"
#include "wif/analysis.hpp"

namespace wif {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 60;

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0, hi = 1, step = 0.2;

  static Axis fit(double min, double max) {
    if (min == max) {
      const double pad = min == 0.0 ? 1.0 : std::abs(min) * 0.1;
      min -= pad;
      max += pad;
    }
    // 1-2-5 step giving roughly five intervals
    const double raw = (max - min) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    const double step = (norm < 1.5 ? 1 : norm < 3.5 ? 2 : norm < 7.5 ? 5 : 10) * mag;
    return {std::floor(min / step) * step, std::ceil(max / step) * step, step};
  }

  double map(double v, double from, double to) const {
    return from + (v - lo) / (hi - lo) * (to - from);
  }
};

} // namespace

void write_scatter_svg(std::ostream &out, std::span<const ScatterPoint> points,
                       std::string_view x_label, std::string_view y_label) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!points.empty()) {
    auto [xa, xb] = std::minmax_element(
        points.begin(), points.end(),
        [](const auto &a, const auto &b) { return a.x < b.x; });
    auto [ya, yb] = std::minmax_element(
        points.begin(), points.end(),
        [](const auto &a, const auto &b) { return a.y < b.y; });
    xmin = xa->x, xmax = xb->x, ymin = ya->y, ymax = yb->y;
  }
  const Axis ax = Axis::fit(xmin, xmax);
  const Axis ay = Axis::fit(ymin, ymax);
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  auto f = [](double v) { return numfmt::fixed(v, 2); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << f(x0) << "\" y1=\"" << f(y0) << "\" x2=\"" << f(x1)
      << "\" y2=\"" << f(y0) << "\"/>\n";
  out << "<line x1=\"" << f(x0) << "\" y1=\"" << f(y0) << "\" x2=\"" << f(x0)
      << "\" y2=\"" << f(y1) << "\"/>\n";
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const int xticks = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
  for (int k = 0; k <= xticks; ++k) {
    const double v = ax.lo + k * ax.step;
    const double px = ax.map(v, x0, x1);
    out << "<line x1=\"" << f(px) << "\" y1=\"" << f(y0) << "\" x2=\"" << f(px)
        << "\" y2=\"" << f(y0 + 5) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << f(px) << "\" y=\"" << f(y0 + 18)
        << "\" text-anchor=\"middle\">" << numfmt::significant(v, 4)
        << "</text>\n";
  }
  const int yticks = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
  for (int k = 0; k <= yticks; ++k) {
    const double v = ay.lo + k * ay.step;
    const double py = ay.map(v, y0, y1);
    out << "<line x1=\"" << f(x0 - 5) << "\" y1=\"" << f(py) << "\" x2=\""
        << f(x0) << "\" y2=\"" << f(py) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << f(x0 - 8) << "\" y=\"" << f(py + 4)
        << "\" text-anchor=\"end\">" << numfmt::significant(v, 4)
        << "</text>\n";
  }
  out << "<text x=\"" << f((x0 + x1) / 2) << "\" y=\"" << f(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(x_label)
      << "</text>\n";
  out << "<text x=\"18\" y=\"" << f((y0 + y1) / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << f((y0 + y1) / 2) << ")\">" << xml_escape(y_label) << "</text>\n";
  out << "</g>\n";

  out << "<g fill=\"steelblue\" stroke=\"navy\">\n";
  for (const auto &p : points)
    out << "<circle cx=\"" << f(ax.map(p.x, x0, x1)) << "\" cy=\""
        << f(ay.map(p.y, y0, y1)) << "\" r=\"4\"><title>"
        << xml_escape(p.journal) << "</title></circle>\n";
  out << "</g>\n</svg>\n";
}

} // namespace wif
