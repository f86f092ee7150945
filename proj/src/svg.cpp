#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "trimobius/error.hpp"
#include "trimobius/io.hpp"

namespace trimobius::io {
namespace {

// Plot geometry, in viewBox units (10 per output pixel).
constexpr std::int64_t kWidth = 8000, kHeight = 5000;
constexpr std::int64_t kLeft = 900, kRight = 200, kTop = 600, kBottom = 700;
constexpr std::int64_t kPlotW = kWidth - kLeft - kRight;
constexpr std::int64_t kPlotH = kHeight - kTop - kBottom;
constexpr int kTicks = 5;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string fmt_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string attr(const char* name, std::int64_t v) {
  return std::string(" ") + name + "=\"" + std::to_string(v) + "\"";
}

std::string line(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2,
                 const char* extra) {
  return "<line" + attr("x1", x1) + attr("y1", y1) + attr("x2", x2) + attr("y2", y2) + " " +
         extra + "/>\n";
}

std::string text(std::int64_t x, std::int64_t y, const char* anchor, int size,
                 const std::string& body) {
  return "<text" + attr("x", x) + attr("y", y) + " text-anchor=\"" + anchor +
         "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) + "\">" +
         escape(body) + "</text>\n";
}

std::int64_t parse_attr(const std::string& svg, std::size_t from, const std::string& name,
                        std::size_t limit) {
  const std::string key = " " + name + "=\"";
  const auto pos = svg.find(key, from);
  if (pos == std::string::npos || pos > limit) throw FormatError("SVG element lacks " + name);
  std::int64_t v = 0;
  const char* begin = svg.data() + pos + key.size();
  const auto [ptr, ec] = std::from_chars(begin, svg.data() + svg.size(), v);
  if (ec != std::errc()) throw FormatError("SVG attribute " + name + " is not an integer");
  return v;
}

}  // namespace

void render_svg_plot(std::ostream& out, const SeriesReport& series) {
  if (series.size() == 0) throw std::invalid_argument("cannot plot an empty series");
  const auto n = static_cast<std::int64_t>(series.size());
  auto [lo_it, hi_it] = std::minmax_element(series.ys.begin(), series.ys.end());
  double ymin = *lo_it, ymax = *hi_it;
  if (ymin == ymax) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  auto px = [&](std::int64_t x) {
    return n == 1 ? kLeft + kPlotW / 2 : kLeft + (x - 1) * kPlotW / (n - 1);
  };
  auto py = [&](double y) {
    return kTop + static_cast<std::int64_t>(std::llround((ymax - y) / (ymax - ymin) * kPlotH));
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  svg += "<rect" + attr("width", kWidth) + attr("height", kHeight) + " fill=\"white\"/>\n";
  svg += text(kWidth / 2, 380, "middle", 260, series.name);

  // Axes, ticks, and a dashed zero line when the range straddles 0.
  svg += line(kLeft, kTop + kPlotH, kLeft + kPlotW, kTop + kPlotH, "stroke=\"black\" stroke-width=\"10\"");
  svg += line(kLeft, kTop, kLeft, kTop + kPlotH, "stroke=\"black\" stroke-width=\"10\"");
  for (int t = 0; t < kTicks; ++t) {
    const std::int64_t xv = 1 + (n - 1) * t / (kTicks - 1);
    const std::int64_t x = px(xv);
    svg += line(x, kTop + kPlotH, x, kTop + kPlotH + 80, "stroke=\"black\" stroke-width=\"8\"");
    svg += text(x, kTop + kPlotH + 260, "middle", 180, std::to_string(xv));
    const double yv = ymin + (ymax - ymin) * t / (kTicks - 1);
    const std::int64_t y = py(yv);
    svg += line(kLeft - 80, y, kLeft, y, "stroke=\"black\" stroke-width=\"8\"");
    svg += text(kLeft - 120, y + 60, "end", 180, fmt_number(yv));
  }
  if (ymin < 0.0 && ymax > 0.0) {
    svg += line(kLeft, py(0.0), kLeft + kPlotW, py(0.0),
                "stroke=\"gray\" stroke-width=\"6\" stroke-dasharray=\"40,40\"");
  }
  svg += text(kLeft + kPlotW / 2, kHeight - 120, "middle", 200, "n");

  svg += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"14\" points=\"";
  std::int64_t last_x = -1, last_y = -1;
  bool first = true;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t x = px(k + 1), y = py(series.ys[static_cast<std::size_t>(k)]);
    if (x == last_x && y == last_y) continue;
    if (!first) svg += ' ';
    svg += std::to_string(x) + "," + std::to_string(y);
    first = false;
    last_x = x;
    last_y = y;
  }
  svg += "\"/>\n</svg>\n";
  out << svg;
}

std::vector<PlotPoint> parse_plot_points(const std::string& svg) {
  const auto poly = svg.find("<polyline");
  if (poly == std::string::npos) throw FormatError("SVG has no polyline");
  const std::string key = "points=\"";
  const auto start = svg.find(key, poly);
  if (start == std::string::npos) throw FormatError("polyline has no points");
  const auto end = svg.find('"', start + key.size());
  std::vector<PlotPoint> points;
  const char* p = svg.data() + start + key.size();
  const char* stop = svg.data() + end;
  while (p < stop) {
    PlotPoint pt{};
    auto r = std::from_chars(p, stop, pt.x);
    if (r.ec != std::errc() || r.ptr == stop || *r.ptr != ',') throw FormatError("bad polyline point");
    r = std::from_chars(r.ptr + 1, stop, pt.y);
    if (r.ec != std::errc()) throw FormatError("bad polyline point");
    points.push_back(pt);
    p = r.ptr;
    while (p < stop && *p == ' ') ++p;
  }
  return points;
}

Rgb heatmap_color(std::int64_t value, std::int64_t max_abs) {
  if (value == 0) return kZeroColor;
  // Light and dark ends of each half of a red-white-blue diverging scale.
  constexpr Rgb kBlueLight{209, 229, 240}, kBlueDark{5, 48, 97};
  constexpr Rgb kRedLight{253, 219, 199}, kRedDark{103, 0, 31};
  const Rgb& light = value > 0 ? kBlueLight : kRedLight;
  const Rgb& dark = value > 0 ? kBlueDark : kRedDark;
  const std::int64_t mag = value < 0 ? -value : value;
  const std::int64_t scale = std::max(max_abs, mag);
  auto mix = [&](int a, int b) { return static_cast<int>(a + (b - a) * mag / scale); };
  return {mix(light.r, dark.r), mix(light.g, dark.g), mix(light.b, dark.b)};
}

void render_svg_heatmap(std::ostream& out, const MobiusMatrix& matrix, const std::string& title) {
  const std::size_t n = matrix.dim();
  const std::int64_t cell = std::max<std::int64_t>(1, 800 / static_cast<std::int64_t>(n));
  const std::int64_t grid = cell * static_cast<std::int64_t>(n);
  constexpr std::int64_t kMargin = 20, kTitle = 50;
  const std::int64_t width = grid + 2 * kMargin, height = grid + kTitle + kMargin;

  std::int64_t max_abs = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::int64_t v : matrix.row(i)) max_abs = std::max(max_abs, v < 0 ? -v : v);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\"" + attr("width", width) + attr("height", height) +
         " viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<rect" + attr("width", width) + attr("height", height) + " fill=\"white\"/>\n";
  svg += text(width / 2, 32, "middle", 18, title);
  svg += "<g id=\"cells\"" + attr("data-n", static_cast<std::int64_t>(n)) + attr("data-cell", cell) +
         " transform=\"translate(" + std::to_string(kMargin) + "," + std::to_string(kTitle) +
         ")\" shape-rendering=\"crispEdges\">\n";
  const Rgb zero = kZeroColor;
  svg += "<rect" + attr("width", grid) + attr("height", grid) + " fill=\"rgb(" +
         std::to_string(zero.r) + "," + std::to_string(zero.g) + "," + std::to_string(zero.b) +
         ")\"/>\n";
  for (std::size_t i = 1; i <= n; ++i) {
    const auto row = matrix.row(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t v = row[j - 1];
      if (v == 0) continue;
      const Rgb c = heatmap_color(v, max_abs);
      svg += "<rect" + attr("x", static_cast<std::int64_t>(j - 1) * cell) +
             attr("y", static_cast<std::int64_t>(i - 1) * cell) + attr("width", cell) +
             attr("height", cell) + " fill=\"rgb(" + std::to_string(c.r) + "," +
             std::to_string(c.g) + "," + std::to_string(c.b) + ")\"/>\n";
    }
  }
  svg += "</g>\n</svg>\n";
  out << svg;
}

void render_svg_heatmap(std::ostream& out, const HeatmapSpec& spec) {
  if (spec.n == 0 || spec.n > kMaxMatrixDimension) {
    throw IndexOutOfRange("heatmap dimension " + std::to_string(spec.n) + " outside 1.." +
                          std::to_string(kMaxMatrixDimension));
  }
  const DivisibilityPoset poset(spec.kind, spec.n);
  const ZetaMatrix zeta = zeta_matrix(poset, spec.n);
  const std::string what = spec.source == HeatmapSource::Zeta ? "Zeta" : "Mobius";
  const std::string title = what + " matrix, " + std::string(to_string(spec.kind)) +
                            " poset, n = " + std::to_string(spec.n);
  if (spec.source == HeatmapSource::Mobius) {
    render_svg_heatmap(out, invert_zeta(zeta), title);
    return;
  }
  std::vector<std::int64_t> cells;
  cells.reserve(spec.n * spec.n);
  for (std::size_t i = 1; i <= spec.n; ++i)
    for (std::uint8_t c : zeta.row(i)) cells.push_back(c);
  render_svg_heatmap(out, MobiusMatrix(spec.n, std::move(cells)), title);
}

std::vector<HeatmapCell> parse_heatmap_cells(const std::string& svg) {
  const auto group = svg.find("<g id=\"cells\"");
  if (group == std::string::npos) throw FormatError("SVG has no heatmap cell group");
  const std::size_t group_end = svg.find('>', group);
  const std::int64_t cell = parse_attr(svg, group, "data-cell", group_end);
  std::vector<HeatmapCell> cells;
  // The first rect in the group is the zero-valued background.
  std::size_t pos = svg.find("<rect", group_end);
  if (pos == std::string::npos) return cells;
  pos = svg.find("<rect", pos + 1);
  while (pos != std::string::npos) {
    const std::size_t end = svg.find("/>", pos);
    HeatmapCell c{};
    c.col = static_cast<std::size_t>(parse_attr(svg, pos, "x", end) / cell) + 1;
    c.row = static_cast<std::size_t>(parse_attr(svg, pos, "y", end) / cell) + 1;
    const auto fill = svg.find("fill=\"rgb(", pos);
    if (fill == std::string::npos || fill > end) throw FormatError("heatmap cell lacks a fill");
    if (std::sscanf(svg.c_str() + fill, "fill=\"rgb(%d,%d,%d)", &c.color.r, &c.color.g,
                    &c.color.b) != 3) {
      throw FormatError("heatmap cell fill is malformed");
    }
    cells.push_back(c);
    pos = svg.find("<rect", end);
  }
  return cells;
}

}  // namespace trimobius::io
