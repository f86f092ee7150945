#pragma once

// Serialization: OEIS b-files, CSV matrices, DOT Hasse diagrams, SVG plots
// and heatmaps.  Writers take a std::ostream; write_file wraps any of them
// with path handling.  All output is byte-deterministic.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trimobius/analysis.hpp"
#include "trimobius/mobius.hpp"
#include "trimobius/poset.hpp"

namespace trimobius::io {

// Runs `writer` against a file at `path`; throws IoError if it cannot be
// opened or written.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer);

// ---- b-files -------------------------------------------------------------

struct BFile {
  std::int64_t offset = 1;
  std::vector<std::int64_t> values;  // a(offset), a(offset + 1), ...
};

// Lines "n value\n" starting at `offset`; throws std::invalid_argument on an
// empty series.
void write_bfile(std::ostream& out, std::span<const std::int64_t> values, std::int64_t offset = 1);

// Skips blank lines and '#' comments.  Throws FormatError (with the line
// number) on malformed or non-contiguous lines.
BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::string& path);

// ---- csv -----------------------------------------------------------------

void write_matrix_csv(std::ostream& out, const ZetaMatrix& zeta);
void write_matrix_csv(std::ostream& out, const MobiusMatrix& mobius);
// "n,value" rows (values rounded to 17 significant digits for Rational series).
void write_series_csv(std::ostream& out, const SeriesReport& series);

// ---- dot -----------------------------------------------------------------

// digraph with rankdir=BT: every node declared, then "lower -> upper;" lines.
void write_dot(std::ostream& out, const HasseGraph& graph);
// Parses the subset of DOT that write_dot emits.
HasseGraph parse_dot(std::istream& in);

// ---- svg -----------------------------------------------------------------

struct PlotPoint {
  std::int64_t x;
  std::int64_t y;
};

// Standalone line chart of series.ys against n = 1..N with axes and the
// series name as title.  Coordinates are integers in a fixed viewBox.
void render_svg_plot(std::ostream& out, const SeriesReport& series);
// Polyline points of an SVG written by render_svg_plot (SVG y grows down).
std::vector<PlotPoint> parse_plot_points(const std::string& svg);

enum class HeatmapSource { Zeta, Mobius };

struct HeatmapSpec {
  HeatmapSource source = HeatmapSource::Mobius;
  SequenceKind kind = SequenceKind::Triangular;
  std::size_t n = 100;
};

struct Rgb {
  int r, g, b;
  bool operator==(const Rgb&) const = default;
};

inline constexpr Rgb kZeroColor{211, 211, 211};

// Diverging palette with midpoint 0: blue shades for positive values, red
// shades for negative ones, light gray for zero.  max_abs >= |value|.
Rgb heatmap_color(std::int64_t value, std::int64_t max_abs);

// n x n grid, row i top to bottom and column j left to right showing
// matrix entry (i, j).  Throws IndexOutOfRange when n > kMaxMatrixDimension.
void render_svg_heatmap(std::ostream& out, const HeatmapSpec& spec);
void render_svg_heatmap(std::ostream& out, const MobiusMatrix& matrix, const std::string& title);

struct HeatmapCell {
  std::size_t row;
  std::size_t col;
  Rgb color;
};
// Explicit cells of an SVG heatmap; absent cells show the zero background.
std::vector<HeatmapCell> parse_heatmap_cells(const std::string& svg);

// ---- oeis ----------------------------------------------------------------

struct OeisDiffReport {
  std::int64_t overlap_first = 0;
  std::int64_t overlap_last = 0;  // inclusive
  std::optional<std::int64_t> first_mismatch;
  std::int64_t local_value = 0;     // at first_mismatch
  std::int64_t computed_value = 0;  // at first_mismatch
  bool matches() const noexcept { return !first_mismatch; }
};

// Compares a local b-file with a computed series that starts at index 1.
// Throws FormatError when the two share no index.
OeisDiffReport oeis_diff(const BFile& local, std::span<const std::int64_t> computed);

}  // namespace trimobius::io
