#pragma once

// Static SVG rendering of result tables. Nothing else in the library depends
// on this file.

#include "sqzcav/result_table.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sqzcav {

enum class PlotKind { Lines, Heatmap };

struct PlotSpec {
  PlotKind kind = PlotKind::Lines;
  std::string title;
  std::string x;                ///< column on the horizontal axis
  std::vector<std::string> y;   ///< Lines: one curve per column; Heatmap: vertical-axis column
  std::string z;                ///< Heatmap colour column
  /// Lines only: split rows into one curve per distinct value of this column.
  std::string group;
};

/// SVG document for the table. Throws InvalidArgument on an empty table or
/// an unknown column.
std::string render_svg(const ResultTable& table, const PlotSpec& spec);
void emit_plot(const ResultTable& table, const PlotSpec& spec, const std::filesystem::path& path);

}  // namespace sqzcav
