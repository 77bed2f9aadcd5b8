#pragma once

// Output formats: SVG drawings of configurations, CSV/JSON result tables, and
// the plain-text point-list format.

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "tridist/lattice.hpp"
#include "tridist/search.hpp"

namespace tridist {

struct RenderOptions {
  double scale = 40.0;         // pixels per unit length
  double point_radius = 8.0;
  bool show_removed_hull = false;  // outline the smallest enclosing lattice hexagon
};

/// SVG 1.1 document. Point (a, b) is drawn at (a + b/2, -b*sqrt(3)/2) * scale,
/// shifted onto the canvas. Byte-deterministic for identical inputs.
/// Throws EmptyInputError for an empty configuration, InvalidSpecError for
/// non-positive scale or radius.
std::string render_svg(const PointConfig& c, const RenderOptions& opts = {});

enum class TableFormat { Csv, Json };

TableFormat parse_table_format(const std::string& name);

/// Columns m, clique_size, hexagon_size, best, star, clique_optimal.
/// Throws EmptyInputError for no rows.
std::string emit_table(const std::vector<TableRow>& rows, TableFormat format);

/// One point per line as "a b"; '#' starts a comment.
std::string write_point_list(const PointConfig& c, const std::string& comment = {});
PointConfig read_point_list(std::istream& in);
PointConfig read_point_list_file(const std::filesystem::path& path);

}  // namespace tridist
