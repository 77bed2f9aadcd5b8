#include "tridist/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tridist/errors.hpp"

namespace tridist {

namespace {

struct Xy {
  double x;
  double y;
};

Xy cartesian(LatticePoint p) {
  return {static_cast<double>(p.a) + static_cast<double>(p.b) / 2.0,
          -static_cast<double>(p.b) * std::sqrt(3.0) / 2.0};
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

// Corners of {a0 <= a <= a1, b0 <= b <= b1, s0 <= a + b <= s1}, counter-clockwise.
std::vector<LatticePoint> enclosing_hexagon(const PointConfig& c) {
  Coord a0 = c.points().front().a, a1 = a0, b0 = c.points().front().b, b1 = b0, s0 = a0 + b0, s1 = s0;
  for (const auto& p : c) {
    a0 = std::min(a0, p.a);
    a1 = std::max(a1, p.a);
    b0 = std::min(b0, p.b);
    b1 = std::max(b1, p.b);
    s0 = std::min(s0, p.a + p.b);
    s1 = std::max(s1, p.a + p.b);
  }
  auto inside = [&](LatticePoint p) {
    return p.a >= a0 && p.a <= a1 && p.b >= b0 && p.b <= b1 && p.a + p.b >= s0 && p.a + p.b <= s1;
  };
  std::vector<LatticePoint> corners;
  for (Coord a : {a0, a1}) {
    for (Coord b : {b0, b1}) corners.push_back({a, b});
    for (Coord s : {s0, s1}) corners.push_back({a, s - a});
  }
  for (Coord b : {b0, b1})
    for (Coord s : {s0, s1}) corners.push_back({s - b, b});
  std::erase_if(corners, [&](LatticePoint p) { return !inside(p); });
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  Xy mid{0, 0};
  for (auto p : corners) {
    mid.x += cartesian(p).x / static_cast<double>(corners.size());
    mid.y += cartesian(p).y / static_cast<double>(corners.size());
  }
  std::sort(corners.begin(), corners.end(), [&](LatticePoint p, LatticePoint q) {
    const auto u = cartesian(p), v = cartesian(q);
    return std::atan2(u.y - mid.y, u.x - mid.x) < std::atan2(v.y - mid.y, v.x - mid.x);
  });
  return corners;
}

}  // namespace

std::string render_svg(const PointConfig& c, const RenderOptions& opts) {
  if (c.empty()) throw EmptyInputError("render_svg needs at least one point");
  if (!(opts.scale > 0) || !(opts.point_radius > 0))
    throw InvalidSpecError("render options need positive scale and point radius");

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& p : c) {
    const auto q = cartesian(p);
    if (first) {
      min_x = max_x = q.x;
      min_y = max_y = q.y;
      first = false;
    }
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }
  const double margin = 2.0 * opts.point_radius;
  const double width = (max_x - min_x) * opts.scale + 2 * margin;
  const double height = (max_y - min_y) * opts.scale + 2 * margin;
  auto px = [&](LatticePoint p) { return (cartesian(p).x - min_x) * opts.scale + margin; };
  auto py = [&](LatticePoint p) { return (cartesian(p).y - min_y) * opts.scale + margin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
  if (opts.show_removed_hull && c.size() > 1) {
    out << "<polygon fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\" points=\"";
    const auto hull = enclosing_hexagon(c);
    for (std::size_t i = 0; i < hull.size(); ++i) out << (i ? " " : "") << num(px(hull[i])) << ',' << num(py(hull[i]));
    out << "\"/>\n";
  }
  out << "<g fill=\"black\">\n";
  for (const auto& p : c) {
    out << "<circle cx=\"" << num(px(p)) << "\" cy=\"" << num(py(p)) << "\" r=\"" << num(opts.point_radius)
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw FormatError("unknown table format '" + name + "'");
}

std::string emit_table(const std::vector<TableRow>& rows, TableFormat format) {
  if (rows.empty()) throw EmptyInputError("emit_table needs at least one row");
  if (format == TableFormat::Csv) {
    std::ostringstream out;
    out << "m,clique_size,hexagon_size,best,star,clique_optimal\n";
    for (const auto& r : rows) {
      out << r.m << ',' << r.clique_size << ',' << r.hexagon_size << ',' << r.best << ',' << (r.star ? "*" : "")
          << ',' << (r.clique_optimal ? "true" : "false") << '\n';
    }
    return out.str();
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"m", r.m},
                   {"clique_size", r.clique_size},
                   {"hexagon_size", r.hexagon_size},
                   {"best", r.best},
                   {"star", r.star ? "*" : ""},
                   {"clique_optimal", r.clique_optimal}});
  }
  return doc.dump(2) + "\n";
}

std::string write_point_list(const PointConfig& c, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  }
  for (const auto& p : c) out << p.a << ' ' << p.b << '\n';
  return out.str();
}

PointConfig read_point_list(std::istream& in) {
  std::vector<LatticePoint> pts;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Coord a = 0, b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw FormatError("point list line " + std::to_string(lineno) + ": expected two integers");
    }
    std::string rest;
    if (!(fields >> b) || (fields >> rest))
      throw FormatError("point list line " + std::to_string(lineno) + ": expected two integers");
    if (std::abs(a) > kCoordLimit || std::abs(b) > kCoordLimit)
      throw FormatError("point list line " + std::to_string(lineno) + ": coordinate out of range");
    pts.push_back({a, b});
  }
  return PointConfig(std::move(pts));
}

PointConfig read_point_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open point list " + path.string());
  return read_point_list(in);
}

}  // namespace tridist
