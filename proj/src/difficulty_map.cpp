#include "octodfm/difficulty_map.hpp"

#include "octodfm/errors.hpp"
#include "octodfm/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>

namespace octodfm {

ColorScale ColorScale::fixed(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw Error(ErrorCode::ConfigError, "color scale needs LO < HI");
  }
  return {Mode::Fixed, lo, hi};
}

ColorScale ColorScale::parse(std::string_view text) {
  if (text == "auto") return automatic();
  const auto colon = text.find(':');
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw Error(ErrorCode::ConfigError, "bad color scale '" + std::string(text) + "' (auto|LO:HI)");
    }
    return v;
  };
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ConfigError, "bad color scale '" + std::string(text) + "' (auto|LO:HI)");
  }
  return fixed(number(text.substr(0, colon)), number(text.substr(colon + 1)));
}

std::pair<double, double> ColorScale::range(std::span<const double> values) const {
  if (mode == Mode::Fixed) return {lo, hi};
  if (values.empty()) return {0.0, 0.0};
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  return {*mn, *mx};
}

double ramp_position(double v, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
}

Rgb ramp_color(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops = {{
      {0, 0, 255},    // blue
      {0, 255, 255},  // cyan
      {0, 255, 0},    // green
      {255, 255, 0},  // yellow
      {255, 0, 0},    // red
  }};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int k = std::min(3, static_cast<int>(t));
  const double f = t - k;
  auto channel = [&](int c) {
    return static_cast<std::uint8_t>(std::lround(stops[k][c] + f * (stops[k + 1][c] - stops[k][c])));
  };
  return {channel(0), channel(1), channel(2)};
}

std::string index_stem(std::string_view id) {
  std::string stem;
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c))) stem += static_cast<char>(std::tolower(c));
  }
  return stem;
}

void check_field(const Octree& octree, const LocalIndexField& field) {
  if (field.values.size() != field.leaves.size() || field.leaves != octree.grey_leaves()) {
    throw Error(ErrorCode::FieldMismatch, "field '" + field.id + "' is not aligned to the octree's grey leaves");
  }
}

namespace {

double box_distance(const Box& box, const Vec3& p) {
  const Vec3 d = (box.lo - p).cwiseMax(p - box.hi).cwiseMax(0.0);
  return d.norm();
}

}  // namespace

std::string render_ply(const TriMesh& mesh, const Octree& octree, const LocalIndexField& field,
                       const ColorScale& scale) {
  check_field(octree, field);
  const auto [lo, hi] = scale.range(field.values);

  std::vector<double> value_at(octree.leaves().size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < field.leaves.size(); ++i) value_at[field.leaves[i]] = field.values[i];

  auto nearest_grey = [&](const Vec3& p) -> std::optional<double> {
    double best = std::numeric_limits<double>::infinity();
    std::optional<double> value;
    for (std::size_t i = 0; i < field.leaves.size(); ++i) {
      const double d = box_distance(octree.leaf(field.leaves[i]).box, p);
      if (d < best) {
        best = d;
        value = field.values[i];
      }
    }
    return value;
  };

  std::string out;
  out += "ply\nformat ascii 1.0\n";
  out += "comment octodfm difficulty map " + field.id + "\n";
  out += "comment scale " + format_number(lo) + " " + format_number(hi) + "\n";
  out += "element vertex " + std::to_string(mesh.vertex_count()) + "\n";
  out += "property double x\nproperty double y\nproperty double z\n";
  out += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out += "element face " + std::to_string(mesh.triangle_count()) + "\n";
  out += "property list uchar int vertex_indices\nend_header\n";

  for (const Vec3& v : mesh.vertices()) {
    const std::size_t pos = octree.locate(v);
    double t = 0.0;
    if (pos != Octree::npos && !std::isnan(value_at[pos])) {
      t = ramp_position(value_at[pos], lo, hi);
    } else if (auto value = nearest_grey(v)) {
      t = ramp_position(*value, lo, hi);
    }
    const Rgb c = ramp_color(t);
    out += format_number(v.x()) + ' ' + format_number(v.y()) + ' ' + format_number(v.z()) + ' ' +
           std::to_string(c.r) + ' ' + std::to_string(c.g) + ' ' + std::to_string(c.b) + '\n';
  }
  for (const auto& t : mesh.triangles()) {
    out += "3 " + std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
  }
  return out;
}

std::string render_vtk(const Octree& octree, const LocalIndexField& field) {
  check_field(octree, field);
  std::vector<double> value_at(octree.leaves().size(), 0.0);
  for (std::size_t i = 0; i < field.leaves.size(); ++i) value_at[field.leaves[i]] = field.values[i];

  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < octree.leaves().size(); ++i) {
    if (octree.leaf(i).cls != OctantClass::White) cells.push_back(i);
  }
  const std::string name = index_stem(field.id);

  std::string out;
  out += "# vtk DataFile Version 3.0\n";
  out += "octodfm difficulty map " + field.id + "\n";
  out += "ASCII\nDATASET UNSTRUCTURED_GRID\n";
  out += "POINTS " + std::to_string(8 * cells.size()) + " double\n";
  for (std::size_t i : cells) {
    const Box& b = octree.leaf(i).box;
    // VTK_HEXAHEDRON order: bottom face counter-clockwise, then top face.
    const std::array<Vec3, 8> corners = {
        Vec3(b.lo.x(), b.lo.y(), b.lo.z()), Vec3(b.hi.x(), b.lo.y(), b.lo.z()),
        Vec3(b.hi.x(), b.hi.y(), b.lo.z()), Vec3(b.lo.x(), b.hi.y(), b.lo.z()),
        Vec3(b.lo.x(), b.lo.y(), b.hi.z()), Vec3(b.hi.x(), b.lo.y(), b.hi.z()),
        Vec3(b.hi.x(), b.hi.y(), b.hi.z()), Vec3(b.lo.x(), b.hi.y(), b.hi.z())};
    for (const Vec3& p : corners) {
      out += format_number(p.x()) + ' ' + format_number(p.y()) + ' ' + format_number(p.z()) + '\n';
    }
  }
  out += "CELLS " + std::to_string(cells.size()) + ' ' + std::to_string(9 * cells.size()) + '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out += "8";
    for (std::size_t k = 0; k < 8; ++k) out += ' ' + std::to_string(8 * c + k);
    out += '\n';
  }
  out += "CELL_TYPES " + std::to_string(cells.size()) + '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) out += "12\n";
  out += "CELL_DATA " + std::to_string(cells.size()) + '\n';
  out += "SCALARS " + name + " double 1\nLOOKUP_TABLE default\n";
  for (std::size_t i : cells) out += format_number(value_at[i]) + '\n';
  return out;
}

void export_difficulty_map(const TriMesh& mesh, const Octree& octree, const LocalIndexField& field,
                           const ColorScale& scale, const std::filesystem::path& path, MapFormat format) {
  std::string contents =
      format == MapFormat::Ply ? render_ply(mesh, octree, field, scale) : render_vtk(octree, field);
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  write_files_atomic(dir, {{path.filename().string(), std::move(contents)}});
}

}  // namespace octodfm
