#pragma once

#include "octodfm/field.hpp"
#include "octodfm/mesh.hpp"
#include "octodfm/octree.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace octodfm {

/// Maps index values onto the blue (easy) to red (hard) ramp.
struct ColorScale {
  enum class Mode { Auto, Fixed };
  Mode mode = Mode::Auto;
  double lo = 0.0;
  double hi = 1.0;

  static ColorScale automatic() { return {}; }
  /// Throws ConfigError unless lo < hi.
  static ColorScale fixed(double lo, double hi);
  /// "auto" or "LO:HI". Throws ConfigError.
  static ColorScale parse(std::string_view text);

  /// Auto mode spans the field's min and max.
  std::pair<double, double> range(std::span<const double> values) const;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// Position of v on the ramp, in [0, 1]. A degenerate range maps to 0.
double ramp_position(double v, double lo, double hi);

/// Piecewise-linear ramp blue, cyan, green, yellow, red.
Rgb ramp_color(double t);

/// Short name for file and array names: "C(f)-" -> "cf".
std::string index_stem(std::string_view id);

/// Throws FieldMismatch unless the field lists exactly the grey leaves.
void check_field(const Octree& octree, const LocalIndexField& field);

/// ASCII PLY of the mesh with every vertex colored by the leaf containing
/// it. Black leaves are drawn at the low end; vertices outside any grey
/// leaf take the nearest grey leaf. Throws FieldMismatch.
std::string render_ply(const TriMesh& mesh, const Octree& octree, const LocalIndexField& field,
                       const ColorScale& scale);

/// Legacy VTK unstructured grid, one hexahedron per black or grey leaf with
/// the index value as cell scalar (0 on black leaves). Throws FieldMismatch.
std::string render_vtk(const Octree& octree, const LocalIndexField& field);

enum class MapFormat { Ply, Vtk };

/// Throws FieldMismatch, IoError.
void export_difficulty_map(const TriMesh& mesh, const Octree& octree, const LocalIndexField& field,
                           const ColorScale& scale, const std::filesystem::path& path, MapFormat format);

}  // namespace octodfm
