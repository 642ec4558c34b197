#pragma once

// Closed, outward-oriented test meshes built from simple parametric shapes.

#include "octodfm/mesh.hpp"

#include <filesystem>
#include <functional>
#include <vector>

namespace octodfm::fixtures {

/// Union of the cells of a rectilinear grid for which `filled(i, j, k)` holds.
/// Emits every face between a filled and an empty cell; shapes whose cells
/// meet only along an edge are not manifold and must be avoided.
TriMesh grid_solid(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& zs,
                   const std::function<bool(int, int, int)>& filled);

TriMesh box(const Vec3& lo, const Vec3& hi);

/// L-shaped bar: a w*w square profile with one w/2 * w/2 quadrant removed,
/// extruded along z by `length`. Fills 3/4 of its bbox.
TriMesh l_bracket(double w, double length);

/// Block [0, size.x] x [0, size.y] x [z0, z0 + size.z] with a rectangular
/// pocket [px0, px1] x [py0, py1] open at the top, floor at `floor_z`.
struct PocketSpec {
  Vec3 size{64, 64, 48};
  double z0 = 2;
  double px0 = 25, px1 = 39, py0 = 25, py1 = 39;
  double floor_z = 9;
};
TriMesh pocket_block(const PocketSpec& spec);

/// Block with a horizontal slot cut through it along x, leaving a roof that
/// faces down: unreachable from +z.
TriMesh undercut_block();

TriMesh icosphere(double radius, int subdivisions);

TriMesh torus(double major, double minor, int nu, int nv);

/// Slab with rounded-corner rectangular pockets, separated along x.
struct RoundPocket {
  double x0, x1, y0, y1;
  double depth;
  double corner_radius;
};
struct SlabSpec {
  Vec3 lo{0, 0, 0};
  Vec3 hi{120, 80, 30};
  std::vector<RoundPocket> pockets;
  int arc_segments = 6;
};
TriMesh pocketed_slab(const SlabSpec& spec);

/// The three-pocket die-like slab used by the qualitative scenario.
SlabSpec die_spec();

void write_binary_stl(const TriMesh& mesh, const std::filesystem::path& path);

}  // namespace octodfm::fixtures
