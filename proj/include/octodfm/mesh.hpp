#pragma once

#include "octodfm/bvh.hpp"
#include "octodfm/geometry.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string_view>
#include <vector>

namespace octodfm {

enum class MeshFormat { Auto, StlBinary, StlAscii, Off };

struct MeshOptions {
  /// Vertices closer than this (mm) are merged.
  double weld_tolerance = 1e-4;
  /// Boundary shell half-width, relative to the largest bbox extent.
  double boundary_epsilon_rel = 1e-6;
};

struct MeshMetrics {
  Vec3 bbox_min = Vec3::Zero();
  Vec3 bbox_max = Vec3::Zero();
  double max_dimension = 0.0;  // mm
  double surface_area = 0.0;   // mm^2
  double volume = 0.0;         // mm^3, signed; positive for outward orientation
  bool watertight = false;

  Box bounds() const { return {bbox_min, bbox_max}; }
  Vec3 extent() const { return bbox_max - bbox_min; }
};

using TriangleIndices = std::array<std::uint32_t, 3>;

/// Indexed triangle mesh. Immutable once constructed; copies share storage
/// and the compute-once metric and BVH caches.
class TriMesh {
 public:
  /// Welds vertices, drops degenerate triangles and unreferenced vertices.
  /// Throws EmptyMesh if nothing survives.
  TriMesh(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles,
          const MeshOptions& options = {});

  const std::vector<Vec3>& vertices() const { return data_->vertices; }
  const std::vector<TriangleIndices>& triangles() const { return data_->triangles; }
  std::size_t vertex_count() const { return data_->vertices.size(); }
  std::size_t triangle_count() const { return data_->triangles.size(); }
  Triangle triangle(std::size_t i) const;
  const MeshOptions& options() const { return data_->options; }

  const MeshMetrics& metrics() const;
  const TriangleBvh& bvh() const;

  /// Points closer than this to the surface are OnBoundary.
  double boundary_epsilon() const;

  /// Content hash of vertices and triangles.
  std::uint64_t fingerprint() const { return data_->fingerprint; }

  /// Applies p -> linear * p + offset. Orientation is preserved only for
  /// proper rotations.
  TriMesh transformed(const Eigen::Matrix3d& linear, const Vec3& offset) const;

 private:
  struct Data {
    std::vector<Vec3> vertices;
    std::vector<TriangleIndices> triangles;
    MeshOptions options;
    std::uint64_t fingerprint = 0;
  };
  struct Cache;

  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
};

TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format = MeshFormat::Auto,
                  const MeshOptions& options = {});

/// Parses in-memory file contents. `format` Auto sniffs binary vs ASCII STL;
/// OFF must be requested explicitly (load_mesh infers it from the extension).
TriMesh parse_mesh(std::string_view bytes, MeshFormat format = MeshFormat::Auto,
                   const MeshOptions& options = {});

MeshMetrics compute_metrics(const TriMesh& mesh);

enum class Location { Inside, Outside, OnBoundary };

/// Parity ray cast; rays that graze an edge or vertex are retried along the
/// next direction of a fixed seeded sequence. Throws NotWatertight.
Location point_in_mesh(const TriMesh& mesh, const Vec3& p);

/// True if some point of the surface lies within `distance` of p.
bool near_surface(const TriMesh& mesh, const Vec3& p, double distance);

/// True if the ray origin + t*dir, t >= 0, touches any triangle. Edge and
/// vertex contacts count as hits; a ray lying in a triangle's plane does not.
bool ray_hits_any(const TriMesh& mesh, const Vec3& origin, const Vec3& dir);

double point_triangle_distance(const Vec3& p, const Triangle& tri);

enum class BoxClosure {
  Closed,  // touching the box boundary counts as intersecting
  Open,    // only contact with the box interior counts
};

/// Separating-axis test over the 13 candidate axes.
bool triangle_box_intersect(const Triangle& tri, const Box& box,
                            BoxClosure closure = BoxClosure::Closed);

/// Throws NotWatertight unless the mesh is closed and consistently oriented.
void require_watertight(const TriMesh& mesh, std::string_view what);

}  // namespace octodfm
