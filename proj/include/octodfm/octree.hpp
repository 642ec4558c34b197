#pragma once

#include "octodfm/geometry.hpp"
#include "octodfm/mesh.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace octodfm {

enum class OctantClass : std::uint8_t { White, Black, Grey };

std::string_view to_string(OctantClass c);

struct OctantNode {
  Box box;
  int depth = 0;
  OctantClass cls = OctantClass::White;
  /// Index of the first of 8 consecutive children, or -1 for a leaf.
  std::int64_t first_child = -1;
  /// Part volume inside the box (mm^3); meaningful on leaves.
  double part_volume = 0.0;

  bool is_leaf() const { return first_child < 0; }
  Vec3 centroid() const { return box.center(); }
};

struct OctreeOptions {
  int max_depth = 5;
  /// Root inflation relative to the largest bbox extent.
  double margin = 0.01;
  /// Jittered-grid resolution per axis for grey-leaf volume estimates.
  int samples = 4;
  /// 0 = available hardware parallelism. Never affects results.
  unsigned workers = 0;
  std::uint64_t seed = 0x6f637464666dULL;
};

struct OctreeFingerprint {
  int max_depth = 0;
  std::size_t leaf_count = 0;
  std::string hash;  // 16 hex digits over leaf depth, bounds, class and volume

  bool operator==(const OctreeFingerprint&) const = default;
};

/// Adaptive octree over a mesh. Only grey nodes are subdivided; leaves are
/// enumerated depth-first with children in octant order, i.e. Morton order.
class Octree {
 public:
  const std::vector<OctantNode>& nodes() const { return nodes_; }
  /// Node indices of all leaves, Morton order.
  const std::vector<std::size_t>& leaves() const { return leaves_; }
  const OctantNode& leaf(std::size_t i) const { return nodes_[leaves_[i]]; }
  /// Positions (into leaves()) of grey leaves, Morton order.
  std::vector<std::size_t> grey_leaves() const;

  const Box& root_box() const { return nodes_.front().box; }
  const Box& part_bounds() const { return part_bounds_; }
  int max_depth() const { return options_.max_depth; }
  const OctreeOptions& options() const { return options_; }
  std::uint64_t mesh_fingerprint() const { return mesh_fingerprint_; }

  double total_part_volume() const;
  OctreeFingerprint fingerprint() const;

  /// Position in leaves() of the leaf containing p (ties go to the upper
  /// child), or npos when p is outside the root.
  std::size_t locate(const Vec3& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// One JSON object per leaf: depth, min, max, class, part_volume.
  void dump_jsonl(std::ostream& out) const;

 private:
  friend Octree build_octree(const TriMesh&, const OctreeOptions&);
  friend Octree refine(const Octree&, const TriMesh&, unsigned);
  friend struct OctreeBuilder;

  std::vector<OctantNode> nodes_;
  std::vector<std::size_t> leaves_;
  std::vector<std::size_t> leaf_position_;  // node index -> position in leaves_
  Box part_bounds_;
  OctreeOptions options_;
  std::uint64_t mesh_fingerprint_ = 0;
};

/// Grey iff a triangle reaches the box interior; otherwise Black/White by the
/// box center. Boxes that only touch the surface are classified by center.
OctantClass classify_box(const TriMesh& mesh, const Box& box);

/// Cubified root around the mesh bbox, inflated by `margin`.
Box octree_root_box(const MeshMetrics& metrics, double margin);

/// Throws NotWatertight, DepthOutOfRange (max_depth outside [1, 10]).
Octree build_octree(const TriMesh& mesh, const OctreeOptions& options = {});

/// Part volume inside `box`: exact for Black/White boxes, otherwise an
/// n^3 jittered-grid estimate seeded from `seed` and the box bounds.
double estimate_part_volume(const TriMesh& mesh, const Box& box, int n,
                            std::uint64_t seed = OctreeOptions{}.seed);

/// Subdivides every terminal grey leaf once; same leaves as building at
/// max_depth + 1. Throws MeshMismatch, DepthOutOfRange.
Octree refine(const Octree& octree, const TriMesh& mesh, unsigned workers = 0);

}  // namespace octodfm
