#include "octodfm/octree.hpp"

#include "octodfm/errors.hpp"
#include "octodfm/parallel.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdio>
#include <ostream>
#include <random>

namespace octodfm {

namespace {

constexpr int kMinDepth = 1;
constexpr int kMaxDepth = 10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t box_seed(const Box& box, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed);
  for (int a = 0; a < 3; ++a) {
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(box.lo[a]));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(box.hi[a]));
  }
  return h;
}

void check_depth(int depth) {
  if (depth < kMinDepth || depth > kMaxDepth) {
    throw Error(ErrorCode::DepthOutOfRange,
                "max_depth " + std::to_string(depth) + " outside [1, 10]");
  }
}

/// Fraction of jittered grid points inside the part, times the box volume.
double sample_part_volume(const TriMesh& mesh, const Box& box, int n, std::uint64_t seed) {
  std::mt19937_64 rng(box_seed(box, seed));
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const Vec3 step = box.extent() / n;
  double inside = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double u = jitter(rng), v = jitter(rng), w = jitter(rng);
        const Vec3 p(box.lo.x() + (i + u) * step.x(), box.lo.y() + (j + v) * step.y(),
                     box.lo.z() + (k + w) * step.z());
        switch (point_in_mesh(mesh, p)) {
          case Location::Inside: inside += 1.0; break;
          case Location::OnBoundary: inside += 0.5; break;
          case Location::Outside: break;
        }
      }
    }
  }
  return inside / (static_cast<double>(n) * n * n) * box.volume();
}

}  // namespace

std::string_view to_string(OctantClass c) {
  switch (c) {
    case OctantClass::White: return "white";
    case OctantClass::Black: return "black";
    case OctantClass::Grey: return "grey";
  }
  return "unknown";
}

OctantClass classify_box(const TriMesh& mesh, const Box& box) {
  require_watertight(mesh, "classify_box");
  const auto& bvh = mesh.bvh();
  const bool crossed = bvh.visit_overlapping(box, [&](std::uint32_t t) {
    return triangle_box_intersect(bvh.triangles()[t], box, BoxClosure::Open);
  });
  if (crossed) return OctantClass::Grey;
  switch (point_in_mesh(mesh, box.center())) {
    case Location::Inside: return OctantClass::Black;
    case Location::Outside: return OctantClass::White;
    case Location::OnBoundary: break;
  }
  // Center within the boundary shell but no triangle inside: let sampling decide.
  return OctantClass::Grey;
}

Box octree_root_box(const MeshMetrics& metrics, double margin) {
  const Vec3 center = 0.5 * (metrics.bbox_min + metrics.bbox_max);
  double edge = metrics.max_dimension * (1.0 + 2.0 * margin);
  if (!(edge > 0.0)) edge = 1.0;
  const Vec3 half = Vec3::Constant(0.5 * edge);
  return {center - half, center + half};
}

double estimate_part_volume(const TriMesh& mesh, const Box& box, int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::ConfigError, "sampling resolution must be >= 2");
  switch (classify_box(mesh, box)) {
    case OctantClass::Black: return box.volume();
    case OctantClass::White: return 0.0;
    case OctantClass::Grey: break;
  }
  return sample_part_volume(mesh, box, n, seed);
}

struct OctreeBuilder {
  /// Subdivides the given grey nodes level by level down to max_depth.
  static void grow(Octree& tree, const TriMesh& mesh, std::vector<std::size_t> frontier, unsigned workers) {
    auto& nodes = tree.nodes_;
    while (!frontier.empty()) {
      std::vector<std::size_t> children;
      children.reserve(8 * frontier.size());
      for (std::size_t f : frontier) {
        const std::size_t first = nodes.size();
        nodes[f].first_child = static_cast<std::int64_t>(first);
        const Box parent = nodes[f].box;
        const int depth = nodes[f].depth + 1;
        for (unsigned k = 0; k < 8; ++k) {
          OctantNode child;
          child.box = parent.octant(k);
          child.depth = depth;
          nodes.push_back(child);
          children.push_back(first + k);
        }
      }
      parallel_for(children.size(), workers,
                   [&](std::size_t i) { nodes[children[i]].cls = classify_box(mesh, nodes[children[i]].box); });
      frontier.clear();
      for (std::size_t c : children) {
        if (nodes[c].cls == OctantClass::Grey && nodes[c].depth < tree.options_.max_depth) frontier.push_back(c);
      }
    }
  }

  /// Rebuilds the Morton leaf list and leaf volumes.
  static void finalize(Octree& tree, const TriMesh& mesh, unsigned workers) {
    auto& nodes = tree.nodes_;
    tree.leaves_.clear();
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t n = stack.back();
      stack.pop_back();
      if (nodes[n].is_leaf()) {
        tree.leaves_.push_back(n);
      } else {
        for (int k = 7; k >= 0; --k) stack.push_back(static_cast<std::size_t>(nodes[n].first_child) + k);
      }
    }
    tree.leaf_position_.assign(nodes.size(), Octree::npos);
    for (std::size_t i = 0; i < tree.leaves_.size(); ++i) tree.leaf_position_[tree.leaves_[i]] = i;

    const int n = tree.options_.samples;
    const std::uint64_t seed = tree.options_.seed;
    parallel_for(tree.leaves_.size(), workers, [&](std::size_t i) {
      OctantNode& leaf = nodes[tree.leaves_[i]];
      switch (leaf.cls) {
        case OctantClass::Black: leaf.part_volume = leaf.box.volume(); break;
        case OctantClass::White: leaf.part_volume = 0.0; break;
        case OctantClass::Grey: leaf.part_volume = sample_part_volume(mesh, leaf.box, n, seed); break;
      }
    });
  }
};

Octree build_octree(const TriMesh& mesh, const OctreeOptions& options) {
  require_watertight(mesh, "build_octree");
  check_depth(options.max_depth);
  if (options.samples < 2) throw Error(ErrorCode::ConfigError, "sampling resolution must be >= 2");
  if (!(options.margin >= 0.0)) throw Error(ErrorCode::ConfigError, "octree margin must be >= 0");

  Octree tree;
  tree.options_ = options;
  tree.part_bounds_ = mesh.metrics().bounds();
  tree.mesh_fingerprint_ = mesh.fingerprint();

  OctantNode root;
  root.box = octree_root_box(mesh.metrics(), options.margin);
  root.cls = classify_box(mesh, root.box);
  tree.nodes_.push_back(root);

  std::vector<std::size_t> frontier;
  if (root.cls == OctantClass::Grey) frontier.push_back(0);
  OctreeBuilder::grow(tree, mesh, std::move(frontier), options.workers);
  OctreeBuilder::finalize(tree, mesh, options.workers);
  return tree;
}

Octree refine(const Octree& octree, const TriMesh& mesh, unsigned workers) {
  if (mesh.fingerprint() != octree.mesh_fingerprint()) {
    throw Error(ErrorCode::MeshMismatch, "octree was built from a different mesh");
  }
  check_depth(octree.max_depth() + 1);

  Octree tree = octree;
  tree.options_.max_depth += 1;
  std::vector<std::size_t> frontier;
  for (std::size_t n : tree.leaves_) {
    if (tree.nodes_[n].cls == OctantClass::Grey) frontier.push_back(n);
  }
  OctreeBuilder::grow(tree, mesh, std::move(frontier), workers);
  OctreeBuilder::finalize(tree, mesh, workers);
  return tree;
}

std::vector<std::size_t> Octree::grey_leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (nodes_[leaves_[i]].cls == OctantClass::Grey) out.push_back(i);
  }
  return out;
}

double Octree::total_part_volume() const {
  double sum = 0.0;
  for (std::size_t n : leaves_) sum += nodes_[n].part_volume;
  return sum;
}

OctreeFingerprint Octree::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* bytes, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(bytes);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  for (std::size_t n : leaves_) {
    const OctantNode& leaf = nodes_[n];
    const std::int32_t depth = leaf.depth;
    const auto cls = static_cast<std::uint8_t>(leaf.cls);
    mix(&depth, sizeof(depth));
    mix(leaf.box.lo.data(), 3 * sizeof(double));
    mix(leaf.box.hi.data(), 3 * sizeof(double));
    mix(&cls, sizeof(cls));
    mix(&leaf.part_volume, sizeof(double));
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return {options_.max_depth, leaves_.size(), hex};
}

std::size_t Octree::locate(const Vec3& p) const {
  if (nodes_.empty() || !root_box().contains(p)) return npos;
  std::size_t n = 0;
  while (!nodes_[n].is_leaf()) {
    const Vec3 mid = nodes_[n].box.center();
    unsigned k = 0;
    for (int a = 0; a < 3; ++a) {
      if (p[a] >= mid[a]) k |= 1U << a;
    }
    n = static_cast<std::size_t>(nodes_[n].first_child) + k;
  }
  return leaf_position_[n];
}

void Octree::dump_jsonl(std::ostream& out) const {
  for (std::size_t n : leaves_) {
    const OctantNode& leaf = nodes_[n];
    nlohmann::json j;
    j["depth"] = leaf.depth;
    j["min"] = {leaf.box.lo.x(), leaf.box.lo.y(), leaf.box.lo.z()};
    j["max"] = {leaf.box.hi.x(), leaf.box.hi.y(), leaf.box.hi.z()};
    j["class"] = std::string(to_string(leaf.cls));
    j["part_volume"] = leaf.part_volume;
    out << j.dump() << '\n';
  }
}

}  // namespace octodfm
