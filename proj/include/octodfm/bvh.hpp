#pragma once

#include "octodfm/geometry.hpp"

#include <cstdint>
#include <vector>

namespace octodfm {

/// Binary bounding-volume hierarchy over a fixed triangle soup.
///
/// Nodes are stored depth-first: an internal node's left child follows it
/// directly and `right` indexes the right child. Leaves cover
/// order_[first, first + count). Visitors return true to stop traversal.
class TriangleBvh {
 public:
  TriangleBvh() = default;
  explicit TriangleBvh(std::vector<Triangle> triangles);

  const std::vector<Triangle>& triangles() const { return triangles_; }

  /// Calls visit(index) for every triangle whose bounds overlap `box`.
  template <class Visit>
  bool visit_overlapping(const Box& box, Visit&& visit) const {
    if (nodes_.empty()) return false;
    std::uint32_t stack[kStackSize];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const std::uint32_t index = stack[--top];
      const Node& node = nodes_[index];
      if (!node.box.overlaps(box)) continue;
      if (node.count > 0) {
        for (std::uint32_t i = node.first; i < node.first + node.count; ++i) {
          const std::uint32_t t = order_[i];
          if (tri_bounds_[t].overlaps(box) && visit(t)) return true;
        }
      } else {
        stack[top++] = node.right;
        stack[top++] = index + 1;
      }
    }
    return false;
  }

  /// Calls visit(index) for every triangle whose bounds the ray (t >= 0) touches.
  template <class Visit>
  bool visit_ray(const Vec3& origin, const Vec3& dir, Visit&& visit) const {
    if (nodes_.empty()) return false;
    const Vec3 inv = dir.cwiseInverse();
    std::uint32_t stack[kStackSize];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const std::uint32_t index = stack[--top];
      const Node& node = nodes_[index];
      if (!ray_hits_box(origin, inv, node.box)) continue;
      if (node.count > 0) {
        for (std::uint32_t i = node.first; i < node.first + node.count; ++i) {
          if (visit(order_[i])) return true;
        }
      } else {
        stack[top++] = node.right;
        stack[top++] = index + 1;
      }
    }
    return false;
  }

 private:
  static constexpr int kStackSize = 128;

  struct Node {
    Box box;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    std::uint32_t right = 0;
  };

  static bool ray_hits_box(const Vec3& origin, const Vec3& inv, const Box& box);
  void build(std::uint32_t begin, std::uint32_t end, int depth, const std::vector<Vec3>& centroids);

  std::vector<Triangle> triangles_;
  std::vector<Box> tri_bounds_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace octodfm
