#include "octodfm/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace octodfm {

namespace {
constexpr std::uint32_t kLeafSize = 4;
constexpr int kMaxDepth = 60;
}  // namespace

TriangleBvh::TriangleBvh(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
  const auto n = static_cast<std::uint32_t>(triangles_.size());
  if (n == 0) return;
  double scale = 1.0;
  for (const auto& t : triangles_) {
    for (const auto& p : t.v) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  }
  // Bounds are padded so grazing rays and touching boxes still reach the
  // exact per-triangle tests.
  const double pad = 1e-9 * scale;
  tri_bounds_.reserve(n);
  std::vector<Vec3> centroids;
  centroids.reserve(n);
  for (const auto& t : triangles_) {
    tri_bounds_.push_back(t.bounds().inflated(pad));
    centroids.push_back(t.centroid());
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0U);
  nodes_.reserve(2 * (n / kLeafSize + 1));
  build(0, n, 0, centroids);
}

void TriangleBvh::build(std::uint32_t begin, std::uint32_t end, int depth,
                        const std::vector<Vec3>& centroids) {
  const auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  Box box = Box::empty();
  Box centroid_box = Box::empty();
  for (std::uint32_t i = begin; i < end; ++i) {
    const Box& b = tri_bounds_[order_[i]];
    box.expand(b.lo);
    box.expand(b.hi);
    centroid_box.expand(centroids[order_[i]]);
  }
  nodes_[index].box = box;

  if (end - begin <= kLeafSize || depth >= kMaxDepth) {
    nodes_[index].first = begin;
    nodes_[index].count = end - begin;
    return;
  }

  int axis = 0;
  centroid_box.extent().maxCoeff(&axis);
  const std::uint32_t mid = begin + (end - begin) / 2;
  // Ties broken by triangle index so the layout is reproducible.
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ca = centroids[a][axis];
                     const double cb = centroids[b][axis];
                     return ca < cb || (ca == cb && a < b);
                   });

  build(begin, mid, depth + 1, centroids);
  nodes_[index].right = static_cast<std::uint32_t>(nodes_.size());
  build(mid, end, depth + 1, centroids);
}

bool TriangleBvh::ray_hits_box(const Vec3& origin, const Vec3& inv, const Box& box) {
  double tmin = 0.0;
  double tmax = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (std::isinf(inv[a])) {
      if (origin[a] < box.lo[a] || origin[a] > box.hi[a]) return false;
      continue;
    }
    double t0 = (box.lo[a] - origin[a]) * inv[a];
    double t1 = (box.hi[a] - origin[a]) * inv[a];
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    if (tmin > tmax) return false;
  }
  return true;
}

}  // namespace octodfm
