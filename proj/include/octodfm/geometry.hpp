#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstddef>
#include <limits>

namespace octodfm {

/// Points and vectors, millimeters.
using Vec3 = Eigen::Vector3d;

/// Closed axis-aligned box [lo, hi].
struct Box {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  Vec3 center() const { return 0.5 * (lo + hi); }
  Vec3 extent() const { return hi - lo; }
  double volume() const {
    const Vec3 e = extent();
    return e.x() * e.y() * e.z();
  }
  bool contains(const Vec3& p) const {
    return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
  }
  bool overlaps(const Box& o) const {
    return (lo.array() <= o.hi.array()).all() && (o.lo.array() <= hi.array()).all();
  }
  Box inflated(double d) const { return {(lo.array() - d).matrix(), (hi.array() + d).matrix()}; }
  void expand(const Vec3& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }

  /// Child octant; bit 0 selects the upper x half, bit 1 y, bit 2 z.
  /// Children share the exact parent midpoint so they tile the parent.
  Box octant(unsigned index) const {
    const Vec3 mid = center();
    Box child;
    for (int a = 0; a < 3; ++a) {
      const bool upper = (index >> a) & 1U;
      child.lo[a] = upper ? mid[a] : lo[a];
      child.hi[a] = upper ? hi[a] : mid[a];
    }
    return child;
  }

  static Box empty() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {Vec3::Constant(inf), Vec3::Constant(-inf)};
  }
};

struct Triangle {
  std::array<Vec3, 3> v;

  Vec3 normal() const { return (v[1] - v[0]).cross(v[2] - v[0]); }
  double area() const { return 0.5 * normal().norm(); }
  Vec3 centroid() const { return (v[0] + v[1] + v[2]) / 3.0; }
  Box bounds() const {
    Box b = Box::empty();
    for (const auto& p : v) b.expand(p);
    return b;
  }
};

}  // namespace octodfm
