#pragma once

#include "octodfm/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace octodfm {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Largest extent ratio part/envelope under the best of the six axis-aligned
/// placements, clamped to [0, 1]. 1 means the part does not fit.
double fit_ratio(const Vec3& part_extent, const Vec3& envelope);

/// Per-grey-leaf values of one local index, aligned to an octree.
/// Black leaves carry an implicit 0 and are not listed.
struct LocalIndexField {
  std::string id;
  std::vector<std::size_t> leaves;  // positions in Octree::leaves()
  std::vector<double> values;       // in [0, 1]
  std::vector<double> volumes;      // part volume V_j of each leaf, mm^3

  std::size_t size() const { return values.size(); }
  double max() const;
  double mean() const;
};

}  // namespace octodfm
