#include "octodfm/additive.hpp"

#include "octodfm/errors.hpp"

#include <cmath>

namespace octodfm {

Eigen::Vector2d AdditiveProfile::resolved_platform_center() const {
  return platform_center.value_or(Eigen::Vector2d(0.5 * envelope.x(), 0.5 * envelope.y()));
}

double AdditiveProfile::resolved_reference_area() const {
  if (reference_area) return *reference_area;
  const Vec3& e = envelope;
  return 2.0 * (e.x() * e.y() + e.y() * e.z() + e.z() * e.x());
}

void AdditiveProfile::validate() const {
  auto fail = [this](const std::string& what) {
    throw Error(ErrorCode::ConfigError, "additive profile '" + name + "': " + what);
  };
  if (!(envelope.array() > 0.0).all()) fail("envelope extents must be > 0");
  const Eigen::Vector2d c = resolved_platform_center();
  if (!(c.x() >= 0.0 && c.x() <= envelope.x() && c.y() >= 0.0 && c.y() <= envelope.y())) {
    fail("platform_center must lie on the platform");
  }
  if (!(resolved_reference_area() > 0.0)) fail("reference_area must be > 0");
}

double c_d_add(const MeshMetrics& metrics, const AdditiveProfile& profile) {
  return fit_ratio(metrics.extent(), profile.envelope);
}

double c_v(const MeshMetrics& metrics, const AdditiveProfile& profile) {
  if (!metrics.watertight) throw Error(ErrorCode::NotWatertight, "C(v) needs a closed part");
  const Vec3& e = profile.envelope;
  return clamp01(metrics.volume / (e.x() * e.y() * e.z()));
}

double c_s(const MeshMetrics& metrics, const AdditiveProfile& profile) {
  if (!metrics.watertight) throw Error(ErrorCode::NotWatertight, "C(s) needs a closed part");
  return clamp01(metrics.surface_area / profile.resolved_reference_area());
}

namespace {

template <class ValueOf>
LocalIndexField make_field(std::string_view id, const Octree& octree, ValueOf&& value_of) {
  LocalIndexField field;
  field.id = std::string(id);
  field.leaves = octree.grey_leaves();
  for (std::size_t pos : field.leaves) {
    const OctantNode& leaf = octree.leaf(pos);
    field.values.push_back(clamp01(value_of(leaf)));
    field.volumes.push_back(leaf.part_volume);
  }
  return field;
}

}  // namespace

double height_value(double z, double part_bottom, const AdditiveProfile& profile) {
  return clamp01((z - part_bottom) / profile.envelope.z());
}

double platform_distance_value(const Eigen::Vector2d& placed, const AdditiveProfile& profile) {
  const double half_diagonal = 0.5 * std::hypot(profile.envelope.x(), profile.envelope.y());
  return clamp01((placed - profile.resolved_platform_center()).norm() / half_diagonal);
}

LocalIndexField c_h(const Octree& octree, const AdditiveProfile& profile) {
  const double bottom = octree.part_bounds().lo.z();
  const bool top = profile.height_reference == HeightReference::LeafTop;
  return make_field(index_id::kHeight, octree, [&](const OctantNode& leaf) {
    return height_value(top ? leaf.box.hi.z() : leaf.box.center().z(), bottom, profile);
  });
}

LocalIndexField c_rho(const Octree& octree, const AdditiveProfile& profile) {
  // The part is placed with its bbox centered on platform_center.
  const Eigen::Vector2d center = profile.resolved_platform_center();
  const Vec3 part_center = octree.part_bounds().center();
  return make_field(index_id::kPlatformDistance, octree, [&](const OctantNode& leaf) {
    const Vec3 c = leaf.centroid();
    const Eigen::Vector2d placed(c.x() - part_center.x() + center.x(), c.y() - part_center.y() + center.y());
    return platform_distance_value(placed, profile);
  });
}

}  // namespace octodfm
