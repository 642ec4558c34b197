#pragma once

#include "octodfm/field.hpp"
#include "octodfm/mesh.hpp"
#include "octodfm/octree.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace octodfm {

namespace index_id {
inline constexpr std::string_view kMaxDimensionAdd = "C(d)+";
inline constexpr std::string_view kVolume = "C(v)+";
inline constexpr std::string_view kSkin = "C(s)+";
inline constexpr std::string_view kHeight = "C(h)+";
inline constexpr std::string_view kPlatformDistance = "C(rho)+";
}  // namespace index_id

enum class HeightReference { LeafTop, LeafCentroid };

/// Build volume of an additive machine. x, y span the platform; z is the
/// build height. The part sits on the platform with its bbox centered on
/// platform_center.
struct AdditiveProfile {
  std::string name;
  Vec3 envelope = Vec3::Zero();
  std::optional<Eigen::Vector2d> platform_center;  // default: envelope center
  std::optional<double> reference_area;            // default: envelope box surface
  HeightReference height_reference = HeightReference::LeafTop;

  Eigen::Vector2d resolved_platform_center() const;
  double resolved_reference_area() const;

  /// Throws ConfigError on a violated invariant.
  void validate() const;
};

double c_d_add(const MeshMetrics& metrics, const AdditiveProfile& profile);

/// Part volume over envelope volume. Throws NotWatertight.
double c_v(const MeshMetrics& metrics, const AdditiveProfile& profile);

/// Surface area over the reference area. Throws NotWatertight.
double c_s(const MeshMetrics& metrics, const AdditiveProfile& profile);

/// (z - part_bottom) / build height, clamped.
double height_value(double z, double part_bottom, const AdditiveProfile& profile);

/// Distance of a placed point from platform_center over the platform
/// half-diagonal, clamped.
double platform_distance_value(const Eigen::Vector2d& placed, const AdditiveProfile& profile);

/// Leaf height above the part bottom over the build height.
LocalIndexField c_h(const Octree& octree, const AdditiveProfile& profile);

/// Horizontal distance of the placed leaf centroid from platform_center over
/// the platform half-diagonal.
LocalIndexField c_rho(const Octree& octree, const AdditiveProfile& profile);

}  // namespace octodfm
