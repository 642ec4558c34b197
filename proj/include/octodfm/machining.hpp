#pragma once

#include "octodfm/field.hpp"
#include "octodfm/mesh.hpp"
#include "octodfm/octree.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octodfm {

namespace index_id {
inline constexpr std::string_view kMaxDimensionSub = "C(d)-";
inline constexpr std::string_view kChips = "C(c)-";
inline constexpr std::string_view kToolFlexibility = "C(f)-";
inline constexpr std::string_view kHardness = "C(m)-";
inline constexpr std::string_view kRoughness = "C(r)-";
}  // namespace index_id

/// Capabilities of a subtractive (3-axis milling) machine.
struct SubtractiveProfile {
  std::string name;
  Vec3 envelope = Vec3::Zero();       // work volume, mm
  double slenderness_limit = 0.0;     // max usable tool length/diameter
  std::vector<double> tool_diameters; // mm, ascending
  std::map<std::string, double> hardness_hb;
  double hb_max = 0.0;                // machinability ceiling, HB
  double ra_best = 0.0;               // finest achievable roughness, um
  double ra_coarse = 0.0;             // roughness obtained with no effort, um

  /// Throws ConfigError on a violated invariant.
  void validate() const;
};

double c_d_sub(const MeshMetrics& metrics, const SubtractiveProfile& profile);

/// Stock is the part's axis-aligned bbox. Throws NotWatertight.
double c_c(const MeshMetrics& metrics);

double c_m(std::string_view material, const SubtractiveProfile& profile);

/// Log-linear between ra_coarse (0) and ra_best (1).
double c_r(double required_ra, const SubtractiveProfile& profile);

struct ToolAccessOptions {
  /// Probe rays start this far above the sampled surface point, relative
  /// to the leaf edge.
  double lift_rel = 1e-3;
  /// Surfaces whose unit normal has z below this face downward and cannot
  /// be reached from +Z.
  double undercut_normal_z = -0.1;
  /// |n_xy| above which a sample is treated as a wall.
  double wall_normal_xy = 0.05;
};

/// Tool access to one grey leaf along -Z.
struct ToolAccess {
  double reach = 0.0;               // L: part top down to the leaf top face, mm
  std::optional<double> diameter;   // D: largest tool reaching all surface in the leaf
};

/// Per-grey-leaf tool access, Morton order. Throws NotWatertight.
std::vector<ToolAccess> tool_access(const TriMesh& mesh, const Octree& octree,
                                    const SubtractiveProfile& profile,
                                    const ToolAccessOptions& options = {}, unsigned workers = 0);

/// clamp((L/D)/R_max); 1 where no tool reaches.
double tool_flexibility_value(const ToolAccess& access, double slenderness_limit);

/// Cutting-tool flexibility for 3-axis machining along -Z.
LocalIndexField c_f(const TriMesh& mesh, const Octree& octree, const SubtractiveProfile& profile,
                    const ToolAccessOptions& options = {}, unsigned workers = 0);

}  // namespace octodfm
