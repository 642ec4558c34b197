#pragma once

#include "octodfm/additive.hpp"
#include "octodfm/machining.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace octodfm {

/// Machine capabilities read from an INI-style profile file.
///
///   ; comment
///   [machining]
///   name = hsm-3axis
///   envelope_x_mm = 800
///   envelope_y_mm = 500
///   envelope_z_mm = 500
///   slenderness_limit = 10
///   tool_diameters_mm = 2 4 6 10 16
///   hb_max = 400
///   hardness_hb.steel_1045 = 200
///   ra_best_um = 0.4
///   ra_coarse_um = 6.3
///
///   [additive]
///   name = sls-metal
///   envelope_x_mm = 250
///   envelope_y_mm = 250
///   envelope_z_mm = 250
///   ; optional, defaults to the platform center
///   platform_center_x_mm = 125
///   platform_center_y_mm = 125
///   ; optional, defaults to the envelope box surface
///   reference_area_mm2 = 375000
///   ; top | centroid
///   height_reference = top
///
/// Comments take a whole line. Either section may be omitted. Unknown
/// sections or keys are errors.
struct MachineProfiles {
  std::optional<SubtractiveProfile> machining;
  std::optional<AdditiveProfile> additive;
};

/// Parses and validates. Throws ConfigError naming `source` on any problem.
MachineProfiles parse_profiles(std::string_view text, std::string_view source = "profile");

/// Throws ConfigError, also when the file cannot be read.
MachineProfiles load_profiles(const std::filesystem::path& path);

}  // namespace octodfm
