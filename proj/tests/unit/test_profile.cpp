#include "octodfm/profile.hpp"

#include <doctest.h>

#include "expect_error.hpp"

#include <filesystem>
#include <fstream>

using namespace octodfm;
using octodfm::testing::code_of;

namespace {

const char* kFull = R"(; shop machines
[machining]
name = hsm-3axis
envelope_x_mm = 800
envelope_y_mm = 500
envelope_z_mm = 500
slenderness_limit = 10
tool_diameters_mm = 2 4 6 10 16
hb_max = 400
hardness_hb.al_6061 = 95
hardness_hb.steel_1045 = 200
ra_best_um = 0.4
ra_coarse_um = 6.3

[additive]
name = sls-metal
envelope_x_mm = 250
envelope_y_mm = 200
envelope_z_mm = 150
platform_center_x_mm = 100
platform_center_y_mm = 90
reference_area_mm2 = 50000
height_reference = centroid
)";

ErrorCode parse_code(const std::string& text) {
  return code_of([&] { parse_profiles(text, "test.ini"); });
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("full profile") {
  const auto p = parse_profiles(kFull);
  REQUIRE(p.machining.has_value());
  REQUIRE(p.additive.has_value());
  const auto& m = *p.machining;
  CHECK(m.name == "hsm-3axis");
  CHECK(m.envelope == Vec3(800, 500, 500));
  CHECK(m.slenderness_limit == 10);
  CHECK(m.tool_diameters == std::vector<double>{2, 4, 6, 10, 16});
  CHECK(m.hb_max == 400);
  CHECK(m.hardness_hb.at("al_6061") == 95);
  CHECK(m.hardness_hb.at("steel_1045") == 200);
  CHECK(m.ra_best == 0.4);
  CHECK(m.ra_coarse == 6.3);
  const auto& a = *p.additive;
  CHECK(a.name == "sls-metal");
  CHECK(a.envelope == Vec3(250, 200, 150));
  CHECK(a.resolved_platform_center() == Eigen::Vector2d(100, 90));
  CHECK(a.resolved_reference_area() == 50000);
  CHECK(a.height_reference == HeightReference::LeafCentroid);
}

TEST_CASE("sections are optional and additive keys default") {
  const auto p = parse_profiles("[additive]\nname = p\nenvelope_x_mm = 100\nenvelope_y_mm = 50\nenvelope_z_mm = 10\n");
  CHECK_FALSE(p.machining.has_value());
  REQUIRE(p.additive.has_value());
  CHECK(p.additive->resolved_platform_center() == Eigen::Vector2d(50, 25));
  CHECK(p.additive->resolved_reference_area() == doctest::Approx(2 * (5000 + 500 + 1000)));
  CHECK(p.additive->height_reference == HeightReference::LeafTop);
}

TEST_CASE("bad profiles") {
  const std::string full = kFull;
  CHECK(parse_code("") == ErrorCode::ConfigError);
  CHECK(parse_code("; only a comment\n") == ErrorCode::ConfigError);
  CHECK(parse_code(full + "[casting]\nname = x\n") == ErrorCode::ConfigError);
  CHECK(parse_code("name = stray\n" + full) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "hb_max = 400", "hb_max = 400\nspindle_rpm = 24000")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "envelope_y_mm = 500\n", "")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "slenderness_limit = 10", "slenderness_limit = ten")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "2 4 6 10 16", "2 4 x")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "2 4 6 10 16", "6 4")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "ra_best_um = 0.4", "ra_best_um = 8")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "platform_center_y_mm = 90\n", "")) == ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "platform_center_x_mm = 100", "platform_center_x_mm = 900")) ==
        ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "height_reference = centroid", "height_reference = middle")) ==
        ErrorCode::ConfigError);
  CHECK(parse_code(replace(full, "[additive]", "[additive")) == ErrorCode::ConfigError);
}

TEST_CASE("errors name the source") {
  try {
    parse_profiles("[machining]\nname = x\n", "shop.ini");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("shop.ini") != std::string::npos);
  }
}

TEST_CASE("loading from disk") {
  const auto path = std::filesystem::temp_directory_path() / "octodfm_profile_test.ini";
  {
    std::ofstream out(path);
    out << kFull;
  }
  CHECK(load_profiles(path).machining->name == "hsm-3axis");
  CHECK(code_of([] { load_profiles("/nonexistent/octodfm.ini"); }) == ErrorCode::ConfigError);
}

}  // TEST_SUITE
