#include "octodfm/profile.hpp"

#include "octodfm/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace octodfm {

namespace {

namespace pt = boost::property_tree;

class Section {
 public:
  Section(const pt::ptree& tree, std::string source, std::string name)
      : tree_(tree), where_(std::move(source) + " [" + std::move(name) + "]") {}

  [[noreturn]] void fail(const std::string& what) const { throw Error(ErrorCode::ConfigError, where_ + ": " + what); }

  std::optional<std::string> text(const std::string& key) {
    used_.insert(key);
    const auto it = tree_.find(key);
    if (it == tree_.not_found()) return std::nullopt;
    return it->second.data();
  }

  std::string require_text(const std::string& key) {
    auto v = text(key);
    if (!v) fail("missing key '" + key + "'");
    return *v;
  }

  double to_number(const std::string& key, std::string_view s) const {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      fail("'" + key + "' is not a number: '" + std::string(s) + "'");
    }
    return v;
  }

  std::optional<double> number(const std::string& key) {
    const auto v = text(key);
    if (!v) return std::nullopt;
    return to_number(key, *v);
  }

  double require_number(const std::string& key) { return to_number(key, require_text(key)); }

  std::vector<double> require_list(const std::string& key) {
    std::istringstream in(require_text(key));
    std::vector<double> out;
    for (std::string token; in >> token;) out.push_back(to_number(key, token));
    if (out.empty()) fail("'" + key + "' is empty");
    return out;
  }

  Vec3 envelope() {
    return {require_number("envelope_x_mm"), require_number("envelope_y_mm"), require_number("envelope_z_mm")};
  }

  /// Keys under `prefix.`, with the prefix stripped.
  std::map<std::string, double> prefixed(const std::string& prefix) {
    std::map<std::string, double> out;
    for (const auto& [key, child] : tree_) {
      if (key.rfind(prefix + ".", 0) != 0) continue;
      used_.insert(key);
      const std::string name = key.substr(prefix.size() + 1);
      if (name.empty()) fail("empty name in '" + key + "'");
      out[name] = to_number(key, child.data());
    }
    return out;
  }

  void reject_unknown() const {
    for (const auto& [key, child] : tree_) {
      if (!used_.contains(key)) fail("unknown key '" + key + "'");
    }
  }

 private:
  const pt::ptree& tree_;
  std::string where_;
  std::set<std::string> used_;
};

SubtractiveProfile read_machining(Section s) {
  SubtractiveProfile p;
  p.name = s.text("name").value_or("machining");
  p.envelope = s.envelope();
  p.slenderness_limit = s.require_number("slenderness_limit");
  p.tool_diameters = s.require_list("tool_diameters_mm");
  p.hb_max = s.require_number("hb_max");
  p.hardness_hb = s.prefixed("hardness_hb");
  p.ra_best = s.require_number("ra_best_um");
  p.ra_coarse = s.require_number("ra_coarse_um");
  s.reject_unknown();
  p.validate();
  return p;
}

AdditiveProfile read_additive(Section s) {
  AdditiveProfile p;
  p.name = s.text("name").value_or("additive");
  p.envelope = s.envelope();
  const auto cx = s.number("platform_center_x_mm");
  const auto cy = s.number("platform_center_y_mm");
  if (cx.has_value() != cy.has_value()) s.fail("platform_center_x_mm and platform_center_y_mm go together");
  if (cx) p.platform_center = Eigen::Vector2d(*cx, *cy);
  p.reference_area = s.number("reference_area_mm2");
  if (const auto ref = s.text("height_reference")) {
    if (*ref == "top") {
      p.height_reference = HeightReference::LeafTop;
    } else if (*ref == "centroid") {
      p.height_reference = HeightReference::LeafCentroid;
    } else {
      s.fail("height_reference must be top or centroid");
    }
  }
  s.reject_unknown();
  p.validate();
  return p;
}

}  // namespace

MachineProfiles parse_profiles(std::string_view text, std::string_view source) {
  const std::string where(source);
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::ConfigError, where + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  MachineProfiles out;
  for (const auto& [section, child] : tree) {
    if (child.empty()) {
      throw Error(ErrorCode::ConfigError, where + ": key '" + section + "' outside of a section");
    }
    try {
      if (section == "machining") {
        out.machining = read_machining(Section(child, where, section));
      } else if (section == "additive") {
        out.additive = read_additive(Section(child, where, section));
      } else {
        throw Error(ErrorCode::ConfigError, "unknown section [" + section + "]");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConfigError) throw;
      const std::string what = e.what();
      throw Error(ErrorCode::ConfigError, what.rfind(where, 0) == 0 ? what : where + ": " + what);
    }
  }
  if (!out.machining && !out.additive) {
    throw Error(ErrorCode::ConfigError, where + ": no [machining] or [additive] section");
  }
  return out;
}

MachineProfiles load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read profile " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profiles(buffer.str(), path.string());
}

}  // namespace octodfm
