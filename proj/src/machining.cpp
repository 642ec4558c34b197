#include "octodfm/machining.hpp"

#include "octodfm/errors.hpp"
#include "octodfm/parallel.hpp"

#include <cmath>
#include <numbers>

namespace octodfm {

void SubtractiveProfile::validate() const {
  auto fail = [this](const std::string& what) {
    throw Error(ErrorCode::ConfigError, "machining profile '" + name + "': " + what);
  };
  if (!(envelope.array() > 0.0).all()) fail("envelope extents must be > 0");
  if (!(slenderness_limit > 1.0)) fail("slenderness_limit must be > 1");
  if (tool_diameters.empty()) fail("tool_diameters must not be empty");
  for (std::size_t i = 0; i < tool_diameters.size(); ++i) {
    if (!(tool_diameters[i] > 0.0)) fail("tool diameters must be > 0");
    if (i > 0 && !(tool_diameters[i] > tool_diameters[i - 1])) fail("tool_diameters must be strictly ascending");
  }
  if (!(hb_max > 0.0)) fail("hb_max must be > 0");
  for (const auto& [material, hb] : hardness_hb) {
    if (!(hb >= 0.0)) fail("hardness of '" + material + "' must be >= 0");
  }
  if (!(ra_best > 0.0)) fail("ra_best must be > 0");
  if (!(ra_best < ra_coarse)) fail("ra_best must be < ra_coarse");
}

double c_d_sub(const MeshMetrics& metrics, const SubtractiveProfile& profile) {
  return fit_ratio(metrics.extent(), profile.envelope);
}

double c_c(const MeshMetrics& metrics) {
  if (!metrics.watertight) throw Error(ErrorCode::NotWatertight, "C(c) needs a closed part");
  const Vec3 e = metrics.extent();
  const double stock = e.x() * e.y() * e.z();
  if (!(stock > 0.0)) return 0.0;
  return clamp01((stock - metrics.volume) / stock);
}

double c_m(std::string_view material, const SubtractiveProfile& profile) {
  const auto it = profile.hardness_hb.find(std::string(material));
  if (it == profile.hardness_hb.end()) {
    throw Error(ErrorCode::UnknownMaterial, "'" + std::string(material) + "' not in hardness table of '" +
                                                profile.name + "'");
  }
  return clamp01(it->second / profile.hb_max);
}

double c_r(double required_ra, const SubtractiveProfile& profile) {
  if (!(required_ra > 0.0)) throw Error(ErrorCode::NonPositiveRoughness, "required Ra must be > 0");
  if (required_ra >= profile.ra_coarse) return 0.0;
  if (required_ra <= profile.ra_best) return 1.0;
  return clamp01(std::log(profile.ra_coarse / required_ra) / std::log(profile.ra_coarse / profile.ra_best));
}

namespace {

struct SurfaceSample {
  Vec3 point;
  Vec3 normal;  // unit, outward
};

/// Clips a triangle to a box (Sutherland-Hodgman over the six face planes).
std::vector<Vec3> clip_to_box(const Triangle& tri, const Box& box) {
  std::vector<Vec3> poly(tri.v.begin(), tri.v.end());
  std::vector<Vec3> next;
  for (int a = 0; a < 3 && !poly.empty(); ++a) {
    for (int side = 0; side < 2 && !poly.empty(); ++side) {
      const double bound = side == 0 ? box.lo[a] : box.hi[a];
      const double sign = side == 0 ? 1.0 : -1.0;  // inside: sign * (p[a] - bound) >= 0
      next.clear();
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec3& p = poly[i];
        const Vec3& q = poly[(i + 1) % poly.size()];
        const double dp = sign * (p[a] - bound);
        const double dq = sign * (q[a] - bound);
        if (dp >= 0.0) next.push_back(p);
        if ((dp >= 0.0) != (dq >= 0.0)) {
          const double t = dp / (dp - dq);
          Vec3 x = p + t * (q - p);
          x[a] = bound;
          next.push_back(x);
        }
      }
      poly.swap(next);
    }
  }
  return poly;
}

/// One sample per triangle piece inside the box: the piece's vertex average.
std::vector<SurfaceSample> surface_samples(const TriMesh& mesh, const Box& box) {
  std::vector<SurfaceSample> out;
  const auto& bvh = mesh.bvh();
  bvh.visit_overlapping(box, [&](std::uint32_t t) {
    const Triangle& tri = bvh.triangles()[t];
    if (!triangle_box_intersect(tri, box, BoxClosure::Open)) return false;
    const auto poly = clip_to_box(tri, box);
    if (poly.size() < 3) return false;
    Vec3 c = Vec3::Zero();
    for (const auto& p : poly) c += p;
    out.push_back({c / static_cast<double>(poly.size()), tri.normal().normalized()});
    return false;
  });
  return out;
}

class AccessProbe {
 public:
  AccessProbe(const TriMesh& mesh, const ToolAccessOptions& options) : mesh_(mesh), options_(options) {}

  /// Whether a tool of radius r, moving along -Z, can touch the surface at s.
  bool reachable(const SurfaceSample& s, double r, double lift) const {
    const double z0 = s.point.z() + lift;
    const Eigen::Vector2d p(s.point.x(), s.point.y());
    const Eigen::Vector2d nxy(s.normal.x(), s.normal.y());
    const double len = nxy.norm();
    if (len > options_.wall_normal_xy) {
      // Wall: tool flank tangent to the surface, axis offset along the normal.
      const Eigen::Vector2d u = nxy / len;
      return corridor_free(p + (r + lift) * u, r, z0, -u);
    }
    // Floor: the flat tool end may cover s anywhere under its disk, rim included.
    const Eigen::Vector2d ex(1.0, 0.0);
    if (corridor_free(p, r, z0, ex)) return true;
    for (double frac : {0.5, 0.9, 1.0}) {
      for (int k = 0; k < 8; ++k) {
        const Eigen::Vector2d a = p + frac * r * direction(ex, k);
        if (corridor_free(a, r, z0, ex)) return true;
      }
    }
    return false;
  }

 private:
  static Eigen::Vector2d direction(const Eigen::Vector2d& start, int k) {
    const double angle = k * std::numbers::pi / 4.0;
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * start.x() - s * start.y(), s * start.x() + c * start.y()};
  }

  /// Vertical rays at the axis and 8 rim points, starting at z0.
  bool corridor_free(const Eigen::Vector2d& axis, double r, double z0, const Eigen::Vector2d& start) const {
    const Vec3 up = Vec3::UnitZ();
    if (ray_hits_any(mesh_, Vec3(axis.x(), axis.y(), z0), up)) return false;
    for (int k = 0; k < 8; ++k) {
      const Eigen::Vector2d q = axis + r * direction(start, k);
      if (ray_hits_any(mesh_, Vec3(q.x(), q.y(), z0), up)) return false;
    }
    return true;
  }

  const TriMesh& mesh_;
  const ToolAccessOptions& options_;
};

}  // namespace

std::vector<ToolAccess> tool_access(const TriMesh& mesh, const Octree& octree, const SubtractiveProfile& profile,
                                    const ToolAccessOptions& options, unsigned workers) {
  require_watertight(mesh, "C(f)");
  if (mesh.fingerprint() != octree.mesh_fingerprint()) {
    throw Error(ErrorCode::MeshMismatch, "octree was built from a different mesh");
  }
  profile.validate();

  const Box part = octree.part_bounds();
  const double datum_tol = 1e-6 * std::max(1.0, part.extent().maxCoeff());
  const std::vector<std::size_t> grey = octree.grey_leaves();
  const AccessProbe probe(mesh, options);
  const auto& diameters = profile.tool_diameters;

  std::vector<ToolAccess> out(grey.size());
  parallel_for(grey.size(), workers, [&](std::size_t i) {
    const Box& box = octree.leaf(grey[i]).box;
    const double lift = options.lift_rel * box.extent().maxCoeff();
    ToolAccess access;
    access.reach = std::max(0.0, part.hi.z() - box.hi.z());

    // D is the smallest over samples of the largest tool reaching each one.
    std::size_t limit = diameters.size();  // candidates are diameters[0, limit)
    bool reachable = true;
    for (const SurfaceSample& s : surface_samples(mesh, box)) {
      const bool datum = s.normal.z() < -0.9 && std::abs(s.point.z() - part.lo.z()) <= datum_tol;
      if (datum) continue;  // stock bottom, resting on the table
      if (s.normal.z() < options.undercut_normal_z) {
        reachable = false;
        break;
      }
      std::size_t k = limit;
      while (k > 0 && !probe.reachable(s, 0.5 * diameters[k - 1], lift)) --k;
      if (k == 0) {
        reachable = false;
        break;
      }
      limit = k;
    }
    if (reachable) access.diameter = diameters[limit - 1];
    out[i] = access;
  });
  return out;
}

double tool_flexibility_value(const ToolAccess& access, double slenderness_limit) {
  if (!access.diameter) return 1.0;
  return clamp01((access.reach / *access.diameter) / slenderness_limit);
}

LocalIndexField c_f(const TriMesh& mesh, const Octree& octree, const SubtractiveProfile& profile,
                    const ToolAccessOptions& options, unsigned workers) {
  const auto access = tool_access(mesh, octree, profile, options, workers);
  LocalIndexField field;
  field.id = std::string(index_id::kToolFlexibility);
  field.leaves = octree.grey_leaves();
  field.values.reserve(access.size());
  field.volumes.reserve(access.size());
  for (std::size_t i = 0; i < access.size(); ++i) {
    field.values.push_back(tool_flexibility_value(access[i], profile.slenderness_limit));
    field.volumes.push_back(octree.leaf(field.leaves[i]).part_volume);
  }
  return field;
}

}  // namespace octodfm
