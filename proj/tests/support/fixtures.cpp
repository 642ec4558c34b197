#include "fixtures.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

namespace octodfm::fixtures {

namespace {

/// Accumulates triangles; vertices are welded later by TriMesh.
struct Builder {
  std::vector<Vec3> vertices;
  std::vector<TriangleIndices> triangles;

  std::uint32_t add(const Vec3& p) {
    vertices.push_back(p);
    return static_cast<std::uint32_t>(vertices.size() - 1);
  }

  void tri(const Vec3& a, const Vec3& b, const Vec3& c) { triangles.push_back({add(a), add(b), add(c)}); }

  /// Star-shaped polygon around its vertex centroid, fanned from that
  /// centroid and oriented to face `normal`.
  void polygon(const std::vector<Vec3>& pts, const Vec3& normal) {
    Vec3 c = Vec3::Zero();
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    Vec3 area = Vec3::Zero();
    for (std::size_t i = 0; i < pts.size(); ++i) area += (pts[i] - c).cross(pts[(i + 1) % pts.size()] - c);
    const bool flip = area.dot(normal) < 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3& a = pts[i];
      const Vec3& b = pts[(i + 1) % pts.size()];
      if (flip) {
        tri(c, b, a);
      } else {
        tri(c, a, b);
      }
    }
  }

  TriMesh build() { return TriMesh(std::move(vertices), std::move(triangles)); }
};

}  // namespace

TriMesh grid_solid(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& zs,
                   const std::function<bool(int, int, int)>& filled) {
  const std::array<const std::vector<double>*, 3> axes = {&xs, &ys, &zs};
  const std::array<int, 3> n = {static_cast<int>(xs.size()) - 1, static_cast<int>(ys.size()) - 1,
                                static_cast<int>(zs.size()) - 1};
  auto solid = [&](std::array<int, 3> c) {
    for (int a = 0; a < 3; ++a) {
      if (c[a] < 0 || c[a] >= n[a]) return false;
    }
    return filled(c[0], c[1], c[2]);
  };

  Builder b;
  for (int i = 0; i < n[0]; ++i) {
    for (int j = 0; j < n[1]; ++j) {
      for (int k = 0; k < n[2]; ++k) {
        const std::array<int, 3> cell = {i, j, k};
        if (!solid(cell)) continue;
        for (int a = 0; a < 3; ++a) {
          for (int side = 0; side < 2; ++side) {
            std::array<int, 3> next = cell;
            next[a] += side == 0 ? -1 : 1;
            if (solid(next)) continue;
            const int u = (a + 1) % 3, v = (a + 2) % 3;
            auto corner = [&](int du, int dv) {
              Vec3 p;
              p[a] = (*axes[a])[cell[a] + side];
              p[u] = (*axes[u])[cell[u] + du];
              p[v] = (*axes[v])[cell[v] + dv];
              return p;
            };
            // Counter-clockwise in (u, v) faces +a.
            const Vec3 p00 = corner(0, 0), p10 = corner(1, 0), p11 = corner(1, 1), p01 = corner(0, 1);
            if (side == 1) {
              b.tri(p00, p10, p11);
              b.tri(p00, p11, p01);
            } else {
              b.tri(p00, p11, p10);
              b.tri(p00, p01, p11);
            }
          }
        }
      }
    }
  }
  return b.build();
}

TriMesh box(const Vec3& lo, const Vec3& hi) {
  return grid_solid({lo.x(), hi.x()}, {lo.y(), hi.y()}, {lo.z(), hi.z()}, [](int, int, int) { return true; });
}

TriMesh l_bracket(double w, double length) {
  return grid_solid({0, w / 2, w}, {0, w / 2, w}, {0, length}, [](int i, int j, int) { return !(i == 1 && j == 1); });
}

TriMesh pocket_block(const PocketSpec& s) {
  const double top = s.z0 + s.size.z();
  return grid_solid({0, s.px0, s.px1, s.size.x()}, {0, s.py0, s.py1, s.size.y()}, {s.z0, s.floor_z, top},
                    [](int i, int j, int k) { return !(i == 1 && j == 1 && k == 1); });
}

TriMesh undercut_block() {
  return grid_solid({0, 40}, {0, 10, 30, 40}, {0, 10, 20, 40}, [](int, int j, int k) { return !(j == 1 && k == 1); });
}

TriMesh icosphere(double radius, int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                         {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<TriangleIndices> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                    {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                    {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                    {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mid;
    auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = std::minmax(a, b);
      const auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      v.push_back((v[a] + v[b]).normalized());
      const auto idx = static_cast<std::uint32_t>(v.size() - 1);
      mid.emplace(key, idx);
      return idx;
    };
    std::vector<TriangleIndices> next;
    for (const auto& t3 : f) {
      const auto a = midpoint(t3[0], t3[1]), b = midpoint(t3[1], t3[2]), c = midpoint(t3[2], t3[0]);
      next.push_back({t3[0], a, c});
      next.push_back({t3[1], b, a});
      next.push_back({t3[2], c, b});
      next.push_back({a, b, c});
    }
    f.swap(next);
  }
  for (auto& p : v) p *= radius;
  return TriMesh(std::move(v), std::move(f));
}

TriMesh torus(double major, double minor, int nu, int nv) {
  std::vector<Vec3> v;
  std::vector<TriangleIndices> f;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < nu; ++i) {
    const double u = two_pi * i / nu;
    for (int j = 0; j < nv; ++j) {
      const double w = two_pi * j / nv;
      const double rr = major + minor * std::cos(w);
      v.emplace_back(rr * std::cos(u), rr * std::sin(u), minor * std::sin(w));
    }
  }
  auto idx = [&](int i, int j) { return static_cast<std::uint32_t>((i % nu) * nv + (j % nv)); };
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      // d/du x d/dw points outward for this parametrization.
      f.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      f.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  }
  return TriMesh(std::move(v), std::move(f));
}

namespace {

/// Rounded-rectangle outline, counter-clockwise seen from +z, starting at the
/// lower end of the right side.
std::vector<Eigen::Vector2d> outline(const RoundPocket& p, int segments) {
  const double r = p.corner_radius;
  const std::array<Eigen::Vector2d, 4> centers = {Eigen::Vector2d(p.x1 - r, p.y0 + r),
                                                  Eigen::Vector2d(p.x1 - r, p.y1 - r),
                                                  Eigen::Vector2d(p.x0 + r, p.y1 - r),
                                                  Eigen::Vector2d(p.x0 + r, p.y0 + r)};
  std::vector<Eigen::Vector2d> out;
  for (int c = 0; c < 4; ++c) {
    const double start = (c - 1) * std::numbers::pi / 2.0;  // -90, 0, 90, 180 degrees
    for (int s = 0; s <= segments; ++s) {
      const double a = start + (std::numbers::pi / 2.0) * s / segments;
      out.push_back(centers[c] + r * Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
  }
  // Start at (x1, y0 + r): the end of the first arc.
  std::rotate(out.begin(), out.begin() + segments, out.end());
  return out;
}

Vec3 at(const Eigen::Vector2d& p, double z) { return {p.x(), p.y(), z}; }

/// Region between a straight edge a-b and a convex chain running from near b
/// to near a; each endpoint fans the half of the chain on its side.
void fan_region(Builder& b, const Vec3& a, const Vec3& bb, const std::vector<Vec3>& chain) {
  std::size_t s = 0;
  while (s < chain.size() &&
         std::abs(chain[s].x() - bb.x()) <= std::abs(chain[s].x() - a.x())) {
    ++s;
  }
  if (s == 0 || s == chain.size()) throw std::logic_error("fan_region: chain does not cross the midline");
  for (std::size_t i = 0; i + 1 < s; ++i) b.tri(bb, chain[i], chain[i + 1]);
  b.tri(a, bb, chain[s - 1]);
  b.tri(a, chain[s - 1], chain[s]);
  for (std::size_t i = s; i + 1 < chain.size(); ++i) b.tri(a, chain[i], chain[i + 1]);
}

}  // namespace

TriMesh pocketed_slab(const SlabSpec& spec) {
  const Vec3& lo = spec.lo;
  const Vec3& hi = spec.hi;
  const double top = hi.z();
  const int n = spec.arc_segments;
  Builder b;

  std::vector<RoundPocket> pockets = spec.pockets;
  std::sort(pockets.begin(), pockets.end(), [](const auto& p, const auto& q) { return p.x0 < q.x0; });

  // Top face, split into strips along x at the pocket sides.
  double x = lo.x();
  std::vector<std::pair<double, double>> edge_points_left;  // y values on the next strip's left edge
  for (std::size_t k = 0; k <= pockets.size(); ++k) {
    const double x_end = k < pockets.size() ? pockets[k].x0 : hi.x();
    // Plain strip [x, x_end]; its side edges carry the neighboring pockets' straight-side ends.
    std::vector<Vec3> strip = {{x, lo.y(), top}, {x_end, lo.y(), top}};
    if (k < pockets.size()) {
      const auto& p = pockets[k];
      strip.push_back({x_end, p.y0 + p.corner_radius, top});
      strip.push_back({x_end, p.y1 - p.corner_radius, top});
    }
    strip.push_back({x_end, hi.y(), top});
    strip.push_back({x, hi.y(), top});
    for (auto it = edge_points_left.rbegin(); it != edge_points_left.rend(); ++it) {
      strip.push_back({x, it->second, top});
      strip.push_back({x, it->first, top});
    }
    b.polygon(strip, Vec3::UnitZ());
    if (k == pockets.size()) break;

    const RoundPocket& p = pockets[k];
    const auto ring = outline(p, n);
    // ring[0] = (x1, y0 + r), ring[1] = (x1, y1 - r), ring[2q] = (x0, y1 - r),
    // ring[2q + 1] = (x0, y0 + r) with q points per corner arc.
    const std::size_t quarter = n + 1;
    std::vector<Vec3> bottom, upper;
    bottom.push_back(at(ring[0], top));
    for (std::size_t i = ring.size() - 1; i >= 2 * quarter + 1; --i) bottom.push_back(at(ring[i], top));
    for (std::size_t i = 2 * quarter; i >= 1; --i) upper.push_back(at(ring[i], top));
    fan_region(b, {p.x0, lo.y(), top}, {p.x1, lo.y(), top}, bottom);
    fan_region(b, {p.x1, hi.y(), top}, {p.x0, hi.y(), top}, upper);

    // Walls face the pocket center; the floor faces up.
    const Vec3 center((p.x0 + p.x1) / 2, (p.y0 + p.y1) / 2, top);
    const double floor = top - p.depth;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& q0 = ring[i];
      const auto& q1 = ring[(i + 1) % ring.size()];
      const Vec3 mid = at((q0 + q1) / 2, top);
      Vec3 inward = center - mid;
      inward.z() = 0;
      const Vec3 t0 = at(q0, top), t1 = at(q1, top), f0 = at(q0, floor), f1 = at(q1, floor);
      const Vec3 nrm = (t1 - t0).cross(f0 - t0);
      if (nrm.dot(inward) > 0) {
        b.tri(t0, t1, f0);
        b.tri(t1, f1, f0);
      } else {
        b.tri(t0, f0, t1);
        b.tri(t1, f0, f1);
      }
    }
    std::vector<Vec3> floor_ring;
    for (const auto& q : ring) floor_ring.push_back(at(q, floor));
    b.polygon(floor_ring, Vec3::UnitZ());

    edge_points_left = {{p.y0 + p.corner_radius, p.y1 - p.corner_radius}};
    x = p.x1;
  }

  // Long sides carry every strip boundary along their top edge.
  std::vector<double> cuts = {lo.x()};
  for (const auto& p : pockets) {
    cuts.push_back(p.x0);
    cuts.push_back(p.x1);
  }
  cuts.push_back(hi.x());
  for (int side = 0; side < 2; ++side) {
    const double y = side == 0 ? lo.y() : hi.y();
    std::vector<Vec3> face = {{lo.x(), y, lo.z()}, {hi.x(), y, lo.z()}};
    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) face.push_back({*it, y, top});
    b.polygon(face, side == 0 ? Vec3(-Vec3::UnitY()) : Vec3(Vec3::UnitY()));
  }
  for (int side = 0; side < 2; ++side) {
    const double xs = side == 0 ? lo.x() : hi.x();
    b.polygon({{xs, lo.y(), lo.z()}, {xs, hi.y(), lo.z()}, {xs, hi.y(), top}, {xs, lo.y(), top}},
              side == 0 ? Vec3(-Vec3::UnitX()) : Vec3(Vec3::UnitX()));
  }
  b.polygon({{lo.x(), lo.y(), lo.z()}, {hi.x(), lo.y(), lo.z()}, {hi.x(), hi.y(), lo.z()}, {lo.x(), hi.y(), lo.z()}},
            -Vec3::UnitZ());
  return b.build();
}

SlabSpec die_spec() {
  SlabSpec s;
  s.lo = {0, 0, 0};
  s.hi = {120, 80, 30};
  s.pockets = {{10, 34, 15, 65, 12, 2}, {48, 72, 15, 65, 20, 2}, {86, 110, 15, 65, 16, 2}};
  s.arc_segments = 6;
  return s;
}

void write_binary_stl(const TriMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  char header[80] = "octodfm test fixture";
  out.write(header, 80);
  const auto count = static_cast<std::uint32_t>(mesh.triangle_count());
  out.write(reinterpret_cast<const char*>(&count), 4);
  for (std::size_t i = 0; i < mesh.triangle_count(); ++i) {
    const Triangle t = mesh.triangle(i);
    const Vec3 n = t.normal().normalized();
    float data[12];
    for (int c = 0; c < 3; ++c) data[c] = static_cast<float>(n[c]);
    for (int v = 0; v < 3; ++v) {
      for (int c = 0; c < 3; ++c) data[3 + 3 * v + c] = static_cast<float>(t.v[v][c]);
    }
    out.write(reinterpret_cast<const char*>(data), sizeof(data));
    const std::uint16_t attr = 0;
    out.write(reinterpret_cast<const char*>(&attr), 2);
  }
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace octodfm::fixtures
