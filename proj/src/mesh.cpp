#include "octodfm/mesh.hpp"

#include "octodfm/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

namespace octodfm {

struct TriMesh::Cache {
  std::once_flag metrics_once;
  MeshMetrics metrics;
  std::once_flag bvh_once;
  TriangleBvh bvh;
};

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const void* bytes, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = kFnvOffset;
    fnv_mix(h, &k, sizeof(k));
    return static_cast<std::size_t>(h);
  }
};

/// Maps raw vertices to representatives. A new vertex joins the lowest-index
/// representative within `tol`; representatives stay pairwise farther apart
/// than `tol`, which makes welding idempotent.
std::vector<std::uint32_t> weld(const std::vector<Vec3>& raw, double tol, std::vector<Vec3>& reps) {
  std::vector<std::uint32_t> remap(raw.size());
  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellKeyHash> grid;
  const double cell = tol > 0.0 ? tol : 1.0;
  auto key_of = [&](const Vec3& p) {
    return CellKey{static_cast<std::int64_t>(std::floor(p.x() / cell)),
                   static_cast<std::int64_t>(std::floor(p.y() / cell)),
                   static_cast<std::int64_t>(std::floor(p.z() / cell))};
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Vec3& p = raw[i];
    const CellKey k = key_of(p);
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({k.x + dx, k.y + dy, k.z + dz});
          if (it == grid.end()) continue;
          for (std::uint32_t r : it->second) {
            const bool close = tol > 0.0 ? (reps[r] - p).norm() <= tol : reps[r] == p;
            if (close && r < best) best = r;
          }
        }
      }
    }
    if (best == std::numeric_limits<std::uint32_t>::max()) {
      best = static_cast<std::uint32_t>(reps.size());
      reps.push_back(p);
      grid[k].push_back(best);
    }
    remap[i] = best;
  }
  return remap;
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<TriangleIndices> triangles,
                 const MeshOptions& options)
    : cache_(std::make_shared<Cache>()) {
  for (const auto& t : triangles) {
    for (auto i : t) {
      if (i >= vertices.size()) {
        throw Error(ErrorCode::ParseError, "triangle index " + std::to_string(i) + " out of range");
      }
    }
  }

  std::vector<Vec3> reps;
  const auto remap = weld(vertices, options.weld_tolerance, reps);

  Box raw_box = Box::empty();
  for (const auto& p : reps) raw_box.expand(p);
  const double scale = reps.empty() ? 0.0 : raw_box.extent().maxCoeff();
  const double min_double_area = 1e-12 * scale * scale;

  std::vector<TriangleIndices> kept;
  kept.reserve(triangles.size());
  for (const auto& t : triangles) {
    const TriangleIndices w{remap[t[0]], remap[t[1]], remap[t[2]]};
    if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) continue;
    const double a2 = (reps[w[1]] - reps[w[0]]).cross(reps[w[2]] - reps[w[0]]).norm();
    if (!(a2 > min_double_area)) continue;
    kept.push_back(w);
  }
  if (kept.empty()) throw Error(ErrorCode::EmptyMesh, "no triangles after cleanup");

  // Compact to referenced vertices, numbered by first use.
  constexpr auto kUnused = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> compact(reps.size(), kUnused);
  auto data = std::make_shared<Data>();
  data->options = options;
  for (auto& t : kept) {
    for (auto& i : t) {
      if (compact[i] == kUnused) {
        compact[i] = static_cast<std::uint32_t>(data->vertices.size());
        data->vertices.push_back(reps[i]);
      }
      i = compact[i];
    }
  }
  data->triangles = std::move(kept);

  std::uint64_t h = kFnvOffset;
  for (const auto& p : data->vertices) fnv_mix(h, p.data(), 3 * sizeof(double));
  for (const auto& t : data->triangles) fnv_mix(h, t.data(), sizeof(t));
  data->fingerprint = h;
  data_ = std::move(data);
}

Triangle TriMesh::triangle(std::size_t i) const {
  const auto& t = data_->triangles[i];
  const auto& v = data_->vertices;
  return Triangle{{v[t[0]], v[t[1]], v[t[2]]}};
}

const MeshMetrics& TriMesh::metrics() const {
  std::call_once(cache_->metrics_once, [this] {
    MeshMetrics m;
    Box box = Box::empty();
    for (const auto& p : data_->vertices) box.expand(p);
    m.bbox_min = box.lo;
    m.bbox_max = box.hi;
    m.max_dimension = box.extent().maxCoeff();

    // Divergence theorem, with the bbox center as origin to limit cancellation.
    const Vec3 origin = box.center();
    double area = 0.0;
    double six_volume = 0.0;
    for (std::size_t i = 0; i < triangle_count(); ++i) {
      const Triangle t = triangle(i);
      area += t.area();
      six_volume += (t.v[0] - origin).dot((t.v[1] - origin).cross(t.v[2] - origin));
    }
    m.surface_area = area;
    m.volume = six_volume / 6.0;

    // Closed and consistently oriented: every directed edge occurs once and
    // its reverse occurs once.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(3 * triangle_count());
    for (const auto& t : data_->triangles) {
      for (int k = 0; k < 3; ++k) edges.emplace_back(t[k], t[(k + 1) % 3]);
    }
    std::sort(edges.begin(), edges.end());
    bool watertight = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
    for (std::size_t i = 0; watertight && i < edges.size(); ++i) {
      watertight = std::binary_search(edges.begin(), edges.end(),
                                      std::make_pair(edges[i].second, edges[i].first));
    }
    m.watertight = watertight;
    cache_->metrics = m;
  });
  return cache_->metrics;
}

const TriangleBvh& TriMesh::bvh() const {
  std::call_once(cache_->bvh_once, [this] {
    std::vector<Triangle> tris;
    tris.reserve(triangle_count());
    for (std::size_t i = 0; i < triangle_count(); ++i) tris.push_back(triangle(i));
    cache_->bvh = TriangleBvh(std::move(tris));
  });
  return cache_->bvh;
}

double TriMesh::boundary_epsilon() const {
  return data_->options.boundary_epsilon_rel * metrics().max_dimension;
}

TriMesh TriMesh::transformed(const Eigen::Matrix3d& linear, const Vec3& offset) const {
  std::vector<Vec3> v;
  v.reserve(vertex_count());
  for (const auto& p : vertices()) v.push_back(linear * p + offset);
  std::vector<TriangleIndices> t = triangles();
  if (linear.determinant() < 0.0) {
    for (auto& tri : t) std::swap(tri[1], tri[2]);
  }
  return TriMesh(std::move(v), std::move(t), options());
}

MeshMetrics compute_metrics(const TriMesh& mesh) { return mesh.metrics(); }

void require_watertight(const TriMesh& mesh, std::string_view what) {
  if (!mesh.metrics().watertight) {
    throw Error(ErrorCode::NotWatertight, std::string(what) + " requires a closed, consistently oriented mesh");
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  std::string_view next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

double parse_double(std::string_view tok, std::string_view context) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, std::string(context) + ": bad number '" + std::string(tok) + "'");
  }
  return value;
}

long long parse_int(std::string_view tok, std::string_view context) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError, std::string(context) + ": bad integer '" + std::string(tok) + "'");
  }
  return value;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

void expect(Tokens& tokens, std::string_view word) {
  const auto tok = tokens.next();
  if (!iequals(tok, word)) {
    throw Error(ErrorCode::ParseError,
                "ASCII STL: expected '" + std::string(word) + "', got '" + std::string(tok) + "'");
  }
}

TriMesh parse_stl_ascii(std::string_view text, const MeshOptions& options) {
  Tokens tokens(text);
  std::vector<Vec3> vertices;
  std::vector<TriangleIndices> triangles;
  if (!iequals(tokens.next(), "solid")) throw Error(ErrorCode::ParseError, "ASCII STL: missing 'solid'");
  for (auto tok = tokens.next(); !tok.empty(); tok = tokens.next()) {
    if (iequals(tok, "facet")) {
      expect(tokens, "normal");
      for (int i = 0; i < 3; ++i) parse_double(tokens.next(), "ASCII STL normal");
      expect(tokens, "outer");
      expect(tokens, "loop");
      TriangleIndices tri{};
      for (int k = 0; k < 3; ++k) {
        expect(tokens, "vertex");
        Vec3 p;
        for (int i = 0; i < 3; ++i) p[i] = parse_double(tokens.next(), "ASCII STL vertex");
        tri[k] = static_cast<std::uint32_t>(vertices.size());
        vertices.push_back(p);
      }
      expect(tokens, "endloop");
      expect(tokens, "endfacet");
      triangles.push_back(tri);
    }
    // 'solid'/'endsolid' and their names are skipped.
  }
  return TriMesh(std::move(vertices), std::move(triangles), options);
}

TriMesh parse_stl_binary(std::string_view bytes, const MeshOptions& options) {
  if (bytes.size() < 84) throw Error(ErrorCode::ParseError, "binary STL: truncated header");
  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + 80, 4);
  if constexpr (std::endian::native == std::endian::big) count = __builtin_bswap32(count);
  const std::uint64_t needed = 84ULL + 50ULL * count;
  if (bytes.size() < needed) {
    throw Error(ErrorCode::ParseError, "binary STL: header declares " + std::to_string(count) +
                                           " triangles but file is truncated");
  }
  std::vector<Vec3> vertices;
  std::vector<TriangleIndices> triangles;
  vertices.reserve(3ULL * count);
  triangles.reserve(count);
  for (std::uint32_t f = 0; f < count; ++f) {
    const char* rec = bytes.data() + 84 + 50ULL * f;
    TriangleIndices tri{};
    for (int k = 0; k < 3; ++k) {
      float xyz[3];
      std::memcpy(xyz, rec + 12 + 12 * k, 12);
      if constexpr (std::endian::native == std::endian::big) {
        for (float& c : xyz) c = std::bit_cast<float>(__builtin_bswap32(std::bit_cast<std::uint32_t>(c)));
      }
      tri[k] = static_cast<std::uint32_t>(vertices.size());
      vertices.emplace_back(xyz[0], xyz[1], xyz[2]);
      if (!vertices.back().allFinite()) throw Error(ErrorCode::ParseError, "binary STL: non-finite vertex");
    }
    triangles.push_back(tri);
  }
  return TriMesh(std::move(vertices), std::move(triangles), options);
}

TriMesh parse_off(std::string_view text, const MeshOptions& options) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "OFF: empty file");

  std::size_t li = 0;
  Tokens header(lines[li++]);
  if (header.next() != "OFF") throw Error(ErrorCode::ParseError, "OFF: missing header");
  auto first = header.next();
  if (first.empty()) {
    if (li >= lines.size()) throw Error(ErrorCode::ParseError, "OFF: missing counts");
    header = Tokens(lines[li++]);
    first = header.next();
  }
  const long long nv = parse_int(first, "OFF counts");
  const long long nf = parse_int(header.next(), "OFF counts");
  if (nv < 0 || nf < 0) throw Error(ErrorCode::ParseError, "OFF: negative counts");
  if (lines.size() < li + static_cast<std::size_t>(nv + nf)) throw Error(ErrorCode::ParseError, "OFF: truncated");

  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(nv));
  for (long long i = 0; i < nv; ++i) {
    Tokens t(lines[li++]);
    Vec3 p;
    for (int a = 0; a < 3; ++a) p[a] = parse_double(t.next(), "OFF vertex");
    vertices.push_back(p);
  }
  std::vector<TriangleIndices> triangles;
  for (long long f = 0; f < nf; ++f) {
    Tokens t(lines[li++]);
    const long long k = parse_int(t.next(), "OFF face");
    if (k < 3) throw Error(ErrorCode::ParseError, "OFF: face with fewer than 3 vertices");
    std::vector<std::uint32_t> poly;
    for (long long i = 0; i < k; ++i) {
      const long long idx = parse_int(t.next(), "OFF face");
      if (idx < 0 || idx >= nv) throw Error(ErrorCode::ParseError, "OFF: face index out of range");
      poly.push_back(static_cast<std::uint32_t>(idx));
    }
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) triangles.push_back({poly[0], poly[i], poly[i + 1]});
  }
  return TriMesh(std::move(vertices), std::move(triangles), options);
}

bool looks_binary_stl(std::string_view bytes) {
  if (bytes.size() < 84) return false;
  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + 80, 4);
  if constexpr (std::endian::native == std::endian::big) count = __builtin_bswap32(count);
  return bytes.size() == 84ULL + 50ULL * count;
}

bool starts_with_solid(std::string_view bytes) {
  const auto start = bytes.find_first_not_of(" \t\r\n");
  return start != std::string_view::npos && iequals(bytes.substr(start, 5), "solid");
}

}  // namespace

TriMesh parse_mesh(std::string_view bytes, MeshFormat format, const MeshOptions& options) {
  switch (format) {
    case MeshFormat::StlBinary: return parse_stl_binary(bytes, options);
    case MeshFormat::StlAscii: return parse_stl_ascii(bytes, options);
    case MeshFormat::Off: return parse_off(bytes, options);
    case MeshFormat::Auto: break;
  }
  if (looks_binary_stl(bytes)) return parse_stl_binary(bytes, options);
  if (starts_with_solid(bytes)) return parse_stl_ascii(bytes, options);
  return parse_stl_binary(bytes, options);
}

TriMesh load_mesh(const std::filesystem::path& path, MeshFormat format, const MeshOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  if (format == MeshFormat::Auto) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".off") format = MeshFormat::Off;
  }
  try {
    return parse_mesh(bytes, format, options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    throw;
  }
}

// ---------------------------------------------------------------------------
// Predicates

double point_triangle_distance(const Vec3& p, const Triangle& tri) {
  // Closest point by Voronoi region of the triangle (Ericson 5.1.5).
  const Vec3& a = tri.v[0];
  const Vec3& b = tri.v[1];
  const Vec3& c = tri.v[2];
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return (p - a).norm();
  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return (p - b).norm();
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return (p - (a + ab * (d1 / (d1 - d3)))).norm();
  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return (p - c).norm();
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return (p - (a + ac * (d2 / (d2 - d6)))).norm();
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    return (p - (b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6))))).norm();
  }
  const double denom = 1.0 / (va + vb + vc);
  return (p - (a + ab * (vb * denom) + ac * (vc * denom))).norm();
}

bool near_surface(const TriMesh& mesh, const Vec3& p, double distance) {
  const auto& bvh = mesh.bvh();
  const Box query{(p.array() - distance).matrix(), (p.array() + distance).matrix()};
  return bvh.visit_overlapping(query, [&](std::uint32_t t) {
    return point_triangle_distance(p, bvh.triangles()[t]) <= distance;
  });
}

namespace {

constexpr double kBaryTol = 1e-9;

struct RayHit {
  bool hit = false;
  bool degenerate = false;
};

RayHit intersect_ray(const Vec3& o, const Vec3& d, const Triangle& tri) {
  const Vec3 e1 = tri.v[1] - tri.v[0];
  const Vec3 e2 = tri.v[2] - tri.v[0];
  const Vec3 pvec = d.cross(e2);
  const double det = e1.dot(pvec);
  const Vec3 tvec = o - tri.v[0];
  if (std::abs(det) <= 1e-12 * e1.norm() * e2.norm() * d.norm()) {
    // Parallel: only a ray lying in the plane is ambiguous.
    const Vec3 n = e1.cross(e2);
    const bool in_plane = std::abs(n.dot(tvec)) <= 1e-12 * n.norm() * (tvec.norm() + 1.0);
    return {false, in_plane};
  }
  const double inv = 1.0 / det;
  const double u = tvec.dot(pvec) * inv;
  if (u < -kBaryTol || u > 1.0 + kBaryTol) return {};
  const Vec3 qvec = tvec.cross(e1);
  const double v = d.dot(qvec) * inv;
  if (v < -kBaryTol || u + v > 1.0 + kBaryTol) return {};
  const double t = e2.dot(qvec) * inv;
  if (t < 0.0) return {};
  const bool on_edge = u <= kBaryTol || v <= kBaryTol || u + v >= 1.0 - kBaryTol;
  return {true, on_edge};
}

const std::array<Vec3, 32>& ray_directions() {
  static const std::array<Vec3, 32> dirs = [] {
    std::array<Vec3, 32> out;
    std::mt19937_64 rng(0x0c7d5eedULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& d : out) {
      Vec3 v;
      do {
        v = Vec3(normal(rng), normal(rng), normal(rng));
      } while (v.norm() < 1e-3);
      d = v.normalized();
    }
    return out;
  }();
  return dirs;
}

}  // namespace

Location point_in_mesh(const TriMesh& mesh, const Vec3& p) {
  require_watertight(mesh, "point_in_mesh");
  if (near_surface(mesh, p, mesh.boundary_epsilon())) return Location::OnBoundary;

  const auto& bvh = mesh.bvh();
  bool inside = false;
  for (const Vec3& dir : ray_directions()) {
    int crossings = 0;
    const bool degenerate = bvh.visit_ray(p, dir, [&](std::uint32_t t) {
      const RayHit h = intersect_ray(p, dir, bvh.triangles()[t]);
      if (h.degenerate) return true;
      crossings += h.hit ? 1 : 0;
      return false;
    });
    inside = (crossings % 2) == 1;
    if (!degenerate) break;
  }
  return inside ? Location::Inside : Location::Outside;
}

bool ray_hits_any(const TriMesh& mesh, const Vec3& origin, const Vec3& dir) {
  const auto& bvh = mesh.bvh();
  return bvh.visit_ray(origin, dir, [&](std::uint32_t t) {
    // A ray sliding inside a triangle's plane does not pass through it.
    return intersect_ray(origin, dir, bvh.triangles()[t]).hit;
  });
}

bool triangle_box_intersect(const Triangle& tri, const Box& box, BoxClosure closure) {
  const bool open = closure == BoxClosure::Open;
  auto separated = [open](double tmin, double tmax, double bmin, double bmax) {
    return open ? (tmax <= bmin || tmin >= bmax) : (tmax < bmin || tmin > bmax);
  };

  // Box face normals, compared on raw coordinates so that faces lying
  // exactly on a box face are classified without rounding.
  for (int a = 0; a < 3; ++a) {
    const double tmin = std::min({tri.v[0][a], tri.v[1][a], tri.v[2][a]});
    const double tmax = std::max({tri.v[0][a], tri.v[1][a], tri.v[2][a]});
    if (separated(tmin, tmax, box.lo[a], box.hi[a])) return false;
  }

  const Vec3 c = box.center();
  const Vec3 h = 0.5 * box.extent();
  const std::array<Vec3, 3> w{tri.v[0] - c, tri.v[1] - c, tri.v[2] - c};
  auto separated_on = [&](const Vec3& axis) {
    if (axis.squaredNorm() < 1e-300) return false;
    const double p0 = axis.dot(w[0]), p1 = axis.dot(w[1]), p2 = axis.dot(w[2]);
    const double r = h.x() * std::abs(axis.x()) + h.y() * std::abs(axis.y()) + h.z() * std::abs(axis.z());
    return separated(std::min({p0, p1, p2}), std::max({p0, p1, p2}), -r, r);
  };

  if (separated_on((w[1] - w[0]).cross(w[2] - w[0]))) return false;

  const std::array<Vec3, 3> edges{w[1] - w[0], w[2] - w[1], w[0] - w[2]};
  for (const Vec3& e : edges) {
    for (int a = 0; a < 3; ++a) {
      if (separated_on(e.cross(Vec3::Unit(a)))) return false;
    }
  }
  return true;
}

}  // namespace octodfm
