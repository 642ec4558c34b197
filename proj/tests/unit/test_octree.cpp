#include "fixtures.hpp"
#include "oracles.hpp"

#include "octodfm/octree.hpp"

#include <doctest.h>

#include "expect_error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace octodfm;
using octodfm::testing::code_of;
namespace fx = octodfm::fixtures;

namespace {

// Unit cube plus a small cube near (2,2,2): with margin 0 the root is
// [0,2]^3 and the unit cube fills octant 0 exactly.
TriMesh cube_and_speck() {
  return fx::grid_solid({0, 1, 1.9, 2}, {0, 1, 1.9, 2}, {0, 1, 1.9, 2},
                        [](int i, int j, int k) { return (i == 0 && j == 0 && k == 0) || (i == 2 && j == 2 && k == 2); });
}

std::uint64_t spread_bits(std::uint64_t v) {
  std::uint64_t out = 0;
  for (int b = 0; b < 21; ++b) out |= ((v >> b) & 1ULL) << (3 * b);
  return out;
}

std::vector<std::tuple<int, OctantClass, double>> leaf_summary(const Octree& t) {
  std::vector<std::tuple<int, OctantClass, double>> out;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const auto& l = t.leaf(i);
    out.emplace_back(l.depth, l.cls, l.box.lo.x() + 3 * l.box.lo.y() + 7 * l.box.lo.z());
  }
  return out;
}

double grey_box_volume(const Octree& t) {
  double v = 0;
  for (std::size_t i : t.grey_leaves()) v += t.leaf(i).box.volume();
  return v;
}

}  // namespace

TEST_SUITE("octree") {

TEST_CASE("classification of boxes against a unit cube") {
  const TriMesh cube = fx::box(Vec3::Zero(), Vec3::Ones());
  CHECK(classify_box(cube, {Vec3::Constant(0.25), Vec3::Constant(0.75)}) == OctantClass::Black);
  CHECK(classify_box(cube, {Vec3::Constant(2), Vec3::Constant(3)}) == OctantClass::White);
  CHECK(classify_box(cube, {Vec3::Constant(0.5), Vec3::Constant(1.5)}) == OctantClass::Grey);
  // Touching only along a face: decided by the center.
  CHECK(classify_box(cube, {Vec3(1, 0, 0), Vec3(2, 1, 1)}) == OctantClass::White);
  CHECK(classify_box(cube, {Vec3::Zero(), Vec3::Ones()}) == OctantClass::Black);
}

TEST_CASE("root box is a cube around the bbox with the margin on each side") {
  const TriMesh bar = fx::box(Vec3(0, 0, 0), Vec3(10, 4, 2));
  const Box root = octree_root_box(bar.metrics(), 0.1);
  const Vec3 e = root.extent();
  CHECK(e.x() == doctest::Approx(12));
  CHECK(e.y() == doctest::Approx(12));
  CHECK(e.z() == doctest::Approx(12));
  CHECK(root.center().x() == doctest::Approx(5));
  CHECK(root.center().y() == doctest::Approx(2));
  CHECK(root.center().z() == doctest::Approx(1));
}

TEST_CASE("cube filling the lower octant gives one black octant") {
  OctreeOptions opt;
  opt.max_depth = 1;
  opt.margin = 0;
  const Octree t = build_octree(cube_and_speck(), opt);
  REQUIRE(t.leaves().size() == 8);
  CHECK(t.leaf(0).cls == OctantClass::Black);
  CHECK(t.leaf(0).part_volume == doctest::Approx(1.0));
  CHECK(t.leaf(7).cls == OctantClass::Grey);
  for (int k = 1; k < 7; ++k) {
    CHECK(t.leaf(k).cls == OctantClass::White);
    CHECK(t.leaf(k).part_volume == 0.0);
  }
}

TEST_CASE("inscribed sphere at depth 1 gives 8 grey octants") {
  OctreeOptions opt;
  opt.max_depth = 1;
  opt.margin = 0;
  const Octree t = build_octree(fx::icosphere(1.0, 3), opt);
  REQUIRE(t.leaves().size() == 8);
  CHECK(t.grey_leaves().size() == 8);
}

TEST_CASE("a mesh equal to its root box is a single black leaf") {
  OctreeOptions opt;
  opt.max_depth = 3;
  opt.margin = 0;
  const TriMesh cube = fx::box(Vec3::Zero(), Vec3::Ones());
  const Octree t = build_octree(cube, opt);
  REQUIRE(t.leaves().size() == 1);
  CHECK(t.leaf(0).cls == OctantClass::Black);
  CHECK(t.total_part_volume() == doctest::Approx(1.0));
  // Nothing to refine.
  const Octree r = refine(t, cube);
  CHECK(leaf_summary(r) == leaf_summary(t));
}

TEST_CASE("children tile their parent and only non-terminal grey nodes have children") {
  OctreeOptions opt;
  opt.max_depth = 4;
  const Octree t = build_octree(fx::torus(10, 3, 24, 12), opt);
  for (const auto& n : t.nodes()) {
    const bool expect_children = n.cls == OctantClass::Grey && n.depth < opt.max_depth;
    CHECK(n.is_leaf() == !expect_children);
    if (n.is_leaf()) continue;
    const Vec3 mid = n.box.center();
    for (unsigned k = 0; k < 8; ++k) {
      const Box& c = t.nodes()[n.first_child + k].box;
      CHECK(t.nodes()[n.first_child + k].depth == n.depth + 1);
      for (int a = 0; a < 3; ++a) {
        const bool upper = (k >> a) & 1U;
        CHECK(c.lo[a] == (upper ? mid[a] : n.box.lo[a]));
        CHECK(c.hi[a] == (upper ? n.box.hi[a] : mid[a]));
      }
    }
  }
}

TEST_CASE("leaves come out in Morton order") {
  OctreeOptions opt;
  opt.max_depth = 5;
  const Octree t = build_octree(fx::torus(10, 3, 24, 12), opt);
  const Box root = t.root_box();
  const double cell = root.extent().x() / std::ldexp(1.0, opt.max_depth);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const Vec3 lo = t.leaf(i).box.lo;
    std::uint64_t key = 0;
    for (int a = 0; a < 3; ++a) {
      const auto c = static_cast<std::uint64_t>(std::llround((lo[a] - root.lo[a]) / cell));
      key |= spread_bits(c) << a;
    }
    if (i > 0) CHECK(key > prev);
    prev = key;
  }
}

TEST_CASE("leaf volumes by class") {
  OctreeOptions opt;
  opt.max_depth = 4;
  const Octree t = build_octree(fx::icosphere(10, 3), opt);
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const auto& l = t.leaf(i);
    switch (l.cls) {
      case OctantClass::Black: CHECK(l.part_volume == l.box.volume()); break;
      case OctantClass::White: CHECK(l.part_volume == 0.0); break;
      case OctantClass::Grey:
        CHECK(l.part_volume >= 0.0);
        CHECK(l.part_volume <= l.box.volume());
        break;
    }
  }
}

TEST_CASE("half a cube in a box is half the box volume") {
  const TriMesh cube = fx::box(Vec3::Zero(), Vec3::Ones());
  const Box box{Vec3(0.5, 0, 0), Vec3(1.5, 1, 1)};
  CHECK(estimate_part_volume(cube, box, 8) == doctest::Approx(0.5).epsilon(0.1));
  CHECK(estimate_part_volume(cube, {Vec3::Constant(0.2), Vec3::Constant(0.4)}, 4) ==
        doctest::Approx(0.008));
  CHECK(code_of([&] { estimate_part_volume(cube, box, 1); }) == ErrorCode::ConfigError);
}

TEST_CASE("volume is conserved on an axis-aligned pocket block") {
  const TriMesh m = fx::pocket_block({});
  OctreeOptions opt;
  opt.max_depth = 5;
  const Octree t = build_octree(m, opt);
  CHECK(t.total_part_volume() == doctest::Approx(m.metrics().volume).epsilon(0.02));
}

TEST_CASE("grey volume shrinks as depth grows") {
  const TriMesh s = fx::icosphere(10, 3);
  OctreeOptions opt;
  opt.max_depth = 1;
  Octree t = build_octree(s, opt);
  double prev = grey_box_volume(t);
  for (int d = 2; d <= 5; ++d) {
    t = refine(t, s);
    const double g = grey_box_volume(t);
    CHECK(g <= prev);
    prev = g;
  }
}

TEST_CASE("grey leaf count grows by a factor between 4 and 8 per level on a sphere") {
  const TriMesh s = fx::icosphere(10, 4);
  OctreeOptions opt;
  opt.max_depth = 4;
  const Octree a = build_octree(s, opt);
  const Octree b = refine(a, s);
  const double ratio = static_cast<double>(b.grey_leaves().size()) / static_cast<double>(a.grey_leaves().size());
  CHECK(ratio >= 4.0);
  CHECK(ratio <= 8.0);
}

TEST_CASE("refine equals a build one level deeper") {
  const TriMesh m = fx::torus(10, 3, 24, 12);
  OctreeOptions opt;
  opt.max_depth = 3;
  const Octree a = refine(build_octree(m, opt), m);
  opt.max_depth = 4;
  const Octree b = build_octree(m, opt);
  CHECK(a.fingerprint() == b.fingerprint());
}

TEST_CASE("results do not depend on worker count or repetition") {
  const TriMesh m = fx::torus(10, 3, 24, 12);
  OctreeOptions opt;
  opt.max_depth = 4;
  opt.workers = 1;
  const auto one = build_octree(m, opt).fingerprint();
  opt.workers = 4;
  const auto four = build_octree(m, opt).fingerprint();
  const auto again = build_octree(m, opt).fingerprint();
  CHECK(one == four);
  CHECK(four == again);
  CHECK(one.hash.size() == 16);
}

TEST_CASE("locate finds the containing leaf") {
  const TriMesh m = fx::icosphere(10, 3);
  const Octree t = build_octree(m, {});
  for (const Vec3& p : {Vec3(0, 0, 0), Vec3(9.9, 0, 0), Vec3(-3, 4, 5), Vec3(10.05, 0, 0)}) {
    const std::size_t i = t.locate(p);
    REQUIRE(i != Octree::npos);
    CHECK(t.leaf(i).box.contains(p));
  }
  CHECK(t.locate(Vec3(100, 0, 0)) == Octree::npos);
}

TEST_CASE("JSONL dump has one record per leaf") {
  OctreeOptions opt;
  opt.max_depth = 2;
  const Octree t = build_octree(fx::icosphere(10, 2), opt);
  std::ostringstream out;
  t.dump_jsonl(out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t i = 0;
  double volume = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    REQUIRE(i < t.leaves().size());
    CHECK(j.at("depth").get<int>() == t.leaf(i).depth);
    CHECK(j.at("class").get<std::string>() == to_string(t.leaf(i).cls));
    CHECK(j.at("min").size() == 3);
    volume += j.at("part_volume").get<double>();
    ++i;
  }
  CHECK(i == t.leaves().size());
  CHECK(volume == doctest::Approx(t.total_part_volume()));
}

TEST_CASE("invalid inputs") {
  const TriMesh cube = fx::box(Vec3::Zero(), Vec3::Ones());
  OctreeOptions opt;
  opt.max_depth = 0;
  CHECK(code_of([&] { build_octree(cube, opt); }) == ErrorCode::DepthOutOfRange);
  opt.max_depth = 11;
  CHECK(code_of([&] { build_octree(cube, opt); }) == ErrorCode::DepthOutOfRange);
  opt.max_depth = 3;
  opt.samples = 1;
  CHECK(code_of([&] { build_octree(cube, opt); }) == ErrorCode::ConfigError);

  const TriMesh open(std::vector<Vec3>{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)},
                     std::vector<TriangleIndices>{{0, 1, 2}});
  CHECK(code_of([&] { build_octree(open, {}); }) == ErrorCode::NotWatertight);

  opt.samples = 4;
  opt.margin = 0.01;
  const Octree t = build_octree(cube, opt);
  CHECK(code_of([&] { refine(t, fx::box(Vec3::Zero(), Vec3::Constant(2))); }) == ErrorCode::MeshMismatch);
  // A root that coincides with the cube is one black leaf, so depth 10 is cheap.
  opt.max_depth = 10;
  opt.margin = 0;
  const Octree deep = build_octree(cube, opt);
  CHECK(code_of([&] { refine(deep, cube); }) == ErrorCode::DepthOutOfRange);
}

}  // TEST_SUITE
