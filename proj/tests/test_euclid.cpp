#include <doctest.h>

#include <cmath>
#include <map>

#include "rctree/euclid.hpp"
#include "rctree/metric.hpp"
#include "support.hpp"

using namespace rctree;
using namespace testsupport;

namespace {

PointSet grid_line(int n) {
  PointSet ps;
  ps.dim = 1;
  for (int i = 0; i < n; ++i) ps.points.push_back({static_cast<double>(i)});
  return ps;
}

double brute_path_cost(const PointSet& ps, const SpanningTree& t) {
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(t.n));
  for (const TreeEdge& e : t.edges) {
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.length);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.length);
  }
  double acc = 0.0;
  std::vector<double> dist(static_cast<size_t>(t.n));
  for (int u = 0; u < t.n; ++u) {
    std::fill(dist.begin(), dist.end(), -1.0);
    dist[static_cast<size_t>(u)] = 0.0;
    std::vector<int> stack{u};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, len] : adj[static_cast<size_t>(x)])
        if (dist[static_cast<size_t>(y)] < 0.0) {
          dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + len;
          stack.push_back(y);
        }
    }
    for (int v = u + 1; v < t.n; ++v) acc += dist[static_cast<size_t>(v)];
  }
  (void)ps;
  return acc;
}

}  // namespace

TEST_SUITE("euclid") {

TEST_CASE("trivial point sets") {
  PointSet one;
  one.dim = 2;
  one.points = {{0.0, 0.0}};
  const EuclidBuild b = build_spanning_tree(one);
  CHECK(b.tree.edges.empty());
  CHECK(b.tree.root == 0);
  const EuclidReport rep = verify_euclidean(one, b.tree);
  CHECK(rep.stretch == 1.0);
  CHECK(rep.max_path == 0.0);

  PointSet two;
  two.dim = 2;
  two.points = {{0.0, 0.0}, {1.0, 0.0}};
  const EuclidBuild b2 = build_spanning_tree(two);
  REQUIRE(b2.tree.edges.size() == 1);
  CHECK(b2.tree.edges[0].length == 1.0);
  const EuclidReport rep2 = verify_euclidean(two, b2.tree);
  CHECK(rep2.stretch == 1.0);
  CHECK(rep2.max_path == 1.0);
  CHECK(rep2.dominance_ok);
}

TEST_CASE("alpha must leave a band to cut in") {
  const PointSet ps = grid_line(4);
  for (const double bad : {0.0, 0.5, -1.0, 0.75, std::nan("")})
    CHECK(message_has(
        thrown_message<std::invalid_argument>([&] { build_spanning_tree(ps, bad); }),
        "BadAlpha"));
}

TEST_CASE("collinear points cut inside the central band") {
  const PointSet ps = grid_line(16);
  const EuclidBuild b = build_spanning_tree(ps, 0.25);
  CHECK(b.tree.edges.size() == 15);
  for (const CutPlane& c : b.cuts) {
    CHECK(c.band_hi - c.band_lo == doctest::Approx(0.5 * c.box_longest).epsilon(1e-12));
    CHECK(c.position > c.band_lo);
    CHECK(c.position <= c.band_hi);
    CHECK(c.ratio <= kDelta0 + 1e-9);
    CHECK(c.left_count >= 1);
  }
  const EuclidReport rep = verify_euclidean(ps, b.tree, 0.25, b.cuts);
  CHECK(rep.dominance_ok);
  CHECK(rep.stretch_ok);
  CHECK(rep.path_ok);
  CHECK(rep.cut_bound_ok);
  CHECK(rep.stretch < rep.stretch_bound);
}

TEST_CASE("coincident points chain with zero-length edges") {
  PointSet ps;
  ps.dim = 2;
  ps.points = {{1, 1}, {1, 1}, {1, 1}, {1, 1}};
  const EuclidBuild b = build_spanning_tree(ps);
  REQUIRE(b.tree.edges.size() == 3);
  for (const TreeEdge& e : b.tree.edges) CHECK(e.length == 0.0);
  CHECK(b.tree.root == 0);
  const EuclidReport rep = verify_euclidean(ps, b.tree);
  CHECK(rep.stretch == 1.0);  // 0/0 read as 1
  CHECK(rep.dominance_ok);
  CHECK(rep.path_ok);

  PointSet mixed;
  mixed.dim = 2;
  mixed.points = {{0, 0}, {5, 0}, {0, 0}, {5, 0}, {0, 0}};
  const EuclidBuild bm = build_spanning_tree(mixed);
  CHECK(bm.tree.edges.size() == 4);
  const EuclidReport rm = verify_euclidean(mixed, bm.tree);
  CHECK(rm.dominance_ok);
  CHECK(rm.stretch_ok);
}

TEST_CASE("edge-contribution cost matches the all-pairs oracle") {
  SpanningTree single;
  single.n = 2;
  single.root = 0;
  single.edges = {TreeEdge{0, 1, 5.0}};
  CHECK(spanning_tree_routing_cost(single) == 5.0);

  SpanningTree path;
  path.n = 3;
  path.root = 0;
  path.edges = {TreeEdge{0, 1, 1.0}, TreeEdge{1, 2, 1.0}};
  CHECK(spanning_tree_routing_cost(path) == 4.0);

  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    const PointSet ps = random_points(rng, uniform_int(rng, 2, 64), uniform_int(rng, 1, 3));
    const EuclidBuild b = build_spanning_tree(ps);
    const double fast = spanning_tree_routing_cost(b.tree);
    const double slow = brute_path_cost(ps, b.tree);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
  }
}

TEST_CASE("random point sets satisfy both bounds") {
  Rng rng(89);
  for (int dim = 1; dim <= 3; ++dim)
    for (int t = 0; t < 8; ++t) {
      const PointSet ps = random_points(rng, 96, dim);
      const EuclidBuild b = build_spanning_tree(ps);
      CHECK(b.tree.edges.size() == 95);
      const EuclidReport rep = verify_euclidean(ps, b.tree, 0.25, b.cuts);
      CHECK(rep.dominance_ok);
      CHECK(rep.stretch_ok);
      CHECK(rep.path_ok);
      CHECK(rep.cut_bound_ok);
    }
}

TEST_CASE("boxes shrink along every branch") {
  Rng rng(97);
  for (int dim = 1; dim <= 3; ++dim) {
    const PointSet ps = random_points(rng, 200, dim);
    const double alpha = 0.25;
    const EuclidBuild b = build_spanning_tree(ps, alpha);

    // Cuts come out in preorder, so the nearest earlier cut one level up
    // is the parent. Walk d ancestors and compare box sizes.
    std::vector<int> parent(b.cuts.size(), -1);
    std::vector<int> last_at_depth;
    for (size_t i = 0; i < b.cuts.size(); ++i) {
      const int d = b.cuts[i].depth;
      if (static_cast<size_t>(d) >= last_at_depth.size()) last_at_depth.resize(static_cast<size_t>(d) + 1, -1);
      parent[i] = d > 0 ? last_at_depth[static_cast<size_t>(d - 1)] : -1;
      last_at_depth[static_cast<size_t>(d)] = static_cast<int>(i);
    }
    for (size_t i = 0; i < b.cuts.size(); ++i) {
      int up = static_cast<int>(i);
      for (int step = 0; step < dim && up >= 0; ++step) up = parent[static_cast<size_t>(up)];
      if (up < 0) continue;
      CHECK(b.cuts[i].box_longest <=
            (1.0 - alpha) * b.cuts[static_cast<size_t>(up)].box_longest * (1 + 1e-9));
    }
  }
}

TEST_CASE("rebuilding is deterministic and axis order does not matter") {
  Rng rng(101);
  const PointSet ps = random_points(rng, 80, 3);
  const EuclidBuild a = build_spanning_tree(ps);
  const EuclidBuild b = build_spanning_tree(ps);
  REQUIRE(a.tree.edges.size() == b.tree.edges.size());
  for (size_t i = 0; i < a.tree.edges.size(); ++i) {
    CHECK(a.tree.edges[i].u == b.tree.edges[i].u);
    CHECK(a.tree.edges[i].v == b.tree.edges[i].v);
  }

  PointSet swapped;
  swapped.dim = 3;
  for (const auto& p : ps.points) swapped.points.push_back({p[2], p[0], p[1]});
  const EuclidBuild c = build_spanning_tree(swapped);
  REQUIRE(c.tree.edges.size() == a.tree.edges.size());
  for (size_t i = 0; i < a.tree.edges.size(); ++i) {
    CHECK(a.tree.edges[i].u == c.tree.edges[i].u);
    CHECK(a.tree.edges[i].v == c.tree.edges[i].v);
  }
  CHECK(verify_euclidean(swapped, c.tree).stretch ==
        doctest::Approx(verify_euclidean(ps, a.tree).stretch).epsilon(1e-12));
}

TEST_CASE("broken trees are rejected") {
  const PointSet ps = grid_line(5);
  const SpanningTree good = euclidean_spanning_tree(ps);

  SpanningTree missing = good;
  missing.edges.pop_back();
  CHECK(message_has(
      thrown_message<std::invalid_argument>([&] { verify_euclidean(ps, missing); }),
      "NotSpanning"));

  SpanningTree shrunk = good;
  shrunk.edges[0].length *= 0.5;
  CHECK(message_has(
      thrown_message<std::invalid_argument>([&] { verify_euclidean(ps, shrunk); }),
      "NotSpanning"));

  SpanningTree cyclic = good;
  cyclic.edges[0] = cyclic.edges[1];
  CHECK(message_has(
      thrown_message<std::invalid_argument>([&] { verify_euclidean(ps, cyclic); }),
      "NotSpanning"));
}

}  // TEST_SUITE
