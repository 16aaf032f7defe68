#include "rctree/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rctree/cut.hpp"

namespace rctree {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("BadAlpha: alpha must lie strictly between 0 and 1/2");
}

[[noreturn]] void not_spanning(const std::string& why) {
  throw std::invalid_argument("NotSpanning: " + why);
}

struct Builder {
  const PointSet& ps;
  double alpha;
  EuclidBuild& out;

  int build(std::vector<int> idx, int depth) {
    if (idx.size() == 1) return idx[0];

    const BoundingBox box = bounding_box(ps, idx);
    const double lmax = box.longest_side();
    if (lmax == 0.0) {
      // All points coincide; chain them by index.
      std::sort(idx.begin(), idx.end());
      for (size_t i = 0; i + 1 < idx.size(); ++i)
        out.tree.edges.push_back(TreeEdge{std::min(idx[i], idx[i + 1]),
                                          std::max(idx[i], idx[i + 1]), 0.0});
      return idx[0];
    }

    const int axis = box.longest_axis();
    std::vector<std::pair<double, int>> proj;
    proj.reserve(idx.size());
    for (int p : idx) proj.emplace_back(ps.points[static_cast<size_t>(p)][static_cast<size_t>(axis)], p);
    std::sort(proj.begin(), proj.end());

    const double a1 = proj.front().first;
    const double w = proj.back().first - a1;
    const double lo = a1 + alpha * w;
    const double hi = a1 + (1.0 - alpha) * w;

    std::vector<double> values;
    values.reserve(proj.size());
    for (const auto& [coord, p] : proj) values.push_back(coord);
    const CutResult cut = constrained_cut(values, lo, hi);

    out.cuts.push_back(CutPlane{axis, lo, hi, cut.position, cut.k, cut.ratio, lmax, depth});

    std::vector<int> left, right;
    left.reserve(static_cast<size_t>(cut.k));
    right.reserve(proj.size() - static_cast<size_t>(cut.k));
    for (size_t i = 0; i < proj.size(); ++i)
      (static_cast<int>(i) < cut.k ? left : right).push_back(proj[i].second);

    const int r1 = build(std::move(left), depth + 1);
    const int r2 = build(std::move(right), depth + 1);
    out.tree.edges.push_back(TreeEdge{std::min(r1, r2), std::max(r1, r2),
                                      euclidean_distance(ps, r1, r2)});
    return r1;
  }
};

std::vector<std::vector<std::pair<int, double>>> adjacency(const SpanningTree& t) {
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(t.n));
  for (const TreeEdge& e : t.edges) {
    if (e.u < 0 || e.u >= t.n || e.v < 0 || e.v >= t.n || e.u == e.v)
      not_spanning("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") has bad endpoints");
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.length);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.length);
  }
  return adj;
}

}  // namespace

EuclidBuild build_spanning_tree(const PointSet& ps, double alpha) {
  require_alpha(alpha);
  EuclidBuild out;
  const int n = ps.size();
  out.tree.n = n;
  if (n == 0) return out;

  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
  Builder b{ps, alpha, out};
  out.tree.root = b.build(std::move(all), 0);
  std::sort(out.tree.edges.begin(), out.tree.edges.end(),
            [](const TreeEdge& a, const TreeEdge& c) {
              return a.u != c.u ? a.u < c.u : a.v < c.v;
            });
  return out;
}

SpanningTree euclidean_spanning_tree(const PointSet& ps, double alpha) {
  return build_spanning_tree(ps, alpha).tree;
}

double spanning_tree_routing_cost(const SpanningTree& t) {
  const int n = t.n;
  if (n <= 1) return 0.0;
  if (static_cast<int>(t.edges.size()) != n - 1)
    not_spanning("expected " + std::to_string(n - 1) + " edges, got " +
                 std::to_string(t.edges.size()));
  const auto adj = adjacency(t);

  // Orient away from the root, then fold subtree sizes bottom-up.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<double> up_length(static_cast<size_t>(n), 0.0);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  order.push_back(t.root);
  seen[static_cast<size_t>(t.root)] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    for (const auto& [v, len] : adj[static_cast<size_t>(u)]) {
      if (seen[static_cast<size_t>(v)]) continue;
      seen[static_cast<size_t>(v)] = 1;
      parent[static_cast<size_t>(v)] = u;
      up_length[static_cast<size_t>(v)] = len;
      order.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) not_spanning("tree is not connected");

  std::vector<double> size(static_cast<size_t>(n), 1.0);
  double acc = 0.0;
  for (size_t i = order.size(); i-- > 1;) {
    const int v = order[i];
    acc += up_length[static_cast<size_t>(v)] * size[static_cast<size_t>(v)] *
           (n - size[static_cast<size_t>(v)]);
    size[static_cast<size_t>(parent[static_cast<size_t>(v)])] += size[static_cast<size_t>(v)];
  }
  return acc;
}

EuclidReport verify_euclidean(const PointSet& ps, const SpanningTree& t, double alpha,
                              const std::vector<CutPlane>& cuts) {
  require_alpha(alpha);
  EuclidReport rep;
  const int n = ps.size();
  if (t.n != n)
    not_spanning("tree covers " + std::to_string(t.n) + " points, input has " +
                 std::to_string(n));
  if (n == 0) return rep;
  if (static_cast<int>(t.edges.size()) != n - 1)
    not_spanning("expected " + std::to_string(n - 1) + " edges, got " +
                 std::to_string(t.edges.size()));
  if (t.root < 0 || t.root >= n) not_spanning("root out of range");

  const auto adj = adjacency(t);
  for (const TreeEdge& e : t.edges) {
    const double d = euclidean_distance(ps, e.u, e.v);
    if (std::abs(e.length - d) > kRelTol * d + 1e-12)
      not_spanning("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") length disagrees with the point distance");
  }

  rep.tree_cost = spanning_tree_routing_cost(t);  // also proves connectivity

  double source = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) source += euclidean_distance(ps, u, v);
  rep.source_cost = source;

  double worst_margin = std::numeric_limits<double>::infinity();
  double max_path = 0.0;
  std::vector<double> dist(static_cast<size_t>(n));
  std::vector<int> stack;
  const auto fill_path_lengths = [&](int u) {
    std::fill(dist.begin(), dist.end(), -1.0);
    dist[static_cast<size_t>(u)] = 0.0;
    stack.assign(1, u);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, len] : adj[static_cast<size_t>(x)]) {
        if (dist[static_cast<size_t>(y)] >= 0.0) continue;
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + len;
        stack.push_back(y);
      }
    }
  };
  const auto pair_margin = [&](int u, int v) {
    const double dt = dist[static_cast<size_t>(v)];
    const double d = euclidean_distance(ps, u, v);
    return d > 0.0 ? (dt - d) / d : (dt == 0.0 ? 0.0 : dt);
  };
  for (int u = 0; u < n; ++u) {
    fill_path_lengths(u);
    for (int v = u + 1; v < n; ++v) {
      max_path = std::max(max_path, dist[static_cast<size_t>(v)]);
      worst_margin = std::min(worst_margin, pair_margin(u, v));
    }
  }
  // Re-scan in index order so equally tight pairs yield a stable witness even
  // after tree lengths pass through serialization.
  for (int u = 0; u < n && rep.worst_pair.u < 0; ++u) {
    fill_path_lengths(u);
    for (int v = u + 1; v < n; ++v)
      if (pair_margin(u, v) <= worst_margin + kRelTol) {
        rep.worst_pair =
            PairWitness{u, v, euclidean_distance(ps, u, v), dist[static_cast<size_t>(v)]};
        break;
      }
  }
  rep.dominance_ok = n < 2 || worst_margin >= -kRelTol;
  rep.max_path = max_path;

  rep.stretch = rep.source_cost > 0.0 ? rep.tree_cost / rep.source_cost : 1.0;
  const double dim = ps.dim;
  const double geo = dim * std::sqrt(dim);
  rep.stretch_bound = 2.0 * kDelta0 / (alpha * (1.0 - 2.0 * alpha)) * geo;
  rep.stretch_ok = rep.stretch <= rep.stretch_bound + 1e-6;

  rep.box_longest = bounding_box(ps).longest_side();
  rep.path_bound = 2.0 / alpha * geo * rep.box_longest;
  rep.path_ok = rep.max_path <= rep.path_bound * (1.0 + kRelTol) + 1e-12;

  rep.cut_ratio_bound = kDelta0;
  for (const CutPlane& c : cuts) rep.max_cut_ratio = std::max(rep.max_cut_ratio, c.ratio);
  rep.cut_bound_ok = rep.max_cut_ratio <= kDelta0 + kRelTol;
  return rep;
}

}  // namespace rctree
