#include "rctree/hst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rctree/cut.hpp"

namespace rctree {

int scale_exponent(const Metric& m) {
  if (m.n <= 1) return 0;
  const double diam = diameter(m, Subset::full(m.n));
  int e = std::max(0, static_cast<int>(std::ceil(std::log2(diam))));
  while (e > 0 && std::ldexp(1.0, e - 1) >= diam) --e;
  while (std::ldexp(1.0, e) < diam) ++e;
  return e;
}

namespace {

struct SplitOutcome {
  CutRecord record;
  Subset left;
  Subset right;
};

// One cut step: center attaining the diameter (smallest index on ties),
// centripetal sort, optimal 1-D cut, split at the chosen index.
SplitOutcome split_cluster(const Metric& m, const Subset& cluster) {
  double diam = 0.0;
  int center = cluster.indices.front();
  for (int p : cluster.indices) {
    double ecc = 0.0;
    for (int q : cluster.indices) ecc = std::max(ecc, m(p, q));
    if (ecc > diam) {
      diam = ecc;
      center = p;
    }
  }

  const CentripetalValues cv = centripetal_values(m, cluster, center);
  const CutResult cut = optimal_cut(cv.values);

  SplitOutcome so;
  so.left = Subset::of({cv.order.begin(), cv.order.begin() + cut.k}, m.n);
  so.right = Subset::of({cv.order.begin() + cut.k, cv.order.end()}, m.n);
  so.record.cluster = cluster;
  so.record.center = center;
  so.record.left = so.left;
  so.record.right = so.right;
  so.record.cluster_diameter = diam;
  so.record.cross_cost_original = cross_cost(m, so.left, so.right);
  so.record.ratio = static_cast<double>(so.left.size()) * so.right.size() * diam /
                    so.record.cross_cost_original;
  so.record.centripetal_ratio = cut.ratio;
  return so;
}

}  // namespace

Decomposition hierarchical_decompose(const Metric& m) {
  Decomposition dec;
  const int n = m.n;
  if (n == 0) {
    dec.levels.emplace_back();
    return dec;
  }
  if (n == 1) {
    dec.levels.push_back({Subset::full(1)});
    return dec;
  }

  dec.delta = scale_exponent(m);
  dec.levels.assign(static_cast<size_t>(dec.delta) + 1, {});
  dec.levels[static_cast<size_t>(dec.delta)] = {Subset::full(n)};

  for (int i = dec.delta - 1; i >= 0; --i) {
    const double threshold = std::ldexp(1.0, i);
    std::vector<Subset> fragments;
    for (const Subset& c : dec.levels[static_cast<size_t>(i) + 1]) {
      std::vector<Subset> stack{c};
      while (!stack.empty()) {
        Subset q = std::move(stack.back());
        stack.pop_back();
        if (q.size() == 1 || diameter(m, q) < threshold) {
          fragments.push_back(std::move(q));
          continue;
        }
        SplitOutcome so = split_cluster(m, q);
        dec.cuts.push_back(std::move(so.record));
        stack.push_back(std::move(so.right));
        stack.push_back(std::move(so.left));  // processed first
      }
    }
    std::sort(fragments.begin(), fragments.end(),
              [](const Subset& a, const Subset& b) { return a.indices[0] < b.indices[0]; });
    dec.levels[static_cast<size_t>(i)] = std::move(fragments);
  }

  dec.parent.assign(static_cast<size_t>(dec.delta), {});
  for (int i = 0; i < dec.delta; ++i) {
    const auto& upper = dec.levels[static_cast<size_t>(i) + 1];
    std::vector<int> where(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < upper.size(); ++c)
      for (int p : upper[c].indices) where[static_cast<size_t>(p)] = static_cast<int>(c);
    auto& links = dec.parent[static_cast<size_t>(i)];
    for (const Subset& s : dec.levels[static_cast<size_t>(i)])
      links.push_back(where[static_cast<size_t>(s.indices[0])]);
  }
  return dec;
}

WeightedTree build_hst(const Decomposition& dec) {
  WeightedTree t;
  t.kind = TreeKind::Hst;
  if (dec.levels.empty() || dec.levels[0].empty()) return t;

  int n = 0;
  for (const Subset& s : dec.levels[0]) n += s.size();
  t.leaf_of_point.assign(static_cast<size_t>(n), -1);

  TreeNode top;
  top.level = dec.delta;
  t.nodes.push_back(std::move(top));
  t.root = 0;
  std::vector<int> active{0};  // node id per cluster position at the current level

  for (int i = dec.delta - 1; i >= 0; --i) {
    const auto& level = dec.levels[static_cast<size_t>(i)];
    const auto& upper = dec.levels[static_cast<size_t>(i) + 1];
    std::vector<int> next(level.size());
    for (size_t c = 0; c < level.size(); ++c) {
      const int pp = dec.parent[static_cast<size_t>(i)][c];
      if (level[c].size() == upper[static_cast<size_t>(pp)].size()) {
        next[c] = active[static_cast<size_t>(pp)];  // unchanged cluster, same node
      } else {
        const int id = static_cast<int>(t.nodes.size());
        TreeNode nd;
        nd.parent = active[static_cast<size_t>(pp)];
        nd.level = i;
        nd.edge_length = std::ldexp(1.0, i);
        t.nodes.push_back(std::move(nd));
        t.nodes[static_cast<size_t>(active[static_cast<size_t>(pp)])].children.push_back(id);
        next[c] = id;
      }
    }
    active = std::move(next);
  }

  for (size_t c = 0; c < dec.levels[0].size(); ++c) {
    const int p = dec.levels[0][c].indices[0];
    const int id = active[c];
    t.nodes[static_cast<size_t>(id)].point = p;
    t.leaf_of_point[static_cast<size_t>(p)] = id;
  }
  return t;
}

UltrametricResult recursive_cut_tree(const Metric& m) {
  UltrametricResult res;
  res.tree.kind = TreeKind::Ultrametric;
  const int n = m.n;
  if (n == 0) return res;
  res.tree.leaf_of_point.assign(static_cast<size_t>(n), -1);

  struct Builder {
    const Metric& m;
    UltrametricResult& res;

    int build(const Subset& cluster, int parent) {
      const int id = static_cast<int>(res.tree.nodes.size());
      TreeNode nd;
      nd.parent = parent;
      res.tree.nodes.push_back(std::move(nd));
      if (cluster.size() == 1) {
        const int p = cluster.indices[0];
        res.tree.nodes[static_cast<size_t>(id)].point = p;
        res.tree.leaf_of_point[static_cast<size_t>(p)] = id;
        return id;
      }
      SplitOutcome so = split_cluster(m, cluster);
      res.tree.nodes[static_cast<size_t>(id)].label = so.record.cluster_diameter;
      res.cuts.push_back(std::move(so.record));
      const int l = build(so.left, id);
      const int r = build(so.right, id);
      res.tree.nodes[static_cast<size_t>(id)].children = {l, r};
      return id;
    }
  } builder{m, res};

  res.tree.root = builder.build(Subset::full(n), -1);
  return res;
}

double tree_distance(const WeightedTree& t, int u, int v) {
  const int n = static_cast<int>(t.leaf_of_point.size());
  const auto leaf = [&](int p) {
    if (p < 0 || p >= n || t.leaf_of_point[static_cast<size_t>(p)] < 0)
      throw std::out_of_range("UnknownLeaf: point " + std::to_string(p) +
                              " has no leaf in the tree");
    return t.leaf_of_point[static_cast<size_t>(p)];
  };
  int a = leaf(u);
  int b = leaf(v);
  if (u == v) return 0.0;

  const auto depth = [&](int x) {
    int d = 0;
    while (t.nodes[static_cast<size_t>(x)].parent >= 0) {
      x = t.nodes[static_cast<size_t>(x)].parent;
      ++d;
    }
    return d;
  };
  int da = depth(a);
  int db = depth(b);
  double acc = 0.0;
  while (da > db) {
    acc += t.nodes[static_cast<size_t>(a)].edge_length;
    a = t.nodes[static_cast<size_t>(a)].parent;
    --da;
  }
  while (db > da) {
    acc += t.nodes[static_cast<size_t>(b)].edge_length;
    b = t.nodes[static_cast<size_t>(b)].parent;
    --db;
  }
  while (a != b) {
    acc += t.nodes[static_cast<size_t>(a)].edge_length +
           t.nodes[static_cast<size_t>(b)].edge_length;
    a = t.nodes[static_cast<size_t>(a)].parent;
    b = t.nodes[static_cast<size_t>(b)].parent;
  }
  return t.kind == TreeKind::Ultrametric ? t.nodes[static_cast<size_t>(a)].label : acc;
}

double tree_routing_cost(const WeightedTree& t) {
  const size_t count = t.nodes.size();
  if (count == 0) return 0.0;
  const double n = static_cast<double>(t.leaf_of_point.size());

  // Parents precede children by construction, so one reverse sweep fills
  // the leaf counts.
  std::vector<double> leaves(count, 0.0);
  for (size_t id = count; id-- > 0;) {
    if (t.nodes[id].point >= 0) leaves[id] += 1.0;
    if (t.nodes[id].parent >= 0) leaves[static_cast<size_t>(t.nodes[id].parent)] += leaves[id];
  }

  double acc = 0.0;
  if (t.kind == TreeKind::Hst) {
    for (size_t id = 0; id < count; ++id)
      if (t.nodes[id].parent >= 0) acc += t.nodes[id].edge_length * leaves[id] * (n - leaves[id]);
  } else {
    for (size_t id = 0; id < count; ++id) {
      if (t.nodes[id].children.empty()) continue;
      double total = 0.0;
      double squares = 0.0;
      for (int c : t.nodes[id].children) {
        total += leaves[static_cast<size_t>(c)];
        squares += leaves[static_cast<size_t>(c)] * leaves[static_cast<size_t>(c)];
      }
      acc += t.nodes[id].label * (total * total - squares) / 2.0;
    }
  }
  return acc;
}

StretchReport verify(const Metric& m, const WeightedTree& t,
                     const std::vector<CutRecord>& cuts) {
  StretchReport rep;
  const int n = m.n;
  rep.source_cost = n > 0 ? routing_cost(m, Subset::full(n)) : 0.0;
  rep.tree_cost = tree_routing_cost(t);
  rep.stretch = rep.source_cost > 0.0 ? rep.tree_cost / rep.source_cost : 1.0;

  double worst_margin = std::numeric_limits<double>::infinity();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double d = m(u, v);
      const double dt = tree_distance(t, u, v);
      worst_margin = std::min(worst_margin, (dt - d) / d);
    }
  // Re-scan in index order so equally tight pairs yield a stable witness even
  // after tree lengths pass through serialization.
  for (int u = 0; u < n && rep.worst_pair.u < 0; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double d = m(u, v);
      const double dt = tree_distance(t, u, v);
      if ((dt - d) / d <= worst_margin + kRelTol) {
        rep.worst_pair = PairWitness{u, v, d, dt};
        break;
      }
    }
  rep.dominance_ok = worst_margin >= -kRelTol;

  rep.max_cut_ratio = 0.0;
  for (const CutRecord& c : cuts) rep.max_cut_ratio = std::max(rep.max_cut_ratio, c.ratio);
  rep.cut_ratio_bound = kDelta0;
  rep.cut_bound_ok = rep.max_cut_ratio <= kDelta0 + kRelTol;

  rep.stretch_bound = t.kind == TreeKind::Hst ? 4.0 * kDelta0 : kDelta0;
  rep.stretch_ok = rep.stretch <= rep.stretch_bound + 1e-6;
  return rep;
}

}  // namespace rctree
