#pragma once

#include <vector>

#include "rctree/metric.hpp"

namespace rctree {

/// One binary split performed while decomposing a cluster. The score that
/// chose the split lives on the centripetal line; `ratio` re-measures it
/// against the crossing cost in the source metric, which is never smaller,
/// so ratio <= centripetal_ratio always.
struct CutRecord {
  Subset cluster;
  int center = -1;
  Subset left;
  Subset right;
  double cluster_diameter = 0.0;
  double cross_cost_original = 0.0;  // crossing cost of left|right in the source metric
  double ratio = 0.0;                // |left|*|right|*diameter / cross_cost_original
  double centripetal_ratio = 0.0;    // the 1-D cut score
};

struct Decomposition {
  int delta = 0;
  /// levels[i] is the partition at scale 2^i, i = 0..delta; levels[delta] = {V}.
  /// Clusters within a level are sorted by smallest member.
  std::vector<std::vector<Subset>> levels;
  std::vector<CutRecord> cuts;  // execution order
  /// parent[i][c] = position in levels[i+1] of the cluster containing
  /// levels[i][c]; defined for i < delta.
  std::vector<std::vector<int>> parent;
};

enum class TreeKind { Hst, Ultrametric };

struct TreeNode {
  int parent = -1;
  std::vector<int> children;
  int level = 0;             // scale level (meaningful for the HST flavor)
  double label = 0.0;        // ultrametric node label; 0 at leaves
  double edge_length = 0.0;  // to parent; 0 at the root
  int point = -1;            // leaf: source point index; -1 otherwise
};

struct WeightedTree {
  TreeKind kind = TreeKind::Hst;
  std::vector<TreeNode> nodes;
  int root = -1;
  std::vector<int> leaf_of_point;  // point index -> node id
};

struct PairWitness {
  int u = -1;
  int v = -1;
  double d = 0.0;
  double d_tree = 0.0;
};

struct StretchReport {
  double source_cost = 0.0;
  double tree_cost = 0.0;
  double stretch = 1.0;
  double max_cut_ratio = 0.0;
  bool dominance_ok = true;
  PairWitness worst_pair;  // tightest dominance margin (relative)
  double stretch_bound = 0.0;
  bool stretch_ok = true;
  double cut_ratio_bound = 0.0;
  bool cut_bound_ok = true;
};

/// Nested partitions at scales 2^delta .. 2^0. Requires a normalized metric
/// (minimum distance 2) so level 0 bottoms out at singletons.
Decomposition hierarchical_decompose(const Metric& m);

/// Rooted tree over the decomposition with child edges of length 2^{i-1}
/// under a level-i node. Runs of identical clusters across levels collapse
/// into the topmost node.
WeightedTree build_hst(const Decomposition& dec);

struct UltrametricResult {
  WeightedTree tree;
  std::vector<CutRecord> cuts;
};

/// Binary recursive-cut ultrametric: internal labels are cluster diameters,
/// pair distance is the label of the lowest common ancestor.
UltrametricResult recursive_cut_tree(const Metric& m);

double tree_distance(const WeightedTree& t, int u, int v);

/// Routing cost of the tree metric over its leaves, aggregated per edge
/// (HST) or per internal node (ultrametric).
double tree_routing_cost(const WeightedTree& t);

StretchReport verify(const Metric& m, const WeightedTree& t,
                     const std::vector<CutRecord>& cuts);

/// Smallest e with 2^e >= diameter (delta of the hierarchy); 0 for n <= 1.
int scale_exponent(const Metric& m);

}  // namespace rctree
