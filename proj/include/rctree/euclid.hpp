#pragma once

#include <vector>

#include "rctree/hst.hpp"
#include "rctree/metric.hpp"

namespace rctree {

struct TreeEdge {
  int u = 0;
  int v = 0;
  double length = 0.0;
};

struct SpanningTree {
  int n = 0;
  int root = 0;
  std::vector<TreeEdge> edges;  // u < v per edge, list sorted by (u, v)
};

/// One recursive split: an axis-aligned cut placed inside the central band
/// of the box's longest side.
struct CutPlane {
  int axis = 0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  double position = 0.0;
  int left_count = 0;
  double ratio = 0.0;        // left*right*band width / projected crossing cost
  double box_longest = 0.0;  // longest box side at this cut
  int depth = 0;             // cuts above this one on the recursion branch
};

struct EuclidBuild {
  SpanningTree tree;
  std::vector<CutPlane> cuts;  // execution order
};

EuclidBuild build_spanning_tree(const PointSet& ps, double alpha = 0.25);

SpanningTree euclidean_spanning_tree(const PointSet& ps, double alpha = 0.25);

/// Sum over edges of length * s * (n - s), s = vertices under the edge.
double spanning_tree_routing_cost(const SpanningTree& t);

struct EuclidReport {
  double source_cost = 0.0;
  double tree_cost = 0.0;
  double stretch = 1.0;
  double stretch_bound = 0.0;
  bool stretch_ok = true;
  double max_path = 0.0;
  double box_longest = 0.0;
  double path_bound = 0.0;
  bool path_ok = true;
  double max_cut_ratio = 0.0;
  double cut_ratio_bound = 0.0;
  bool cut_bound_ok = true;
  bool dominance_ok = true;
  PairWitness worst_pair;
};

/// Checks the tree spans the points with true straight-line edge lengths,
/// then reports stretch and longest tree path against their bounds. Cut
/// ratios are checked when the caller supplies the build's cut log.
EuclidReport verify_euclidean(const PointSet& ps, const SpanningTree& t, double alpha = 0.25,
                              const std::vector<CutPlane>& cuts = {});

}  // namespace rctree
