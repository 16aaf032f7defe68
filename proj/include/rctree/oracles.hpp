#pragma once

#include <span>
#include <vector>

#include "rctree/metric.hpp"

namespace rctree {

struct OptimalCost {
  double cost = 0.0;
  double ratio = 1.0;  // cost / routing cost of the source metric
};

/// The unit-spaced line instance {1, 2, ..., n}.
std::vector<double> path_instance(int n);

/// Exact minimum routing cost over dominating ultrametrics of a sorted 1-D
/// metric, via interval DP over contiguous splits. O(n^3).
OptimalCost line_dp_optimal(std::span<const double> values);

/// Exact minimum routing cost over all dominating ultrametrics of an
/// arbitrary metric, by memoized search over recursive binary partitions.
/// Limited to n <= 8 (n = 9 behind the override flag).
OptimalCost exhaustive_optimal_ultrametric(const Metric& m, bool allow_nine = false);

struct PathCutCertificate {
  double ratio = 0.0;        // 2(n-1)/n
  bool all_cuts_equal = false;
  double max_deviation = 0.0;  // worst relative gap of any cut from the formula
};

/// Checks that every cut of {1..n} scores exactly 2(n-1)/n, with each
/// crossing cost matching the closed form k*n*(n-k)/2.
PathCutCertificate path_cut_certificate(int n);

/// 2(n-1)/n, certified against the scan of {1..n}; throws if the
/// certificate fails (it cannot, for exact integer input).
double lower_bound_ratio(int n);

}  // namespace rctree
