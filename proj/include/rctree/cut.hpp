#pragma once

#include <span>
#include <vector>

namespace rctree {

/// Prefix/suffix sums for a sorted 1-D value list and the routing cost of
/// every cut. With values a_1 <= ... <= a_n (stored 0-based), entry i of
/// `rc` is the total pairwise crossing distance of the cut that puts the
/// first i+1 values on the left.
struct CutScan {
  std::vector<double> ls;  // ls[i] = sum of (a_{i+1} - a_t) over t <= i+1
  std::vector<double> rs;  // rs[i] = sum of (a_t - a_{i+1}) over t >= i+1
  std::vector<double> rc;  // rc[i] = cost of cut after position i+1, size n-1
  double delta = 0.0;      // a_n - a_1
};

struct CutResult {
  int k = 0;          // left part size, 1 <= k <= n-1
  double ratio = 0.0; // k*(n-k)*delta / rc
  double position = 0.0;
};

CutScan scan(std::span<const double> values);

CutResult optimal_cut(std::span<const double> values);

CutResult constrained_cut(std::span<const double> values, double lo, double hi);

/// Same answer as optimal_cut but by direct O(n^2) summation per cut.
CutResult brute_force_cut(std::span<const double> values);

}  // namespace rctree
