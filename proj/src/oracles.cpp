#include "rctree/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rctree/cut.hpp"

namespace rctree {

std::vector<double> path_instance(int n) {
  if (n < 1) throw std::invalid_argument("TooFewValues: n must be at least 1");
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return v;
}

OptimalCost line_dp_optimal(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw std::invalid_argument("TooFewValues: need at least 1 value");
  for (int i = 1; i < n; ++i)
    if (values[i] < values[i - 1])
      throw std::invalid_argument("NotSorted: value at index " + std::to_string(i) + " decreases");

  OptimalCost out;
  if (n == 1) return out;

  // cost[i][j] stored flat; cost of the best dominating ultrametric over
  // values i..j. Splitting at k pays (k-i+1)(j-k) crossing pairs, each at
  // the interval diameter a_j - a_i.
  const auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  std::vector<double> cost(static_cast<size_t>(n) * n, 0.0);
  for (int len = 2; len <= n; ++len)
    for (int i = 0; i + len - 1 < n; ++i) {
      const int j = i + len - 1;
      const double diam = values[j] - values[i];
      double best = std::numeric_limits<double>::infinity();
      for (int k = i; k < j; ++k) {
        const double pairs = static_cast<double>(k - i + 1) * (j - k);
        const double c = cost[idx(i, k)] + cost[idx(k + 1, j)] + pairs * diam;
        best = std::min(best, c);
      }
      cost[idx(i, j)] = best;
    }
  out.cost = cost[idx(0, n - 1)];

  double base = 0.0;
  double prefix = 0.0;
  for (int i = 0; i < n; ++i) {
    base += values[i] * i - prefix;
    prefix += values[i];
  }
  out.ratio = base > 0.0 ? out.cost / base : 1.0;
  return out;
}

OptimalCost exhaustive_optimal_ultrametric(const Metric& m, bool allow_nine) {
  const int n = m.n;
  const int cap = allow_nine ? 9 : 8;
  if (n > cap)
    throw std::invalid_argument("TooLarge: exhaustive search capped at n = " +
                                std::to_string(cap));
  OptimalCost out;
  if (n <= 1) return out;

  const unsigned full = (1u << n) - 1u;
  std::vector<double> diam(full + 1, 0.0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int hi = std::bit_width(mask) - 1;
    const unsigned rest = mask & ~(1u << hi);
    double d = diam[rest];
    for (unsigned r = rest; r;) {
      const int j = std::countr_zero(r);
      d = std::max(d, m(hi, j));
      r &= r - 1;
    }
    diam[mask] = d;
  }

  std::vector<double> best(full + 1, 0.0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singleton
    const unsigned low = mask & (0u - mask);
    const unsigned rest = mask ^ low;
    const double d = diam[mask];
    const double total = static_cast<double>(std::popcount(mask));
    double b = std::numeric_limits<double>::infinity();
    // Left part always contains the lowest point, so each bipartition is
    // visited once. s = 0 gives the {lowest} | rest split.
    for (unsigned s = (rest - 1) & rest;; s = (s - 1) & rest) {
      const unsigned left = s | low;
      if (left != mask) {
        const double sleft = std::popcount(left);
        const double c = best[left] + best[mask ^ left] + sleft * (total - sleft) * d;
        b = std::min(b, c);
      }
      if (s == 0) break;
    }
    best[mask] = b;
  }

  out.cost = best[full];
  const double base = routing_cost(m, Subset::full(n));
  out.ratio = base > 0.0 ? out.cost / base : 1.0;
  return out;
}

PathCutCertificate path_cut_certificate(int n) {
  if (n < 2) throw std::invalid_argument("TooFewValues: n must be at least 2");
  PathCutCertificate cert;
  cert.ratio = 2.0 * (n - 1) / n;
  const std::vector<double> values = path_instance(n);
  const CutScan s = scan(values);
  double worst = 0.0;
  bool ok = true;
  for (int k = 1; k < n; ++k) {
    const double closed = 0.5 * k * static_cast<double>(n) * (n - k);
    if (std::abs(s.rc[static_cast<size_t>(k - 1)] - closed) > kRelTol * closed) ok = false;
    const double ratio = static_cast<double>(k) * (n - k) * s.delta / s.rc[static_cast<size_t>(k - 1)];
    const double dev = std::abs(ratio - cert.ratio) / cert.ratio;
    worst = std::max(worst, dev);
    if (dev > kRelTol) ok = false;
  }
  cert.all_cuts_equal = ok;
  cert.max_deviation = worst;
  return cert;
}

double lower_bound_ratio(int n) {
  const PathCutCertificate cert = path_cut_certificate(n);
  if (!cert.all_cuts_equal)
    throw std::logic_error("path cut certificate failed at n = " + std::to_string(n));
  return cert.ratio;
}

}  // namespace rctree
