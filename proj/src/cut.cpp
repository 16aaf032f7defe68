#include "rctree/cut.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace rctree {

namespace {

void require_sorted(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("TooFewValues: need at least 2 values");
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1])
      throw std::invalid_argument("NotSorted: value at index " + std::to_string(i) +
                                  " decreases");
}

// Shared argmin over cut indices. `width` multiplies k*(n-k); `feasible`
// masks out indices (empty mask = all allowed). Ties go to the smallest k.
CutResult pick_cut(std::span<const double> values, const std::vector<double>& rc, double width,
                   const std::vector<char>& feasible) {
  const int n = static_cast<int>(values.size());
  int best_k = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (int k = 1; k < n; ++k) {
    if (!feasible.empty() && !feasible[k - 1]) continue;
    const double cost = rc[k - 1];
    if (cost <= 0.0) continue;
    const double ratio = static_cast<double>(k) * (n - k) * width / cost;
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_k = k;
    }
  }
  if (best_k < 0) throw std::invalid_argument("NoFeasibleCut: no cut index with positive cost");
  CutResult r;
  r.k = best_k;
  r.ratio = best_ratio;
  return r;
}

}  // namespace

CutScan scan(std::span<const double> values) {
  require_sorted(values);
  const size_t n = values.size();
  CutScan s;
  s.ls.assign(n, 0.0);
  s.rs.assign(n, 0.0);
  s.rc.assign(n - 1, 0.0);
  s.delta = values[n - 1] - values[0];
  for (size_t i = 1; i < n; ++i) {
    const double gap = values[i] - values[i - 1];
    s.ls[i] = s.ls[i - 1] + static_cast<double>(i) * gap;
  }
  for (size_t i = n - 1; i-- > 0;) {
    const double gap = values[i + 1] - values[i];
    s.rs[i] = s.rs[i + 1] + static_cast<double>(n - 1 - i) * gap;
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    const double k = static_cast<double>(i + 1);
    s.rc[i] = (static_cast<double>(n) - k) * s.ls[i] + k * s.rs[i];
  }
  return s;
}

CutResult optimal_cut(std::span<const double> values) {
  CutScan s = scan(values);
  if (s.delta == 0.0)
    throw std::invalid_argument("DegenerateDiameter: all values equal, nothing to cut");
  CutResult r = pick_cut(values, s.rc, s.delta, {});
  const double mid = values[r.k - 1] + (values[r.k] - values[r.k - 1]) / 2.0;
  r.position = mid > values[r.k - 1] ? mid : values[r.k];
  return r;
}

CutResult constrained_cut(std::span<const double> values, double lo, double hi) {
  CutScan s = scan(values);
  if (hi <= lo) throw std::invalid_argument("EmptyInterval: interval has no extent");
  if (lo < values.front() || hi > values.back())
    throw std::invalid_argument("IntervalOutOfRange: interval exceeds the value range");
  const size_t n = values.size();
  // Cut index k is feasible when some coordinate in (lo, hi] lands in
  // (a_k, a_{k+1}], i.e. the half-open intervals overlap.
  std::vector<char> feasible(n - 1, 0);
  for (size_t i = 0; i + 1 < n; ++i)
    feasible[i] = std::max(values[i], lo) < std::min(values[i + 1], hi) ? 1 : 0;
  CutResult r = pick_cut(values, s.rc, hi - lo, feasible);
  const double band_lo = std::max(values[r.k - 1], lo);
  const double band_hi = std::min(values[r.k], hi);
  r.position = band_lo + (band_hi - band_lo) / 2.0;
  if (r.position <= band_lo) r.position = band_hi;
  return r;
}

CutResult brute_force_cut(std::span<const double> values) {
  require_sorted(values);
  const size_t n = values.size();
  const double delta = values[n - 1] - values[0];
  if (delta == 0.0)
    throw std::invalid_argument("DegenerateDiameter: all values equal, nothing to cut");
  std::vector<double> rc(n - 1, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    double acc = 0.0;
    for (size_t a = 0; a <= i; ++a)
      for (size_t b = i + 1; b < n; ++b) acc += values[b] - values[a];
    rc[i] = acc;
  }
  CutResult r = pick_cut(values, rc, delta, {});
  const double mid = values[r.k - 1] + (values[r.k] - values[r.k - 1]) / 2.0;
  r.position = mid > values[r.k - 1] ? mid : values[r.k];
  return r;
}

}  // namespace rctree
