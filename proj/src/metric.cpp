#include "rctree/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace rctree {

const char* MetricError::kind_name(Kind k) {
  switch (k) {
    case Kind::NonSquare: return "NonSquare";
    case Kind::NotFinite: return "NotFinite";
    case Kind::NonzeroDiagonal: return "NonzeroDiagonal";
    case Kind::Asymmetric: return "Asymmetric";
    case Kind::NegativeDistance: return "NegativeDistance";
    case Kind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case Kind::TriangleViolation: return "TriangleViolation";
    case Kind::DuplicatePoints: return "DuplicatePoints";
    case Kind::EmptySubset: return "EmptySubset";
    case Kind::OverlappingSubsets: return "OverlappingSubsets";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(MetricError::Kind kind, const std::string& what, int i = -1, int j = -1,
                       int k = -1) {
  std::ostringstream msg;
  msg << MetricError::kind_name(kind);
  if (i >= 0) {
    msg << "(" << i;
    if (j >= 0) msg << "," << j;
    if (k >= 0) msg << "," << k;
    msg << ")";
  }
  if (!what.empty()) msg << ": " << what;
  throw MetricError(kind, msg.str(), i, j, k);
}

Metric checked_metric(const Matrix& raw, bool normalize) {
  const int n = static_cast<int>(raw.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n)
      fail(MetricError::Kind::NonSquare, "row " + std::to_string(i) + " has " +
                                             std::to_string(raw[i].size()) + " entries, expected " +
                                             std::to_string(n));
  }

  Metric m;
  m.n = n;
  m.dist.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = raw[i][j];
      if (!std::isfinite(v)) fail(MetricError::Kind::NotFinite, "entry not finite", i, j);
      if (v < 0.0) fail(MetricError::Kind::NegativeDistance, std::to_string(v), i, j);
      if (i == j && v != 0.0) fail(MetricError::Kind::NonzeroDiagonal, std::to_string(v), i);
      if (i < j && raw[j][i] != v)
        fail(MetricError::Kind::Asymmetric,
             std::to_string(v) + " vs " + std::to_string(raw[j][i]), i, j);
      if (i != j && v == 0.0) fail(MetricError::Kind::ZeroOffDiagonal, "distinct points at distance 0", i, j);
      m.at(i, j) = v;
    }

  // d(i,j) <= d(i,k) + d(k,j) within relative tolerance.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dij = m(i, j);
      const double limit_slack = kRelTol * dij;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (dij > m(i, k) + m(k, j) + limit_slack)
          fail(MetricError::Kind::TriangleViolation,
               std::to_string(dij) + " > " + std::to_string(m(i, k)) + " + " +
                   std::to_string(m(k, j)),
               i, j, k);
      }
    }

  if (normalize && n >= 2) {
    double min_pos = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) min_pos = std::min(min_pos, m(i, j));
    // Divide-then-double so the minimum becomes exactly 2.
    for (double& v : m.dist) v = v / min_pos * 2.0;
    m.scale = 2.0 / min_pos;
  }
  return m;
}

}  // namespace

Metric validate_metric(const Matrix& raw) { return checked_metric(raw, true); }

Metric check_metric(const Matrix& raw) { return checked_metric(raw, false); }

Metric metric_from_points(const PointSet& ps) {
  const int n = ps.size();
  Matrix raw(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = euclidean_distance(ps, i, j);
      if (d == 0.0) fail(MetricError::Kind::DuplicatePoints, "coincident points", i, j);
      raw[i][j] = raw[j][i] = d;
    }
  return validate_metric(raw);
}

bool Subset::contains(int p) const {
  return std::binary_search(indices.begin(), indices.end(), p);
}

Subset Subset::of(std::vector<int> idx, int n) {
  if (idx.empty()) fail(MetricError::Kind::EmptySubset, "");
  std::sort(idx.begin(), idx.end());
  for (size_t t = 0; t < idx.size(); ++t) {
    if (idx[t] < 0 || idx[t] >= n)
      fail(MetricError::Kind::EmptySubset, "index " + std::to_string(idx[t]) + " out of range");
    if (t > 0 && idx[t] == idx[t - 1])
      fail(MetricError::Kind::EmptySubset, "duplicate index " + std::to_string(idx[t]));
  }
  return Subset{std::move(idx)};
}

Subset Subset::full(int n) {
  Subset s;
  s.indices.resize(n);
  std::iota(s.indices.begin(), s.indices.end(), 0);
  return s;
}

double BoundingBox::longest_side() const {
  double best = 0.0;
  for (size_t k = 0; k < low.size(); ++k) best = std::max(best, high[k] - low[k]);
  return best;
}

int BoundingBox::longest_axis() const {
  int axis = 0;
  double best = high[0] - low[0];
  for (size_t k = 1; k < low.size(); ++k) {
    const double s = high[k] - low[k];
    if (s > best) {
      best = s;
      axis = static_cast<int>(k);
    }
  }
  return axis;
}

BoundingBox bounding_box(const PointSet& ps) {
  std::vector<int> all(ps.size());
  std::iota(all.begin(), all.end(), 0);
  return bounding_box(ps, all);
}

BoundingBox bounding_box(const PointSet& ps, std::span<const int> idx) {
  BoundingBox box;
  box.low.assign(ps.dim, std::numeric_limits<double>::infinity());
  box.high.assign(ps.dim, -std::numeric_limits<double>::infinity());
  for (int p : idx)
    for (int k = 0; k < ps.dim; ++k) {
      box.low[k] = std::min(box.low[k], ps.points[p][k]);
      box.high[k] = std::max(box.high[k], ps.points[p][k]);
    }
  return box;
}

double euclidean_distance(const PointSet& ps, int a, int b) {
  double acc = 0.0;
  for (int k = 0; k < ps.dim; ++k) {
    const double diff = ps.points[a][k] - ps.points[b][k];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

double diameter(const Metric& m, const Subset& s) {
  if (s.indices.empty()) fail(MetricError::Kind::EmptySubset, "diameter");
  double best = 0.0;
  for (size_t a = 0; a < s.indices.size(); ++a)
    for (size_t b = a + 1; b < s.indices.size(); ++b)
      best = std::max(best, m(s.indices[a], s.indices[b]));
  return best;
}

double radius_wrt(const Metric& m, const Subset& s, int center) {
  if (s.indices.empty()) fail(MetricError::Kind::EmptySubset, "radius_wrt");
  if (!s.contains(center))
    fail(MetricError::Kind::EmptySubset, "center " + std::to_string(center) + " not in subset");
  double best = 0.0;
  for (int p : s.indices) best = std::max(best, m(center, p));
  return best;
}

CentripetalValues centripetal_values(const Metric& m, const Subset& s, int center) {
  if (s.indices.empty()) fail(MetricError::Kind::EmptySubset, "centripetal_values");
  if (!s.contains(center))
    fail(MetricError::Kind::EmptySubset, "center " + std::to_string(center) + " not in subset");
  CentripetalValues cv;
  cv.order = s.indices;
  // Stable on the already-ascending index order, so equal distances keep
  // smallest point index first.
  std::stable_sort(cv.order.begin(), cv.order.end(),
                   [&](int a, int b) { return m(center, a) < m(center, b); });
  cv.values.reserve(cv.order.size());
  for (int p : cv.order) cv.values.push_back(m(center, p));
  return cv;
}

double routing_cost(const Metric& m, const Subset& s) {
  double acc = 0.0;
  for (size_t a = 0; a < s.indices.size(); ++a)
    for (size_t b = a + 1; b < s.indices.size(); ++b) acc += m(s.indices[a], s.indices[b]);
  return acc;
}

double cross_cost(const Metric& m, const Subset& p, const Subset& q) {
  for (int idx : p.indices)
    if (q.contains(idx))
      fail(MetricError::Kind::OverlappingSubsets, "index " + std::to_string(idx) + " in both");
  double acc = 0.0;
  for (int a : p.indices)
    for (int b : q.indices) acc += m(a, b);
  return acc;
}

}  // namespace rctree
