#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rctree {

/// Upper bound on the 1-D cut quality ratio.
inline constexpr double kDelta0 = 210.0 / 59.0;

/// Relative tolerance used by invariant checks throughout.
inline constexpr double kRelTol = 1e-9;

using Matrix = std::vector<std::vector<double>>;

/// Thrown when a distance matrix or point set fails validation.
class MetricError : public std::runtime_error {
public:
  enum class Kind {
    NonSquare,
    NotFinite,
    NonzeroDiagonal,
    Asymmetric,
    NegativeDistance,
    ZeroOffDiagonal,
    TriangleViolation,
    DuplicatePoints,
    EmptySubset,
    OverlappingSubsets,
  };

  MetricError(Kind kind, std::string message, int i = -1, int j = -1, int k = -1)
      : std::runtime_error(std::move(message)), kind_(kind), i_(i), j_(j), k_(k) {}

  Kind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

  static const char* kind_name(Kind k);

private:
  Kind kind_;
  int i_, j_, k_;
};

/// A finite metric space given by its full distance matrix.
///
/// `dist` is row-major n*n, symmetric, zero on the diagonal. `scale` is the
/// multiplier that was applied to the input distances; metrics produced by
/// validate_metric() have their smallest positive distance equal to 2, and
/// dividing by `scale` recovers the original units.
struct Metric {
  int n = 0;
  std::vector<double> dist;
  double scale = 1.0;

  double operator()(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
  double& at(int i, int j) { return dist[static_cast<size_t>(i) * n + j]; }
};

/// A nonempty, duplicate-free set of point indices, kept sorted ascending.
struct Subset {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int p) const;

  /// Validates emptiness/range/duplicates against a space of n points.
  static Subset of(std::vector<int> idx, int n);
  /// The full index set {0, ..., n-1}.
  static Subset full(int n);
};

/// Points in R^d, one coordinate vector per point.
struct PointSet {
  int dim = 0;
  std::vector<std::vector<double>> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// Smallest axis-aligned box containing a point set.
struct BoundingBox {
  std::vector<double> low, high;

  double side(int axis) const { return high[axis] - low[axis]; }
  /// Length of the longest side.
  double longest_side() const;
  /// Smallest axis index attaining the longest side.
  int longest_axis() const;
};

/// Distances from a fixed center, sorted ascending; order[i] is the point
/// index holding values[i]. Pairwise differences of `values` realize the
/// 1-D metric |d(u,x) - d(u,y)| induced by the center u.
struct CentripetalValues {
  std::vector<double> values;
  std::vector<int> order;
};

/// Checks all metric invariants and rescales so the minimum positive
/// distance equals 2; the multiplier is recorded in Metric::scale.
Metric validate_metric(const Matrix& raw);

/// Checks the same invariants but applies no rescaling (scale stays 1).
Metric check_metric(const Matrix& raw);

/// Euclidean distance matrix of a point set, validated and normalized.
Metric metric_from_points(const PointSet& ps);

BoundingBox bounding_box(const PointSet& ps);
BoundingBox bounding_box(const PointSet& ps, std::span<const int> idx);

double euclidean_distance(const PointSet& ps, int a, int b);

/// Max pairwise distance within s.
double diameter(const Metric& m, const Subset& s);

/// Max distance from `center` to any point of s; center must be in s.
double radius_wrt(const Metric& m, const Subset& s, int center);

CentripetalValues centripetal_values(const Metric& m, const Subset& s, int center);

/// Sum of distances over unordered pairs of s.
double routing_cost(const Metric& m, const Subset& s);

/// Sum of distances over all p x q pairs; p and q must be disjoint.
double cross_cost(const Metric& m, const Subset& p, const Subset& q);

}  // namespace rctree
