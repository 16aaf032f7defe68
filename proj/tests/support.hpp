#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rctree/metric.hpp"

// Test-local generators. Everything is seeded explicitly so failures
// reproduce; the raw engine output is mapped to doubles by hand to keep
// the streams identical across standard library implementations.
namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline rctree::PointSet random_points(Rng& rng, int n, int dim, double side = 1.0) {
  rctree::PointSet ps;
  ps.dim = dim;
  ps.points.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> p(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) p[static_cast<size_t>(k)] = uniform(rng, 0.0, side);
    ps.points.push_back(std::move(p));
  }
  return ps;
}

inline rctree::Matrix matrix_from_points(const rctree::PointSet& ps) {
  const int n = ps.size();
  rctree::Matrix raw(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = rctree::euclidean_distance(ps, i, j);
      raw[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
      raw[static_cast<size_t>(j)][static_cast<size_t>(i)] = d;
    }
  return raw;
}

inline rctree::Matrix planar_matrix(Rng& rng, int n) {
  return matrix_from_points(random_points(rng, n, 2));
}

// Random connected weighted graph, then all-pairs shortest paths.
inline rctree::Matrix graph_closure_matrix(Rng& rng, int n) {
  const double inf = 1e18;
  rctree::Matrix d(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), inf));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0.0;
  const auto link = [&](int a, int b, double w) {
    auto& x = d[static_cast<size_t>(a)][static_cast<size_t>(b)];
    auto& y = d[static_cast<size_t>(b)][static_cast<size_t>(a)];
    x = y = std::min(x, w);
  };
  for (int i = 1; i < n; ++i) link(uniform_int(rng, 0, i - 1), i, uniform(rng, 1.0, 3.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < 0.15) link(i, j, uniform(rng, 1.0, 3.0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double via = d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                           d[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (via < d[static_cast<size_t>(i)][static_cast<size_t>(j)])
          d[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
      }
  return d;
}

// 1-D families used by the cut stress suites.
inline std::vector<double> random_values(Rng& rng, int n, int family) {
  std::vector<double> v(static_cast<size_t>(n));
  switch (family % 4) {
    case 0:  // uniform
      for (double& x : v) x = uniform(rng, 0.0, 1.0);
      break;
    case 1:  // geometric spacing
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = std::ldexp(1.0, i % 41);
      break;
    case 2: {  // two clusters
      const double gap = uniform(rng, 10.0, 1000.0);
      for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = uniform(rng, 0.0, 1.0) + (i % 2 ? gap : 0.0);
      break;
    }
    default: {  // mostly coincident
      for (double& x : v) x = 5.0;
      v[0] = uniform(rng, 0.0, 1.0);
      if (n > 2 && uniform01(rng) < 0.5) v[1] = uniform(rng, 6.0, 7.0);
      break;
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

template <class E, class F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  } catch (...) {
    return "[wrong exception type]";
  }
  return "[no exception]";
}

inline bool message_has(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

}  // namespace testsupport
