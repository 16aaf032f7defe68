#include <doctest.h>

#include <cmath>

#include "rctree/hst.hpp"
#include "rctree/metric.hpp"
#include "rctree/oracles.hpp"
#include "support.hpp"

using namespace rctree;
using namespace testsupport;

namespace {

Metric line_metric(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  Matrix raw(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      raw[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::abs(values[static_cast<size_t>(i)] - values[static_cast<size_t>(j)]);
  return check_metric(raw);
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("path instances are unit spaced") {
  CHECK(path_instance(4) == std::vector<double>{1, 2, 3, 4});
  CHECK(path_instance(1) == std::vector<double>{1});
}

TEST_CASE("line DP base cases") {
  const OptimalCost one = line_dp_optimal(std::vector<double>{5.0});
  CHECK(one.cost == 0.0);
  CHECK(one.ratio == 1.0);

  const OptimalCost two = line_dp_optimal(std::vector<double>{1, 2});
  CHECK(two.cost == 1.0);
  CHECK(two.ratio == 1.0);
}

TEST_CASE("line DP on four unit-spaced values") {
  const OptimalCost r = line_dp_optimal(path_instance(4));
  CHECK(r.cost == 14.0);
  CHECK(r.ratio == 1.4);
}

TEST_CASE("line DP matches its closed form on unit spacing") {
  // cost = (n-1)n(2n-1)/6, pair sum = n(n^2-1)/6, ratio = (2n-1)/(n+1)
  for (const int n : {2, 3, 4, 8, 16, 33}) {
    const OptimalCost r = line_dp_optimal(path_instance(n));
    const double nn = n;
    CHECK(r.cost == doctest::Approx((nn - 1) * nn * (2 * nn - 1) / 6.0).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx((2 * nn - 1) / (nn + 1)).epsilon(1e-12));
  }
}

TEST_CASE("exhaustive search base cases") {
  const OptimalCost two = exhaustive_optimal_ultrametric(check_metric({{0, 7}, {7, 0}}));
  CHECK(two.cost == 7.0);
  CHECK(two.ratio == 1.0);

  // Splitting {1}|{2,3} pays 2 crossings at diameter 2 plus the inner pair.
  const OptimalCost three = exhaustive_optimal_ultrametric(line_metric({1, 2, 3}));
  CHECK(three.cost == 5.0);
  CHECK(three.ratio == 1.25);
}

TEST_CASE("exhaustive search size cap") {
  Rng rng(47);
  const Metric m = validate_metric(planar_matrix(rng, 9));
  CHECK(message_has(
      thrown_message<std::invalid_argument>([&] { exhaustive_optimal_ultrametric(m); }),
      "TooLarge"));
  CHECK_NOTHROW(exhaustive_optimal_ultrametric(m, true));
}

TEST_CASE("DP and exhaustive search agree on line metrics") {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform_int(rng, 2, 8);
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] = (i == 0 ? 0.0 : v[static_cast<size_t>(i - 1)]) + uniform_int(rng, 1, 9);
    const OptimalCost dp = line_dp_optimal(v);
    const OptimalCost full = exhaustive_optimal_ultrametric(line_metric(v));
    CHECK(dp.cost == full.cost);  // integer arithmetic, exact
  }
  const OptimalCost dp9 = line_dp_optimal(path_instance(9));
  const OptimalCost full9 = exhaustive_optimal_ultrametric(line_metric(path_instance(9)), true);
  CHECK(dp9.cost == full9.cost);
}

TEST_CASE("recursive cuts land between the optimum and the guarantee") {
  Rng rng(59);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform_int(rng, 2, 7);
    const Metric m =
        validate_metric(t % 2 ? planar_matrix(rng, n) : graph_closure_matrix(rng, n));
    const OptimalCost best = exhaustive_optimal_ultrametric(m);
    const double built = tree_routing_cost(recursive_cut_tree(m).tree);
    CHECK(best.cost <= built * (1 + 1e-12));
    if (best.cost > 0) CHECK(built / best.cost <= kDelta0 + 1e-9);
  }
}

TEST_CASE("every cut of the unit-spaced line scores the same") {
  CHECK(lower_bound_ratio(2) == 1.0);
  CHECK(lower_bound_ratio(4) == 1.5);
  CHECK(lower_bound_ratio(1000) == doctest::Approx(1.998).epsilon(1e-15));
  const PathCutCertificate cert = path_cut_certificate(1000);
  CHECK(cert.all_cuts_equal);
  CHECK(cert.max_deviation <= 1e-9);
}

TEST_CASE("the flat cut score approaches 2 from below") {
  double prev = 0.0;
  for (int n = 2; n <= 256; n *= 2) {
    const double r = lower_bound_ratio(n);
    CHECK(r > prev);
    CHECK(r < 2.0);
    prev = r;
  }
}

TEST_CASE("DP ratio on doubling sizes climbs toward 2") {
  double prev = 0.0;
  for (int n = 4; n <= 128; n *= 2) {
    const OptimalCost r = line_dp_optimal(path_instance(n));
    CHECK(r.ratio >= prev);
    CHECK(r.ratio < 2.0);
    prev = r.ratio;
  }
}

}  // TEST_SUITE
