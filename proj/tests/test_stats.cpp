#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "dirsinr/errors.hpp"
#include "dirsinr/stats.hpp"

using namespace dirsinr;

TEST_CASE("cdf by direct count") {
  const std::vector<double> s{3, 1, 2};
  const auto cdf = build_cdf(s);
  CHECK(cdf(1) == doctest::Approx(1.0 / 3));
  CHECK(cdf(2.5) == doctest::Approx(2.0 / 3));
  CHECK(cdf(10) == 1.0);
  CHECK(cdf(0.5) == 0.0);
  CHECK(cdf.count() == 3);
  CHECK(cdf.sorted_values() == std::vector<double>{1, 2, 3});
}

TEST_CASE("cdf of equal samples is a step") {
  const std::vector<double> s{5, 5, 5};
  const auto cdf = build_cdf(s);
  CHECK(cdf(4.9) == 0.0);
  CHECK(cdf(5) == 1.0);
}

TEST_CASE("cdf input validation") {
  CHECK_THROWS_AS(build_cdf(std::vector<double>{}), InvalidParameter);
  CHECK_THROWS_AS(build_cdf(std::vector<double>{1, std::nan("")}), InvalidParameter);
  CHECK_THROWS_AS(build_cdf(std::vector<double>{std::numeric_limits<double>::infinity()}), InvalidParameter);
}

TEST_CASE("quantiles") {
  std::vector<double> s(100);
  for (int i = 0; i < 100; ++i) s[i] = 100 - i;
  const auto cdf = build_cdf(s);
  CHECK(cdf.quantile(0.1) == 10);
  CHECK(cdf.quantile(1.0) == 100);
  CHECK(cdf.quantile(0.001) == 1);
  CHECK(cdf.quantile(0.5) == 50);
  CHECK(cdf.quantile(0.505) == 51);
  CHECK_THROWS_AS(cdf.quantile(0.0), InvalidParameter);
  CHECK_THROWS_AS(cdf.quantile(1.5), InvalidParameter);
  CHECK_THROWS_AS(cdf.quantile(-0.2), InvalidParameter);
}

TEST_CASE("quantiles against a sort and scan oracle") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> z(0, 5);
  std::uniform_int_distribution<int> len(1, 300);
  std::uniform_int_distribution<int> coarse(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(len(rng));
    for (auto& v : s) v = trial % 3 == 0 ? coarse(rng) : z(rng);
    const auto cdf = build_cdf(s);
    std::vector<double> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    double prev_q = -1e300;
    for (int k = 1; k <= 200; ++k) {
      const double p = k / 200.0;
      // smallest sample x with count(<= x) / n >= p
      double expected = sorted.back();
      for (double x : sorted) {
        const auto below = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        if (static_cast<double>(below) / sorted.size() >= p) {
          expected = x;
          break;
        }
      }
      const double q = cdf.quantile(p);
      CHECK(q == expected);
      CHECK(q >= prev_q);
      prev_q = q;
    }
    double prev_f = 0;
    for (double x = -20; x <= 20; x += 0.25) {
      CHECK(cdf(x) >= prev_f);
      prev_f = cdf(x);
    }
    CHECK(cdf(cdf.max()) == 1.0);
  }
}

TEST_CASE("delta summaries") {
  const std::vector<double> d{-1, 0, 1};
  auto s = delta_summary(d, 0.1);
  CHECK(s.frac_degraded == doctest::Approx(1.0 / 3));
  CHECK(s.frac_neutral == doctest::Approx(1.0 / 3));
  CHECK(s.frac_improved == doctest::Approx(1.0 / 3));
  CHECK(s.min_delta_db == -1);
  CHECK(s.max_delta_db == 1);
  s = delta_summary(d, 1e9);
  CHECK(s.frac_degraded == 0.0);
  CHECK(s.frac_neutral == 1.0);
  CHECK(s.frac_improved == 0.0);
  // band edges count as neutral
  s = delta_summary(std::vector<double>{-0.5, 0.5, 0.50001}, 0.5);
  CHECK(s.frac_neutral == doctest::Approx(2.0 / 3));
  CHECK(s.frac_improved == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(delta_summary(std::vector<double>{}, 0.5), InvalidParameter);
  CHECK_THROWS_AS(delta_summary(d, -0.1), InvalidParameter);

  std::mt19937_64 rng(2);
  std::normal_distribution<double> z(0, 3);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> v(1 + t * 37);
    for (auto& x : v) x = z(rng);
    const auto r = delta_summary(v, 0.5);
    CHECK(r.frac_degraded + r.frac_neutral + r.frac_improved == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.min_delta_db <= r.max_delta_db);
  }
}

TEST_CASE("shannon throughput") {
  CHECK(shannon_throughput(10e6, 1.0) == 10e6);
  CHECK(shannon_throughput(10e6, 0.0) == 0.0);
  CHECK(shannon_throughput(10e6, 3.0) == 20e6);
  CHECK_THROWS_AS(shannon_throughput(10e6, -0.1), InvalidParameter);
  CHECK_THROWS_AS(shannon_throughput(0.0, 1.0), InvalidParameter);
  double prev = 0;
  for (double g = 0.01; g < 1e4; g *= 1.5) {
    CHECK(shannon_throughput(1e6, g) > prev);
    prev = shannon_throughput(1e6, g);
    CHECK(shannon_throughput(3e6, g) == doctest::Approx(3 * prev));
  }
}
