#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "witbench/core.hpp"
#include "witbench/rng.hpp"
#include "witbench/strategies.hpp"

using namespace witbench;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

// Sample variance of a draw; used to check the unit-variance contract.
double sample_variance(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  return var / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_CASE("problem params validation") {
  CHECK_NOTHROW(validate({1.0, 0.0, 1}));
  CHECK_NOTHROW(validate({1e-9, 1e9, 7}));
  CHECK_THROWS_AS(validate({0.0, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate({-1.0, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate({1.0, -0.5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate({1.0, 1.0, 0}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(validate({nan, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate({1.0, nan, 1}), std::invalid_argument);
}

TEST_CASE("evaluate_cost: zero-forcing moves the state to zero") {
  // u1 = -2 makes x1 = 0; gamma2 = 0 keeps x2 = 0. Total = k^2 * 4 = 4.
  const CostBreakdown c =
      evaluate_cost({1.0, 1.0, 1}, zero_forcing_strategy(), {{2.0}, {0.5}});
  CHECK(c.first_stage == 4.0);
  CHECK(c.second_stage == 0.0);
  CHECK(c.total == 4.0);
}

TEST_CASE("evaluate_cost: zero input with pass-through estimator") {
  // u1 = 0, u2 = y2 = x0 + z, so x2 = -z and the cost is z^2 = 1.
  Strategy pass = linear_strategy({0.0, 1.0});
  const CostBreakdown c = evaluate_cost({2.0, 1.0, 1}, pass, {{5.0}, {1.0}});
  CHECK(c.first_stage == 0.0);
  CHECK(c.second_stage == 1.0);
  CHECK(c.total == 1.0);
}

TEST_CASE("evaluate_cost: quantizer at the bin edge pays (spacing/2)^2") {
  // x0 = sqrt(3) sits exactly between lattice points 0 and 2 sqrt(3); the tie
  // rounds to the even index 0, so |u1| = sqrt(3) and the cost is ~3.
  Strategy q = quantizer_strategy(2.0 * kSqrt3);
  const CostBreakdown c = evaluate_cost({1.0, 1.0, 1}, q, {{kSqrt3}, {0.0}});
  CHECK(std::abs(std::abs(q.gamma1(kSqrt3)) - kSqrt3) == 0.0);
  CHECK(c.second_stage == 0.0);
  CHECK(c.total == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("evaluate_cost: dimension mismatches are rejected") {
  Strategy zf = zero_forcing_strategy();
  CHECK_THROWS_AS(evaluate_cost({1.0, 1.0, 2}, zf, {{1.0}, {0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_cost({1.0, 1.0, 1}, zf, {{1.0, 2.0}, {0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_cost({1.0, 1.0, 1}, zf, {{1.0}, {0.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("evaluate_cost: total is exactly first + second") {
  SplitMix64 rng(2024);
  const Strategy strategies[] = {quantizer_strategy(2.0 * kSqrt3), zero_forcing_strategy(),
                                 zero_input_strategy(1.5, 1.0),
                                 linear_strategy({-0.3, 0.7})};
  for (int iter = 0; iter < 1000; ++iter) {
    const int m = 1 + static_cast<int>(rng.next() % 5);
    Realization r;
    for (int i = 0; i < m; ++i) {
      r.x0.push_back(10.0 * (2.0 * rng.uniform_open() - 1.0));
      r.z.push_back(kSqrt3 * (2.0 * rng.uniform_open() - 1.0) * 0.999);
    }
    const ProblemParams params{0.1 + 3.0 * rng.uniform_open(), 1.0, m};
    const auto& st = strategies[rng.next() % 4];
    const CostBreakdown c = evaluate_cost(params, st, r);
    CHECK(c.total == c.first_stage + c.second_stage);  // bitwise, no drift
    CHECK(c.first_stage >= 0.0);
    CHECK(c.second_stage >= 0.0);
  }
}

TEST_CASE("uniform noise model constants") {
  const NoiseModel u = uniform_noise();
  CHECK(u.a == kSqrt3);
  CHECK(u.h_bits == std::log2(2.0 * kSqrt3));
  CHECK(u.h_bits == doctest::Approx(1.7924812503605780).epsilon(1e-14));
  CHECK(u.label == "uniform");
  CHECK(u.h_bits <= gaussian_entropy_bits());
}

TEST_CASE("uniform noise sampling: unit variance, strict support, deterministic") {
  const NoiseModel u = uniform_noise();
  const auto draw = u.sampler(99, 1000000);
  REQUIRE(draw.size() == 1000000);
  double mean = 0.0;
  for (double v : draw) mean += v;
  mean /= static_cast<double>(draw.size());
  CHECK(std::abs(mean) < 5e-3);
  CHECK(sample_variance(draw) == doctest::Approx(1.0).epsilon(0.01));
  for (double v : draw) {
    REQUIRE(v > -u.a);
    REQUIRE(v < u.a);
  }
  const auto again = u.sampler(99, 1000000);
  CHECK(draw == again);
  CHECK(u.sampler(100, 10) != u.sampler(99, 10));
}

TEST_CASE("triangular noise model: constants and sampling") {
  const NoiseModel t = triangular_noise();
  CHECK(t.a == kSqrt6);
  // h = 1/2 + ln(c) nats for the symmetric triangle of half-width c.
  CHECK(t.h_bits == doctest::Approx((0.5 + std::log(kSqrt6)) / std::numbers::ln2)
                        .epsilon(1e-14));
  CHECK(t.h_bits <= gaussian_entropy_bits());
  const auto draw = t.sampler(7, 1000000);
  double mean = 0.0;
  for (double v : draw) mean += v;
  mean /= static_cast<double>(draw.size());
  CHECK(std::abs(mean) < 5e-3);
  CHECK(sample_variance(draw) == doctest::Approx(1.0).epsilon(0.01));
  for (double v : draw) {
    REQUIRE(v > -t.a);
    REQUIRE(v < t.a);
  }
  CHECK(t.sampler(7, 100) == t.sampler(7, 100));
}

TEST_CASE("entropy oracle: uniform densities") {
  const double w = 2.0 * kSqrt3;
  const double h = entropy_oracle([w](double) { return 1.0 / w; }, -kSqrt3, kSqrt3);
  CHECK(h == doctest::Approx(1.7924812503605780).epsilon(1e-3));
  // trapezoid is exact for constants per interval; summing 1e5 terms still
  // accumulates a few ulps, so leave headroom beyond machine precision
  CHECK(h == doctest::Approx(std::log2(w)).epsilon(1e-9));

  const double h_unit = entropy_oracle([](double) { return 1.0; }, -0.5, 0.5);
  CHECK(std::abs(h_unit) < 1e-3);
}

TEST_CASE("entropy oracle: symmetric triangular matches the closed form") {
  const double c = kSqrt6;
  auto pdf = [c](double x) { return std::max(0.0, (c - std::abs(x)) / (c * c)); };
  const double h = entropy_oracle(pdf, -c, c, 100000);
  const double closed = (0.5 + std::log(c)) / std::numbers::ln2;
  CHECK(h == doctest::Approx(closed).epsilon(1e-3));
}

TEST_CASE("entropy oracle: rejects bad densities and bad supports") {
  CHECK_THROWS_AS(entropy_oracle([](double) { return 2.0; }, -0.5, 0.5), InvalidDensity);
  CHECK_THROWS_AS(entropy_oracle([](double) { return -1.0; }, -0.5, 0.5), InvalidDensity);
  CHECK_THROWS_AS(entropy_oracle([](double) { return 1.0; }, 0.5, -0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(entropy_oracle([](double) { return 1.0; }, -0.5, 0.5, 1),
                  std::invalid_argument);
  // integrates to 1 but off by more than the 1e-6 gate
  CHECK_THROWS_AS(entropy_oracle([](double) { return 1.0 + 2e-6; }, -0.5, 0.5),
                  InvalidDensity);
}

TEST_CASE("empirical L2 triangle inequality on random sample matrices") {
  // d(X, Y) = sqrt(mean_i ||X_i - Y_i||^2) is the l2 norm of the concatenated
  // difference up to a constant, so d(A,C) <= d(A,B) + d(B,C) must hold
  // exactly for sample means, not just in expectation.
  SplitMix64 rng(515151);
  constexpr int kSamples = 100;
  constexpr int kDim = 8;
  constexpr int kEntries = kSamples * kDim;
  std::vector<double> a(kEntries), b(kEntries), c(kEntries);
  for (int trial = 0; trial < 1000; ++trial) {
    const double sa = 0.1 + 3.0 * rng.uniform_open();
    const double sb = 0.1 + 3.0 * rng.uniform_open();
    const double sc = 0.1 + 3.0 * rng.uniform_open();
    const double shift = 4.0 * (2.0 * rng.uniform_open() - 1.0);
    for (int i = 0; i < kEntries; ++i) {
      a[i] = sa * rng.normal();
      b[i] = sb * rng.normal() + shift;
      c[i] = sc * rng.normal() - shift;
    }
    auto dist = [&](const std::vector<double>& x, const std::vector<double>& y) {
      double acc = 0.0;
      for (int i = 0; i < kEntries; ++i) acc += (x[i] - y[i]) * (x[i] - y[i]);
      return std::sqrt(acc / kSamples);
    };
    const double ab = dist(a, b);
    const double bc = dist(b, c);
    const double ac = dist(a, c);
    REQUIRE(ac <= ab + bc);
    REQUIRE(bc >= ac - ab);  // the stated rearrangement
  }
}

TEST_CASE("gaussian entropy ceiling") {
  CHECK(gaussian_entropy_bits() ==
        doctest::Approx(0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e))
            .epsilon(1e-15));
  CHECK(gaussian_entropy_bits() == doctest::Approx(2.047095585180641).epsilon(1e-12));
}
