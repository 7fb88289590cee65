#include "witbench/core.hpp"

#include <cmath>
#include <numbers>

#include "witbench/rng.hpp"
#include "witbench/strategies.hpp"

namespace witbench {

void validate(const ProblemParams& params) {
  if (!std::isfinite(params.k) || params.k <= 0.0)
    throw std::invalid_argument("ProblemParams: k must be positive and finite");
  if (!std::isfinite(params.sigma0) || params.sigma0 < 0.0)
    throw std::invalid_argument("ProblemParams: sigma0 must be non-negative and finite");
  if (params.m < 1) throw std::invalid_argument("ProblemParams: m must be >= 1");
}

CostBreakdown evaluate_cost(const ProblemParams& params, const Strategy& strategy,
                            const Realization& realization) {
  const auto m = static_cast<std::size_t>(params.m);
  if (params.m < 1 || realization.x0.size() != m || realization.z.size() != m)
    throw std::invalid_argument("evaluate_cost: realization vectors must have length m");

  double u1_sq = 0.0;
  double x2_sq = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x0 = realization.x0[i];
    const double u1 = strategy.gamma1(x0);
    const double x1 = x0 + u1;
    const double y2 = x1 + realization.z[i];
    const double u2 = strategy.gamma2(y2);
    const double x2 = x1 - u2;
    u1_sq += u1 * u1;
    x2_sq += x2 * x2;
  }
  const double md = static_cast<double>(params.m);
  CostBreakdown out;
  out.first_stage = params.k * params.k * u1_sq / md;
  out.second_stage = x2_sq / md;
  out.total = out.first_stage + out.second_stage;
  return out;
}

NoiseModel uniform_noise() {
  const double a = std::sqrt(3.0);
  NoiseModel model;
  model.a = a;
  model.h_bits = std::log2(2.0 * a);
  model.label = "uniform";
  model.sampler = [a](std::uint64_t seed, std::size_t count) {
    SplitMix64 rng(seed);
    std::vector<double> out(count);
    for (auto& v : out) v = (2.0 * rng.uniform_open() - 1.0) * a;
    return out;
  };
  return model;
}

NoiseModel triangular_noise() {
  const double c = std::sqrt(6.0);  // half-width giving unit variance (c^2/6)
  NoiseModel model;
  model.a = c;
  model.h_bits = (0.5 + std::log(c)) / std::numbers::ln2;
  model.label = "triangular";
  model.sampler = [c](std::uint64_t seed, std::size_t count) {
    SplitMix64 rng(seed);
    std::vector<double> out(count);
    for (auto& v : out) {
      const double u = rng.uniform_open();
      // inverse CDF of the symmetric triangle; u in (0,1) keeps |v| < c
      v = u < 0.5 ? c * (std::sqrt(2.0 * u) - 1.0)
                  : c * (1.0 - std::sqrt(2.0 * (1.0 - u)));
    }
    return out;
  };
  return model;
}

double entropy_oracle(const std::function<double(double)>& pdf, double lo, double hi,
                      int grid_points) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("entropy_oracle: support must satisfy lo < hi");
  if (grid_points < 2) throw std::invalid_argument("entropy_oracle: grid_points must be >= 2");

  const std::size_t n = static_cast<std::size_t>(grid_points);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i + 1 == n ? hi : lo + static_cast<double>(i) * step;
    const double v = pdf(x);
    if (!std::isfinite(v) || v < 0.0)
      throw InvalidDensity("entropy_oracle: pdf must be finite and non-negative");
    f[i] = v;
  }

  auto trapezoid = [&](auto&& value) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) acc += 0.5 * (value(i) + value(i + 1)) * step;
    return acc;
  };

  const double mass = trapezoid([&](std::size_t i) { return f[i]; });
  if (std::abs(mass - 1.0) > 1e-6)
    throw InvalidDensity("entropy_oracle: density does not integrate to 1 within 1e-6");

  return trapezoid([&](std::size_t i) {
    return f[i] > 0.0 ? -f[i] * std::log2(f[i]) : 0.0;
  });
}

double gaussian_entropy_bits() {
  return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e);
}

}  // namespace witbench
