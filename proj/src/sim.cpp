#include "witbench/sim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parallel.hpp"
#include "witbench/rng.hpp"

namespace witbench {

namespace {

constexpr long long kChunk = 16384;

}  // namespace

McEstimate monte_carlo_cost_workers(const ProblemParams& params, const Strategy& strategy,
                                    const NoiseModel& noise, long long n,
                                    std::uint64_t seed, int max_workers) {
  validate(params);
  if (n < 100) throw std::invalid_argument("monte_carlo_cost: n must be >= 100");
  if (!noise.sampler) throw std::invalid_argument("monte_carlo_cost: noise model has no sampler");

  const std::size_t m = static_cast<std::size_t>(params.m);
  const std::size_t nchunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
  std::vector<double> sums(nchunks, 0.0);
  std::vector<double> sumsqs(nchunks, 0.0);

  detail::parallel_for(nchunks, max_workers, [&](std::size_t c) {
    const long long lo = static_cast<long long>(c) * kChunk;
    const long long count = std::min(kChunk, n - lo);
    // Two independent sub-streams per chunk, derived only from (seed, c).
    SplitMix64 seeder(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(c) + 1)));
    const std::uint64_t x_seed = seeder.next();
    const std::uint64_t z_seed = seeder.next();
    SplitMix64 xg(x_seed);
    const std::vector<double> zs =
        noise.sampler(z_seed, static_cast<std::size_t>(count) * m);

    Realization r;
    r.x0.resize(m);
    r.z.resize(m);
    double s = 0.0;
    double s2 = 0.0;
    for (long long i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        r.x0[j] = params.sigma0 * xg.normal();
        r.z[j] = zs[static_cast<std::size_t>(i) * m + j];
      }
      const double total = evaluate_cost(params, strategy, r).total;
      s += total;
      s2 += total * total;
    }
    sums[c] = s;
    sumsqs[c] = s2;
  });

  double sum = 0.0;
  double sumsq = 0.0;
  for (std::size_t c = 0; c < nchunks; ++c) {  // fixed reduction order
    sum += sums[c];
    sumsq += sumsqs[c];
  }
  const double nd = static_cast<double>(n);
  const double mean = sum / nd;
  const double var = std::max(0.0, (sumsq - nd * mean * mean) / (nd - 1.0));
  McEstimate est;
  est.mean = mean;
  est.ci_halfwidth = 3.0 * std::sqrt(var / nd);
  est.n = n;
  est.seed = seed;
  return est;
}

McEstimate monte_carlo_cost(const ProblemParams& params, const Strategy& strategy,
                            const NoiseModel& noise, long long n, std::uint64_t seed) {
  return monte_carlo_cost_workers(params, strategy, noise, n, seed, 0);
}

WorstCase worst_case_cost(const ProblemParams& params, const Strategy& strategy,
                          double x0_lo, double x0_hi, int grid, double z_margin) {
  if (!(x0_lo <= x0_hi) || !std::isfinite(x0_lo) || !std::isfinite(x0_hi))
    throw std::invalid_argument("worst_case_cost: need finite x0_lo <= x0_hi");
  if (grid < 3) throw std::invalid_argument("worst_case_cost: grid must be >= 3");
  if (!(z_margin > 0.0)) throw std::invalid_argument("worst_case_cost: z_margin must be positive");

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid) + 16);
  const double xstep = (x0_hi - x0_lo) / static_cast<double>(grid - 1);
  for (int i = 0; i < grid; ++i)
    xs.push_back(i + 1 == grid ? x0_hi : x0_lo + static_cast<double>(i) * xstep);
  if (strategy.quantizer) {
    // Exact bin edges offset + (j + 1/2) * spacing inside the range, so the
    // analytic worst case of a quantizer is hit exactly rather than sampled.
    const double s = strategy.quantizer->spacing;
    const double off = strategy.quantizer->offset;
    const long long j_lo = static_cast<long long>(std::ceil((x0_lo - off) / s - 0.5));
    const long long j_hi = static_cast<long long>(std::floor((x0_hi - off) / s - 0.5));
    for (long long j = j_lo; j <= j_hi; ++j) {
      const double edge = off + (static_cast<double>(j) + 0.5) * s;
      if (edge >= x0_lo && edge <= x0_hi) xs.push_back(edge);
    }
  }

  // Center-out scan order with strict improvement: strategies whose cost does
  // not depend on x0 report the innermost argmax, so boundary attainment
  // genuinely signals growth toward the box edge.
  auto center_out = [](double lhs, double rhs) {
    const double al = std::abs(lhs), ar = std::abs(rhs);
    return al < ar || (al == ar && lhs < rhs);
  };
  std::sort(xs.begin(), xs.end(), center_out);

  const double zmax = std::sqrt(3.0) * (1.0 - z_margin);
  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(grid));
  const double zstep = 2.0 * zmax / static_cast<double>(grid - 1);
  for (int i = 0; i < grid; ++i)
    zs.push_back(i + 1 == grid ? zmax : -zmax + static_cast<double>(i) * zstep);
  std::sort(zs.begin(), zs.end(), center_out);

  ProblemParams scalar = params;
  scalar.m = 1;
  Realization r;
  r.x0.resize(1);
  r.z.resize(1);
  WorstCase best;
  best.value = -1.0;
  for (const double x0 : xs) {
    r.x0[0] = x0;
    for (const double z : zs) {
      r.z[0] = z;
      const double total = evaluate_cost(scalar, strategy, r).total;
      if (total > best.value) {
        best.value = total;
        best.at_x0 = x0;
        best.at_z = z;
      }
    }
  }
  best.on_x0_boundary = best.at_x0 == x0_lo || best.at_x0 == x0_hi;
  return best;
}

RatioReport ratio_report(const ProblemParams& params, const NoiseModel& noise,
                         long long n, std::uint64_t seed) {
  validate(params);
  RatioReport report;
  report.bounds = bayes_bound_report(params, noise);
  const Strategy best = best_strategy(params, noise);
  report.best_label = best.label;
  report.mc_best = monte_carlo_cost(params, best, noise, n, seed);
  const LinearOptimum lin = optimal_linear_cost(params);
  report.linear_cost = lin.cost;
  report.linear_P_star = lin.P_star;
  const double denom = std::min(report.mc_best.mean, report.bounds.upper);
  report.linear_ratio = finite_ratio(lin.cost, denom);
  report.mu = mu_bound(noise.a, noise.h_bits);
  return report;
}

}  // namespace witbench
