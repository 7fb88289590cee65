#pragma once

#include <cstdint>

#include "witbench/bounds.hpp"
#include "witbench/core.hpp"
#include "witbench/strategies.hpp"

namespace witbench {

struct McEstimate {
  double mean = 0.0;
  double ci_halfwidth = 0.0;  // 3 * stderr (~99.7% under CLT)
  long long n = 0;
  std::uint64_t seed = 0;
};

struct WorstCase {
  double value = 0.0;
  double at_x0 = 0.0;
  double at_z = 0.0;
  // max attained at a search-box edge: the proxy for an unbounded supremum
  bool on_x0_boundary = false;
};

// Averages evaluate_cost over n draws of x0 ~ Normal(0, sigma0^2) and z from
// the noise sampler. Work is split into fixed-size chunks whose sub-seeds are
// derived from the chunk index and reduced in index order, so the estimate is
// bit-identical regardless of worker count. Requires n >= 100.
McEstimate monte_carlo_cost(const ProblemParams& params, const Strategy& strategy,
                            const NoiseModel& noise, long long n, std::uint64_t seed);

// Same estimator with an explicit worker cap (0 = auto); used by callers that
// already parallelize at a coarser grain.
McEstimate monte_carlo_cost_workers(const ProblemParams& params, const Strategy& strategy,
                                    const NoiseModel& noise, long long n,
                                    std::uint64_t seed, int max_workers);

// Exhaustive scalar grid search for sup cost over x0 in [x0_lo, x0_hi] and
// |z| <= sqrt(3)(1 - z_margin). The x0 grid includes both endpoints plus, for
// quantizer strategies, every exact bin edge inside the range. Candidates are
// scanned center-out with strict improvement, so flat-in-x0 strategies report
// an interior argmax. Requires grid >= 3 and z_margin > 0.
WorstCase worst_case_cost(const ProblemParams& params, const Strategy& strategy,
                          double x0_lo, double x0_hi, int grid, double z_margin = 1e-12);

struct RatioReport {
  BoundReport bounds;
  McEstimate mc_best;
  std::string best_label;
  double linear_cost = 0.0;
  double linear_P_star = 0.0;
  double linear_ratio = 1.0;  // optimal_linear_cost / min(MC mean, upper bound)
  double mu = 0.0;
};

RatioReport ratio_report(const ProblemParams& params, const NoiseModel& noise,
                         long long n, std::uint64_t seed);

}  // namespace witbench
