#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "witbench/core.hpp"

namespace witbench {

struct BoundReport {
  double upper = 0.0;
  double lower = 0.0;
  double P_star = 0.0;  // argmin of the lower-bound objective
  double ratio = 1.0;   // upper/lower; 1 when both are 0, +inf when only lower is
  std::string winning_strategy;
};

// Raised when a scalar objective evaluates to a non-finite value; carries the
// offending point.
struct NumericError : std::runtime_error {
  double at;
  NumericError(const std::string& what, double x) : std::runtime_error(what), at(x) {}
};

struct ScalarMin {
  double argmin = 0.0;
  double value = 0.0;
};

// Dense-grid scan (grid_points uniform intervals over [lo, hi]) followed by
// golden-section refinement to width `tol` on the bracketing triple of the
// best node; returns the better of grid-best and refined point. Bound
// objectives call this in the sqrt(P) domain so small-P minima stay resolved.
ScalarMin minimize_scalar(const std::function<double(double)>& objective, double lo,
                          double hi, int grid_points = 4096, double tol = 1e-10);

struct UpperBound {
  double bound = 0.0;
  std::string winner;
};

// min{k^2 a^2, sigma0^2/(sigma0^2+1), k^2 sigma0^2} and the attaining strategy.
UpperBound upper_bound_bayes(const ProblemParams& params, const NoiseModel& noise);

// kappa(P) = sigma0^2 2^{2h} / (2 pi e ((sigma0 + sqrt(P))^2 + 1)).
double kappa(double P, double sigma0, double h_bits);

struct LowerBound {
  double bound = 0.0;
  double P_star = 0.0;
};

// inf_{P >= 0} k^2 P + ((sqrt(kappa(P)) - sqrt(P))+)^2. The second term
// vanishes for P >= kappa(0), so the search bracket is [0, 2 kappa(0)]
// (a subset of [0, max(sigma0^2, 1)] that always contains the minimizer).
LowerBound lower_bound_bayes(const ProblemParams& params, double h_bits);

// Mutual-information bound 1/2 log2(2 pi e ((sigma0+sqrt(P))^2+1) / 2^{2h}),
// in bits per dimension.
double capacity_bound(double P, double sigma0, double h_bits);

// D(R) = sigma0^2 2^{-2R}.
double distortion_rate_gaussian(double sigma0_sq, double R);

// mu <= 200 a^2 / 2^{2h}; requires a >= 1 (unit variance forces it).
double mu_bound(double a, double h_bits);

// min(3k^2, 3).
double upper_bound_adversarial(double k);

// inf_{P >= 0} k^2 P + ((sqrt(6/(pi e)) - sqrt(P))+)^2 over P in [0, 6/(pi e)].
LowerBound lower_bound_adversarial(double k);

// upper/lower with the degenerate rule: 1 when both are zero, +inf when only
// the lower bound is zero.
double finite_ratio(double upper, double lower);

BoundReport bayes_bound_report(const ProblemParams& params, const NoiseModel& noise);
BoundReport adversarial_bound_report(double k);

}  // namespace witbench
