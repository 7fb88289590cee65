#include "witbench/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace witbench {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw NumericError("minimize_scalar: non-finite objective value", x);
  return v;
}

}  // namespace

ScalarMin minimize_scalar(const std::function<double(double)>& objective, double lo,
                          double hi, int grid_points, double tol) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("minimize_scalar: need finite lo <= hi");
  if (grid_points < 1) throw std::invalid_argument("minimize_scalar: grid_points must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("minimize_scalar: tol must be positive");

  if (lo == hi) return {lo, checked(objective, lo)};

  const std::size_t n = static_cast<std::size_t>(grid_points);
  const double step = (hi - lo) / static_cast<double>(n);
  std::size_t best_i = 0;
  double best_x = lo;
  double best_v = checked(objective, lo);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = i == n ? hi : lo + static_cast<double>(i) * step;
    const double v = checked(objective, x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
      best_i = i;
    }
  }

  // Golden-section refinement on the bracketing triple of the best node.
  double a = best_i == 0 ? lo : lo + static_cast<double>(best_i - 1) * step;
  double b = best_i >= n ? hi : lo + static_cast<double>(best_i + 1) * step;
  if (b > hi) b = hi;
  constexpr double g = 0.6180339887498949;  // (sqrt(5)-1)/2
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = checked(objective, c);
  double fd = checked(objective, d);
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = checked(objective, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = checked(objective, d);
    }
  }
  const double rx = fc < fd ? c : d;
  const double rv = fc < fd ? fc : fd;
  if (rv < best_v) return {rx, rv};
  return {best_x, best_v};
}

UpperBound upper_bound_bayes(const ProblemParams& params, const NoiseModel& noise) {
  const double k2 = params.k * params.k;
  const double s2 = params.sigma0 * params.sigma0;
  const double terms[3] = {k2 * noise.a * noise.a, s2 / (s2 + 1.0), k2 * s2};
  static const char* names[3] = {"quantizer", "zero-input", "zero-forcing"};
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (terms[i] < terms[best]) best = i;
  return {terms[best], names[best]};
}

double kappa(double P, double sigma0, double h_bits) {
  if (sigma0 == 0.0) return 0.0;
  const double out_var = (sigma0 + std::sqrt(P)) * (sigma0 + std::sqrt(P)) + 1.0;
  return sigma0 * sigma0 * std::exp2(2.0 * h_bits) / (kTwoPiE * out_var);
}

LowerBound lower_bound_bayes(const ProblemParams& params, double h_bits) {
  const double sigma0 = params.sigma0;
  const double kappa0 = kappa(0.0, sigma0, h_bits);
  if (kappa0 <= 0.0) return {0.0, 0.0};
  const double k2 = params.k * params.k;
  // Minimized in the sqrt(P) domain: the second term dies at P = kappa(0) and
  // the objective grows past it, so [0, sqrt(2 kappa(0))] brackets the min.
  auto objective = [&](double s) {
    const double gap = std::max(std::sqrt(kappa(s * s, sigma0, h_bits)) - s, 0.0);
    return k2 * s * s + gap * gap;
  };
  const ScalarMin r = minimize_scalar(objective, 0.0, std::sqrt(2.0 * kappa0));
  return {r.value, r.argmin * r.argmin};
}

double capacity_bound(double P, double sigma0, double h_bits) {
  const double out_var = (sigma0 + std::sqrt(P)) * (sigma0 + std::sqrt(P)) + 1.0;
  return 0.5 * std::log2(kTwoPiE * out_var) - h_bits;
}

double distortion_rate_gaussian(double sigma0_sq, double R) {
  return sigma0_sq * std::exp2(-2.0 * R);
}

double mu_bound(double a, double h_bits) {
  if (!(a >= 1.0)) throw std::invalid_argument("mu_bound: a must be >= 1");
  return 200.0 * a * a / std::exp2(2.0 * h_bits);
}

double upper_bound_adversarial(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("upper_bound_adversarial: k must be positive");
  return std::min(3.0 * k * k, 3.0);
}

LowerBound lower_bound_adversarial(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("lower_bound_adversarial: k must be positive");
  const double c = std::sqrt(6.0 / (std::numbers::pi * std::numbers::e));
  const double k2 = k * k;
  auto objective = [&](double s) {
    const double gap = c - s;  // s stays in [0, c]
    return k2 * s * s + gap * gap;
  };
  const ScalarMin r = minimize_scalar(objective, 0.0, c);
  return {r.value, r.argmin * r.argmin};
}

double finite_ratio(double upper, double lower) {
  if (lower > 0.0) return upper / lower;
  if (upper == 0.0) return 1.0;
  return std::numeric_limits<double>::infinity();
}

BoundReport bayes_bound_report(const ProblemParams& params, const NoiseModel& noise) {
  const UpperBound up = upper_bound_bayes(params, noise);
  const LowerBound low = lower_bound_bayes(params, noise.h_bits);
  BoundReport report;
  report.upper = up.bound;
  report.lower = low.bound;
  report.P_star = low.P_star;
  report.ratio = finite_ratio(up.bound, low.bound);
  report.winning_strategy = up.winner;
  return report;
}

BoundReport adversarial_bound_report(double k) {
  const double up = upper_bound_adversarial(k);
  const LowerBound low = lower_bound_adversarial(k);
  BoundReport report;
  report.upper = up;
  report.lower = low.bound;
  report.P_star = low.P_star;
  report.ratio = finite_ratio(up, low.bound);
  report.winning_strategy = 3.0 * k * k <= 3.0 ? "quantizer" : "zero-input-passthrough";
  return report;
}

}  // namespace witbench
