#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace witbench {

// Two-controller problem instance: first-stage cost weight k, initial-state
// standard deviation sigma0, vector length m (coordinates are iid).
struct ProblemParams {
  double k = 1.0;
  double sigma0 = 1.0;
  int m = 1;
};

// Throws std::invalid_argument unless k > 0, sigma0 >= 0, m >= 1, all finite.
void validate(const ProblemParams& params);

// Bounded zero-mean unit-variance observation noise. Samples drawn through
// `sampler` lie strictly inside (-a, a) and are a deterministic function of
// the seed.
struct NoiseModel {
  double a = 0.0;       // support half-width
  double h_bits = 0.0;  // differential entropy h(Z) in bits
  std::function<std::vector<double>(std::uint64_t seed, std::size_t count)> sampler;
  std::string label;
};

struct Realization {
  std::vector<double> x0;
  std::vector<double> z;
};

struct CostBreakdown {
  double first_stage = 0.0;   // k^2 ||u1||^2 / m
  double second_stage = 0.0;  // ||x2||^2 / m
  double total = 0.0;
};

struct Strategy;  // strategies.hpp

// Runs the closed loop u1 = gamma1(x0), x1 = x0 + u1, y2 = x1 + z,
// u2 = gamma2(y2), x2 = x1 - u2 coordinate-wise and returns the per-dimension
// quadratic costs. Throws std::invalid_argument on length mismatch with m.
CostBreakdown evaluate_cost(const ProblemParams& params, const Strategy& strategy,
                            const Realization& realization);

// Uniform on (-sqrt(3), sqrt(3)): unit variance, h = log2(2 sqrt(3)).
NoiseModel uniform_noise();

// Symmetric triangular on (-sqrt(6), sqrt(6)): unit variance,
// h = (1/2 + ln sqrt(6)) / ln 2.
NoiseModel triangular_noise();

struct InvalidDensity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Trapezoidal estimate of the differential entropy -int f log2 f in bits over
// [lo, hi] on a uniform grid of `grid_points` nodes. Throws InvalidDensity if
// the density is negative or does not integrate to 1 within 1e-6.
double entropy_oracle(const std::function<double(double)>& pdf, double lo, double hi,
                      int grid_points = 100000);

// 1/2 log2(2 pi e): the entropy ceiling for unit-variance noise.
double gaussian_entropy_bits();

}  // namespace witbench
