#pragma once

#include <functional>
#include <optional>
#include <string>

#include "witbench/core.hpp"

namespace witbench {

// Lattice geometry of a quantizing strategy; the adversarial search uses it
// to place exact bin-edge candidates.
struct QuantizerShape {
  double spacing = 0.0;
  double offset = 0.0;
};

// A control strategy is a pair of deterministic scalar maps applied
// coordinate-wise.
struct Strategy {
  std::function<double(double)> gamma1;  // x0 -> u1
  std::function<double(double)> gamma2;  // y2 -> u2
  std::string label;
  std::optional<QuantizerShape> quantizer;
};

struct LinearStrategySpec {
  double alpha = 0.0;  // u1 = alpha * x0
  double beta = 0.0;   // u2 = beta * y2
};

// gamma1 moves x0 onto the nearest point of offset + spacing*Z (ties at bin
// edges round toward the even lattice index); gamma2 decodes y2 to the
// nearest lattice point.
Strategy quantizer_strategy(double spacing, double offset = 0.0);

// gamma1 = 0; gamma2 is the LLSE gain sigma0^2 / (sigma0^2 + sigma_z2).
Strategy zero_input_strategy(double sigma0, double sigma_z2);

// gamma1 = -x0 (state forced to zero), gamma2 = 0.
Strategy zero_forcing_strategy();

Strategy linear_strategy(const LinearStrategySpec& spec);

struct LinearOptimum {
  double cost = 0.0;
  double P_star = 0.0;
};

// Minimum over P in [0, sigma0^2] of k^2 P + t^2/(t^2+1), t = (sigma0-sqrt(P))+.
LinearOptimum optimal_linear_cost(const ProblemParams& params);

// The (alpha, beta) pair attaining the linear cost at first-stage power P:
// alpha = -sqrt(P)/sigma0, beta from the effective state variance.
LinearStrategySpec optimal_linear_spec(double sigma0, double P);

// Picks among quantizer(2a) / zero-input / zero-forcing by their analytic
// cost bounds k^2 a^2, sigma0^2/(sigma0^2+1), k^2 sigma0^2; ties resolve in
// that listed order.
Strategy best_strategy(const ProblemParams& params, const NoiseModel& noise);

}  // namespace witbench
