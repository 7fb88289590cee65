#include "witbench/strategies.hpp"

#include <cmath>

#include "witbench/bounds.hpp"

namespace witbench {

Strategy quantizer_strategy(double spacing, double offset) {
  if (!(spacing > 0.0) || !std::isfinite(spacing) || !std::isfinite(offset))
    throw std::invalid_argument("quantizer_strategy: spacing must be positive and finite");
  // Ties at bin edges land on a half-integer index; nearbyint under the
  // default rounding mode resolves them to the even lattice index.
  auto nearest = [spacing, offset](double x) {
    return offset + std::nearbyint((x - offset) / spacing) * spacing;
  };
  Strategy st;
  st.gamma1 = [nearest](double x0) { return nearest(x0) - x0; };
  st.gamma2 = nearest;
  st.label = "quantizer";
  st.quantizer = QuantizerShape{spacing, offset};
  return st;
}

Strategy zero_input_strategy(double sigma0, double sigma_z2) {
  if (!(sigma_z2 > 0.0)) throw std::invalid_argument("zero_input_strategy: sigma_z2 must be positive");
  if (!(sigma0 >= 0.0)) throw std::invalid_argument("zero_input_strategy: sigma0 must be non-negative");
  const double gain = sigma0 * sigma0 / (sigma0 * sigma0 + sigma_z2);
  Strategy st;
  st.gamma1 = [](double) { return 0.0; };
  st.gamma2 = [gain](double y2) { return gain * y2; };
  st.label = "zero-input";
  return st;
}

Strategy zero_forcing_strategy() {
  Strategy st;
  st.gamma1 = [](double x0) { return -x0; };
  st.gamma2 = [](double) { return 0.0; };
  st.label = "zero-forcing";
  return st;
}

Strategy linear_strategy(const LinearStrategySpec& spec) {
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta))
    throw std::invalid_argument("linear_strategy: gains must be finite");
  const double alpha = spec.alpha;
  const double beta = spec.beta;
  Strategy st;
  st.gamma1 = [alpha](double x0) { return alpha * x0; };
  st.gamma2 = [beta](double y2) { return beta * y2; };
  st.label = "linear";
  return st;
}

LinearOptimum optimal_linear_cost(const ProblemParams& params) {
  const double sigma0 = params.sigma0;
  if (sigma0 == 0.0) return {0.0, 0.0};
  const double k2 = params.k * params.k;
  // J(P) = k^2 P + t^2/(t^2+1) with t = (sigma0 - sqrt(P))+, searched in the
  // sqrt(P) domain over [0, sigma0] (i.e. P in [0, sigma0^2]).
  auto objective = [&](double s) {
    const double t = sigma0 - s;
    return k2 * s * s + t * t / (t * t + 1.0);
  };
  const ScalarMin r = minimize_scalar(objective, 0.0, sigma0);
  return {r.value, r.argmin * r.argmin};
}

LinearStrategySpec optimal_linear_spec(double sigma0, double P) {
  LinearStrategySpec spec;
  if (sigma0 <= 0.0) return spec;  // alpha = beta = 0
  const double alpha = -std::sqrt(P) / sigma0;
  const double tilde = sigma0 * (1.0 + alpha);  // effective state std-dev
  spec.alpha = alpha;
  spec.beta = tilde * tilde / (tilde * tilde + 1.0);
  return spec;
}

Strategy best_strategy(const ProblemParams& params, const NoiseModel& noise) {
  const UpperBound up = upper_bound_bayes(params, noise);
  if (up.winner == "quantizer") return quantizer_strategy(2.0 * noise.a);
  if (up.winner == "zero-forcing") return zero_forcing_strategy();
  return zero_input_strategy(params.sigma0, 1.0);
}

}  // namespace witbench
