#include "witbench/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "parallel.hpp"
#include "witbench/density.hpp"
#include "witbench/rng.hpp"
#include "witbench/sim.hpp"

namespace witbench {

namespace {

// Fixed 12-significant-digit formatting: output files are byte-stable across
// runs and platforms with the same libc.
std::string fmt12g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Row {
  double k = 0.0;
  bool sigma0_inf = false;  // adversarial rows: sigma0 column reads "inf"
  double sigma0 = 0.0;
  std::string noise;
  int m = 1;
  double upper = 0.0, lower = 0.0, p_star = 0.0, ratio = 1.0, mu = 0.0;
  double mc_mean = 0.0, mc_ci = 0.0;
  bool has_linear = true;  // adversarial rows leave the linear columns empty
  double lin_cost = 0.0, lin_ratio = 1.0;
  std::string winner;
};

constexpr const char* kHeader =
    "k,sigma0,noise,m,upper,lower,p_star,ratio,mu_bound,mc_best_mean,mc_best_ci,"
    "linear_cost,linear_ratio,winner";

std::string csv_row(const Row& r) {
  std::ostringstream out;
  out << fmt12g(r.k) << ',' << (r.sigma0_inf ? "inf" : fmt12g(r.sigma0)) << ','
      << r.noise << ',' << r.m << ',' << fmt12g(r.upper) << ',' << fmt12g(r.lower)
      << ',' << fmt12g(r.p_star) << ',' << fmt12g(r.ratio) << ',' << fmt12g(r.mu)
      << ',' << fmt12g(r.mc_mean) << ',' << fmt12g(r.mc_ci) << ','
      << (r.has_linear ? fmt12g(r.lin_cost) : std::string()) << ','
      << (r.has_linear ? fmt12g(r.lin_ratio) : std::string()) << ',' << r.winner;
  return out.str();
}

std::string json_number(double v) {
  if (std::isfinite(v)) return fmt12g(v);
  return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string json_row(const Row& r) {
  std::ostringstream out;
  out << "{\"k\":" << json_number(r.k) << ",\"sigma0\":"
      << (r.sigma0_inf ? std::string("\"inf\"") : json_number(r.sigma0))
      << ",\"noise\":\"" << r.noise << "\",\"m\":" << r.m
      << ",\"upper\":" << json_number(r.upper) << ",\"lower\":" << json_number(r.lower)
      << ",\"p_star\":" << json_number(r.p_star) << ",\"ratio\":" << json_number(r.ratio)
      << ",\"mu_bound\":" << json_number(r.mu)
      << ",\"mc_best_mean\":" << json_number(r.mc_mean)
      << ",\"mc_best_ci\":" << json_number(r.mc_ci) << ",\"linear_cost\":"
      << (r.has_linear ? json_number(r.lin_cost) : std::string("null"))
      << ",\"linear_ratio\":"
      << (r.has_linear ? json_number(r.lin_ratio) : std::string("null"))
      << ",\"winner\":\"" << r.winner << "\"}";
  return out.str();
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("log_grid: count must be >= 1");
  if (!(lo > 0.0) || !(hi > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("log_grid: endpoints must be positive and finite");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double l0 = std::log10(lo);
  const double l1 = std::log10(hi);
  for (int i = 0; i < count; ++i)
    out.push_back(std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) /
                                      static_cast<double>(count - 1)));
  return out;
}

NoiseModel resolve_noise(const std::string& selector) {
  if (selector == "uniform") return uniform_noise();
  if (selector == "triangular") return triangular_noise();
  return custom_noise_from_file(selector);
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.k_grid.empty()) throw std::invalid_argument("sweep: k grid is empty");
  if (!config.adversarial && config.sigma0_grid.empty())
    throw std::invalid_argument("sweep: sigma0 grid is empty");
  if (config.n < 100) throw std::invalid_argument("sweep: n must be >= 100");
  if (config.m < 1) throw std::invalid_argument("sweep: m must be >= 1");
  if (config.format != "csv" && config.format != "json")
    throw std::invalid_argument("sweep: format must be csv or json");
  for (double k : config.k_grid)
    if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("sweep: k must be > 0");
  for (double s : config.sigma0_grid)
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::invalid_argument("sweep: sigma0 must be >= 0");

  const NoiseModel noise = resolve_noise(config.noise);

  std::vector<Row> rows;
  double mu;
  if (config.adversarial) {
    mu = 2.0 * std::numbers::pi * std::numbers::e;
    rows.resize(config.k_grid.size());
    detail::parallel_for(rows.size(), 0, [&](std::size_t i) {
      const double k = config.k_grid[i];
      const BoundReport b = adversarial_bound_report(k);
      Row row;
      row.k = k;
      row.sigma0_inf = true;
      row.noise = noise.label;
      row.m = config.m;
      row.upper = b.upper;
      row.lower = b.lower;
      row.p_star = b.P_star;
      row.ratio = b.ratio;
      row.mu = mu;
      // The simulation columns carry the grid-searched worst case of the
      // winning strategy; there is no Bayesian average or linear optimum here.
      Strategy strat = b.winning_strategy == "quantizer"
                           ? quantizer_strategy(2.0 * std::sqrt(3.0))
                           : linear_strategy({0.0, 1.0});
      const double box = 20.0 * std::sqrt(3.0);
      const WorstCase w =
          worst_case_cost({k, 1.0, 1}, strat, -box, box, 513, 1e-12);
      row.mc_mean = w.value;
      row.mc_ci = 0.0;
      row.has_linear = false;
      row.winner = b.winning_strategy;
      rows[i] = row;
    });
  } else {
    mu = mu_bound(noise.a, noise.h_bits);
    const std::size_t nk = config.k_grid.size();
    const std::size_t ns = config.sigma0_grid.size();
    rows.resize(nk * ns);
    detail::parallel_for(rows.size(), 0, [&](std::size_t idx) {
      const ProblemParams params{config.k_grid[idx / ns],
                                 config.sigma0_grid[idx % ns], config.m};
      const BoundReport b = bayes_bound_report(params, noise);
      const Strategy best = best_strategy(params, noise);
      const McEstimate mc = monte_carlo_cost_workers(
          params, best, noise, config.n, SplitMix64::mix(config.seed, idx), 1);
      const LinearOptimum lin = optimal_linear_cost(params);
      Row row;
      row.k = params.k;
      row.sigma0 = params.sigma0;
      row.noise = noise.label;
      row.m = config.m;
      row.upper = b.upper;
      row.lower = b.lower;
      row.p_star = b.P_star;
      row.ratio = b.ratio;
      row.mu = mu;
      row.mc_mean = mc.mean;
      row.mc_ci = mc.ci_halfwidth;
      row.lin_cost = lin.cost;
      row.lin_ratio = finite_ratio(lin.cost, std::min(mc.mean, b.upper));
      row.winner = b.winning_strategy;
      rows[idx] = row;
    });
  }

  double max_ratio = 0.0;
  for (const Row& row : rows) max_ratio = std::max(max_ratio, row.ratio);
  const bool certified = max_ratio <= mu;

  std::ostringstream out;
  if (config.format == "csv") {
    out << kHeader << '\n';
    for (const Row& row : rows) out << csv_row(row) << '\n';
    out << "summary,," << noise.label << ',' << config.m << ",,,," << fmt12g(max_ratio)
        << ',' << fmt12g(mu) << ",,,,," << (certified ? "pass" : "fail") << '\n';
  } else {
    out << "[\n";
    for (const Row& row : rows) out << "  " << json_row(row) << ",\n";
    out << "  {\"k\":\"summary\",\"sigma0\":null,\"noise\":\"" << noise.label
        << "\",\"m\":" << config.m
        << ",\"upper\":null,\"lower\":null,\"p_star\":null,\"ratio\":"
        << fmt12g(max_ratio) << ",\"mu_bound\":" << fmt12g(mu)
        << ",\"mc_best_mean\":null,\"mc_best_ci\":null,\"linear_cost\":null,"
        << "\"linear_ratio\":null,\"winner\":\"" << (certified ? "pass" : "fail")
        << "\"}\n]\n";
  }

  SweepResult result;
  result.max_ratio = max_ratio;
  result.mu = mu;
  result.certified = certified;
  result.rendered = out.str();
  return result;
}

int cmd_sweep(const SweepConfig& config, std::string& error_message) {
  const SweepResult result = run_sweep(config);
  if (config.out_path == "-" || config.out_path.empty()) {
    std::fwrite(result.rendered.data(), 1, result.rendered.size(), stdout);
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      error_message = "cannot open output file: " + config.out_path;
      return 3;
    }
    out << result.rendered;
    if (!out.good()) {
      error_message = "failed writing output file: " + config.out_path;
      return 3;
    }
  }
  return result.certified ? 0 : 1;
}

}  // namespace witbench
