#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "witbench/density.hpp"
#include "witbench/sim.hpp"
#include "witbench/sweep.hpp"

namespace {

using namespace witbench;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void print_kv(const char* key, const std::string& value) {
  std::cout << key << " = " << value << '\n';
}

void print_kv(const char* key, double value) { print_kv(key, fmt(value)); }

// Noise selectors that are not built-in names must point at an existing
// density file; a missing path is a bad flag value (usage), a bad file is I/O.
NoiseModel load_noise(const std::string& selector) {
  if (selector != "uniform" && selector != "triangular" &&
      !std::filesystem::exists(selector))
    throw std::invalid_argument("unknown noise selector (not a builtin, not a file): " +
                                selector);
  return resolve_noise(selector);
}

Strategy make_strategy(const std::string& name, const ProblemParams& params,
                       const NoiseModel& noise, double alpha, double beta,
                       double spacing) {
  if (name == "quantizer")
    return quantizer_strategy(spacing > 0.0 ? spacing : 2.0 * noise.a);
  if (name == "zero-input") return zero_input_strategy(params.sigma0, 1.0);
  if (name == "zero-forcing") return zero_forcing_strategy();
  if (name == "zero-input-passthrough") {
    Strategy st = linear_strategy({0.0, 1.0});
    st.label = "zero-input-passthrough";
    return st;
  }
  if (name == "linear") return linear_strategy({alpha, beta});
  if (name == "best") return best_strategy(params, noise);
  throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad list entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty grid list");
  return out;
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3)
    throw std::invalid_argument("range must be LO:HI:COUNT, got: " + text);
  return log_grid(lo, hi, count);
}

void parse_interval(const std::string& text, double& lo, double& hi) {
  if (std::sscanf(text.c_str(), "%lf:%lf", &lo, &hi) != 2)
    throw std::invalid_argument("interval must be LO:HI, got: " + text);
}

std::vector<double> json_grid(const nlohmann::json& g) {
  if (g.is_array()) return g.get<std::vector<double>>();
  return log_grid(g.at("lo").get<double>(), g.at("hi").get<double>(),
                  g.at("count").get<int>());
}

void apply_config_file(const std::string& path, SweepConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("k_grid")) cfg.k_grid = json_grid(j.at("k_grid"));
  if (j.contains("sigma0_grid")) cfg.sigma0_grid = json_grid(j.at("sigma0_grid"));
  if (j.contains("noise")) cfg.noise = j.at("noise").get<std::string>();
  if (j.contains("n")) cfg.n = j.at("n").get<long long>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("m")) cfg.m = j.at("m").get<int>();
  if (j.contains("out_path")) cfg.out_path = j.at("out_path").get<std::string>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  if (j.contains("adversarial")) cfg.adversarial = j.at("adversarial").get<bool>();
}

int run(int argc, char** argv) {
  CLI::App app{"witbench: strategies, Monte Carlo, and bound certification for a "
               "bounded-noise decentralized control benchmark"};
  app.require_subcommand(1);

  // bounds
  auto* cmd_b = app.add_subcommand("bounds", "analytic upper/lower bounds at one point");
  double b_k = 1.0, b_sigma0 = 1.0;
  std::string b_noise = "uniform";
  cmd_b->add_option("--k", b_k, "input-cost weight (> 0)")->required();
  cmd_b->add_option("--sigma0", b_sigma0, "initial-state std-dev (>= 0)");
  cmd_b->add_option("--noise", b_noise, "uniform | triangular | density file");

  // simulate
  auto* cmd_s = app.add_subcommand("simulate", "Monte Carlo cost of one strategy");
  double s_k = 1.0, s_sigma0 = 1.0, s_alpha = 0.0, s_beta = 0.0, s_spacing = 0.0;
  std::string s_noise = "uniform", s_strategy;
  long long s_n = 100000;
  std::uint64_t s_seed = 1;
  int s_m = 1;
  cmd_s->add_option("--strategy", s_strategy, "strategy name")
      ->required()
      ->check(CLI::IsMember({"quantizer", "zero-input", "zero-forcing",
                             "zero-input-passthrough", "linear", "best"}));
  cmd_s->add_option("--k", s_k, "input-cost weight (> 0)")->required();
  cmd_s->add_option("--sigma0", s_sigma0, "initial-state std-dev (>= 0)");
  cmd_s->add_option("--noise", s_noise, "uniform | triangular | density file");
  cmd_s->add_option("--alpha", s_alpha, "linear first-stage gain");
  cmd_s->add_option("--beta", s_beta, "linear second-stage gain");
  cmd_s->add_option("--spacing", s_spacing, "quantizer spacing (default 2a)");
  cmd_s->add_option("--n", s_n, "Monte Carlo samples (>= 100)");
  cmd_s->add_option("--seed", s_seed, "RNG seed");
  cmd_s->add_option("--m", s_m, "vector length");

  // adversarial
  auto* cmd_a = app.add_subcommand("adversarial", "grid-searched worst-case cost");
  double a_k = 1.0, a_sigma0 = 1.0, a_alpha = 0.0, a_beta = 0.0, a_spacing = 0.0;
  double a_zmargin = 1e-12;
  std::string a_strategy, a_range;
  int a_grid = 2001;
  cmd_a->add_option("--strategy", a_strategy, "strategy name")
      ->required()
      ->check(CLI::IsMember({"quantizer", "zero-input", "zero-forcing",
                             "zero-input-passthrough", "linear", "best"}));
  cmd_a->add_option("--k", a_k, "input-cost weight (> 0)")->required();
  cmd_a->add_option("--sigma0", a_sigma0, "std-dev used by estimator gains");
  cmd_a->add_option("--x0-range", a_range, "search box LO:HI (default strategy-scaled)");
  cmd_a->add_option("--grid", a_grid, "grid points per axis (>= 3)");
  cmd_a->add_option("--z-margin", a_zmargin, "relative inset from |z| = sqrt(3)");
  cmd_a->add_option("--alpha", a_alpha, "linear first-stage gain");
  cmd_a->add_option("--beta", a_beta, "linear second-stage gain");
  cmd_a->add_option("--spacing", a_spacing, "quantizer spacing (default 2 sqrt(3))");

  // sweep
  auto* cmd_w = app.add_subcommand("sweep", "grid sweep with certification");
  std::string w_krange, w_klist, w_srange, w_slist, w_noise, w_out, w_format, w_config;
  long long w_n = -1;
  std::uint64_t w_seed = 0;
  int w_m = -1;
  bool w_adversarial = false;
  cmd_w->add_option("--k-range", w_krange, "log-spaced k grid LO:HI:COUNT");
  cmd_w->add_option("--k-list", w_klist, "explicit k grid v1,v2,...");
  cmd_w->add_option("--sigma0-range", w_srange, "log-spaced sigma0 grid LO:HI:COUNT");
  cmd_w->add_option("--sigma0-list", w_slist, "explicit sigma0 grid v1,v2,...");
  cmd_w->add_option("--noise", w_noise, "uniform | triangular | density file");
  cmd_w->add_option("--n", w_n, "Monte Carlo samples per point (>= 100)");
  cmd_w->add_option("--seed", w_seed, "RNG seed");
  cmd_w->add_option("--m", w_m, "vector length");
  cmd_w->add_option("--out", w_out, "output path ('-' = stdout)");
  cmd_w->add_option("--format", w_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_w->add_flag("--adversarial", w_adversarial, "sweep the adversarial model over k");
  cmd_w->add_option("--config", w_config, "JSON config file (same keys as the sweep config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (cmd_b->parsed()) {
    const ProblemParams params{b_k, b_sigma0, 1};
    validate(params);
    const NoiseModel noise = load_noise(b_noise);
    const BoundReport report = bayes_bound_report(params, noise);
    print_kv("k", params.k);
    print_kv("sigma0", params.sigma0);
    print_kv("noise", noise.label);
    print_kv("upper", report.upper);
    print_kv("lower", report.lower);
    print_kv("p_star", report.P_star);
    print_kv("ratio", report.ratio);
    print_kv("mu_bound", mu_bound(noise.a, noise.h_bits));
    print_kv("winner", report.winning_strategy);
    return 0;
  }

  if (cmd_s->parsed()) {
    const ProblemParams params{s_k, s_sigma0, s_m};
    validate(params);
    const NoiseModel noise = load_noise(s_noise);
    const Strategy strategy =
        make_strategy(s_strategy, params, noise, s_alpha, s_beta, s_spacing);
    const McEstimate est = monte_carlo_cost(params, strategy, noise, s_n, s_seed);
    const BoundReport report = bayes_bound_report(params, noise);
    print_kv("strategy", strategy.label);
    print_kv("mean", est.mean);
    print_kv("ci_halfwidth", est.ci_halfwidth);
    print_kv("n", static_cast<double>(est.n));
    print_kv("seed", static_cast<double>(est.seed));
    print_kv("upper", report.upper);
    print_kv("lower", report.lower);
    return 0;
  }

  if (cmd_a->parsed()) {
    const ProblemParams params{a_k, a_sigma0, 1};
    validate(params);
    const NoiseModel noise = uniform_noise();  // adversarial z is |z| < sqrt(3)
    const Strategy strategy =
        make_strategy(a_strategy, params, noise, a_alpha, a_beta, a_spacing);
    double lo, hi;
    if (!a_range.empty()) {
      parse_interval(a_range, lo, hi);
      if (!(lo < hi)) throw std::invalid_argument("empty x0 range: " + a_range);
    } else {
      const double scale =
          strategy.quantizer ? strategy.quantizer->spacing : 1.0;
      hi = 10.0 * std::max(params.sigma0, 1.0) * scale;
      lo = -hi;
    }
    const WorstCase w = worst_case_cost(params, strategy, lo, hi, a_grid, a_zmargin);
    const BoundReport report = adversarial_bound_report(params.k);
    print_kv("strategy", strategy.label);
    print_kv("k", params.k);
    print_kv("value", w.value);
    print_kv("at_x0", w.at_x0);
    print_kv("at_z", w.at_z);
    print_kv("on_x0_boundary", std::string(w.on_x0_boundary ? "true" : "false"));
    print_kv("upper", report.upper);
    print_kv("lower", report.lower);
    print_kv("p_star", report.P_star);
    print_kv("ratio", report.ratio);
    return 0;
  }

  // sweep
  SweepConfig cfg;
  if (!w_config.empty()) apply_config_file(w_config, cfg);
  if (cmd_w->count("--k-range") && cmd_w->count("--k-list"))
    throw std::invalid_argument("choose one of --k-range / --k-list");
  if (cmd_w->count("--sigma0-range") && cmd_w->count("--sigma0-list"))
    throw std::invalid_argument("choose one of --sigma0-range / --sigma0-list");
  if (cmd_w->count("--k-range")) cfg.k_grid = parse_range(w_krange);
  if (cmd_w->count("--k-list")) cfg.k_grid = parse_list(w_klist);
  if (cmd_w->count("--sigma0-range")) cfg.sigma0_grid = parse_range(w_srange);
  if (cmd_w->count("--sigma0-list")) cfg.sigma0_grid = parse_list(w_slist);
  if (cmd_w->count("--noise")) cfg.noise = w_noise;
  if (cmd_w->count("--n")) cfg.n = w_n;
  if (cmd_w->count("--seed")) cfg.seed = w_seed;
  if (cmd_w->count("--m")) cfg.m = w_m;
  if (cmd_w->count("--out")) cfg.out_path = w_out;
  if (cmd_w->count("--format")) cfg.format = w_format;
  if (w_adversarial) cfg.adversarial = true;
  if (cfg.noise != "uniform" && cfg.noise != "triangular" &&
      !std::filesystem::exists(cfg.noise))
    throw std::invalid_argument("unknown noise selector (not a builtin, not a file): " +
                                cfg.noise);
  std::string error_message;
  const int code = cmd_sweep(cfg, error_message);
  if (!error_message.empty()) std::cerr << "error: " << error_message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
