#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witbench/core.hpp"

namespace witbench {

struct SweepConfig {
  std::vector<double> k_grid;
  std::vector<double> sigma0_grid;   // ignored when adversarial
  std::string noise = "uniform";     // "uniform" | "triangular" | density file path
  long long n = 100000;              // Monte Carlo samples per grid point
  std::uint64_t seed = 1;
  int m = 1;
  std::string out_path = "-";        // "-" writes to stdout
  std::string format = "csv";        // "csv" | "json"
  bool adversarial = false;
};

// count log-spaced values from lo to hi (count == 1 yields {lo}).
std::vector<double> log_grid(double lo, double hi, int count);

// Maps "uniform"/"triangular" to the built-in models, anything else to a
// density file path.
NoiseModel resolve_noise(const std::string& selector);

struct SweepResult {
  double max_ratio = 0.0;  // max upper/lower over all rows
  double mu = 0.0;         // certification threshold the ratios are held to
  bool certified = true;   // max_ratio <= mu
  std::string rendered;    // full CSV or JSON text, including the summary row
};

// Computes every row (concurrently; rows land in grid order) and renders the
// output. Throws std::invalid_argument for bad configs.
SweepResult run_sweep(const SweepConfig& config);

// run_sweep + write to config.out_path. Returns the process exit code:
// 0 success, 1 certification failure, 3 I/O failure (error_message set).
int cmd_sweep(const SweepConfig& config, std::string& error_message);

}  // namespace witbench
