#include "witbench/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "witbench/rng.hpp"

namespace witbench {

namespace {

struct Table {
  std::vector<double> xs;
  std::vector<double> fs;
  std::vector<double> cum;  // cumulative mass up to each node, cum.back() == 1
};

// Exact moments of the piecewise-linear density: per-cell closed forms, no
// quadrature error, so standardization yields unit variance up to rounding.
void moments(const std::vector<double>& xs, const std::vector<double>& fs,
             double& mass, double& mean, double& second) {
  mass = mean = second = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double x0 = xs[i], f0 = fs[i], f1 = fs[i + 1];
    const double d = xs[i + 1] - x0;
    const double cell = d * (f0 + f1) / 2.0;
    const double mom1 = d * d * (f0 / 2.0 + (f1 - f0) / 3.0);          // int t f dt
    const double mom2 = d * d * d * (f0 / 3.0 + (f1 - f0) / 4.0);      // int t^2 f dt
    mass += cell;
    mean += x0 * cell + mom1;
    second += x0 * x0 * cell + 2.0 * x0 * mom1 + mom2;
  }
}

double interp(const Table& t, double x) {
  // support is the closed interval: keep the edge values, or densities that
  // do not vanish at the boundary lose their endpoint quadrature weight
  if (x < t.xs.front() || x > t.xs.back()) return 0.0;
  if (x == t.xs.back()) return t.fs.back();
  const auto it = std::upper_bound(t.xs.begin(), t.xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - t.xs.begin()) - 1;
  const double w = (x - t.xs[i]) / (t.xs[i + 1] - t.xs[i]);
  return t.fs[i] + w * (t.fs[i + 1] - t.fs[i]);
}

// Inverse CDF within cell i: solve f0 t + (f1-f0) t^2 / (2d) = target.
double invert_cell(const Table& t, std::size_t i, double target) {
  const double f0 = t.fs[i];
  const double slope = (t.fs[i + 1] - f0);
  const double d = t.xs[i + 1] - t.xs[i];
  double tt;
  if (std::abs(slope) * d < 1e-14 * std::max(f0, 1e-300)) {
    tt = target / f0;
  } else {
    const double disc = f0 * f0 + 2.0 * slope * target / d;
    tt = d * (std::sqrt(std::max(disc, 0.0)) - f0) / slope;
  }
  return t.xs[i] + std::clamp(tt, 0.0, d);
}

}  // namespace

NoiseModel custom_noise(std::vector<double> xs, std::vector<double> fs,
                        const std::string& label) {
  if (xs.size() != fs.size() || xs.size() < 3)
    throw InvalidDensity("custom_noise: need >= 3 matching (x, f) pairs");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(fs[i]) || fs[i] < 0.0)
      throw InvalidDensity("custom_noise: values must be finite with f >= 0");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw InvalidDensity("custom_noise: x column must be strictly increasing");
  }

  double mass, mean, second;
  moments(xs, fs, mass, mean, second);
  if (!(mass > 0.0)) throw InvalidDensity("custom_noise: density has zero mass");
  for (auto& f : fs) f /= mass;
  mean /= mass;
  second /= mass;
  const double var = second - mean * mean;
  if (!(var > 0.0)) throw InvalidDensity("custom_noise: density has zero variance");

  // Standardize to zero mean, unit variance: x' = (x - mean)/sd, f' = f * sd.
  const double sd = std::sqrt(var);
  for (auto& x : xs) x = (x - mean) / sd;
  for (auto& f : fs) f *= sd;

  auto table = std::make_shared<Table>();
  table->xs = std::move(xs);
  table->fs = std::move(fs);
  table->cum.assign(table->xs.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < table->xs.size(); ++i) {
    acc += (table->xs[i + 1] - table->xs[i]) * (table->fs[i] + table->fs[i + 1]) / 2.0;
    table->cum[i + 1] = acc;
  }
  const double total_mass = acc;  // == 1 up to rounding; keeps sampler units exact

  const double lo = table->xs.front();
  const double hi = table->xs.back();
  NoiseModel model;
  model.a = std::max(-lo, hi);
  model.label = label;
  model.h_bits =
      entropy_oracle([table](double x) { return interp(*table, x); }, lo, hi, 100000);
  if (model.h_bits > gaussian_entropy_bits() + 1e-9)
    throw InvalidDensity("custom_noise: entropy exceeds the Gaussian ceiling");
  if (!(model.a >= 1.0 - 1e-9))
    throw InvalidDensity("custom_noise: unit variance needs support half-width >= 1");

  model.sampler = [table, lo, hi, total_mass](std::uint64_t seed, std::size_t count) {
    SplitMix64 rng(seed);
    std::vector<double> out(count);
    const double inner_lo = std::nextafter(lo, hi);
    const double inner_hi = std::nextafter(hi, lo);
    for (auto& v : out) {
      const double u = rng.uniform_open() * total_mass;  // (0, total) strictly
      const auto it = std::upper_bound(table->cum.begin(), table->cum.end(), u);
      std::size_t i = static_cast<std::size_t>(it - table->cum.begin());
      i = i == 0 ? 0 : i - 1;
      if (i + 1 >= table->xs.size()) i = table->xs.size() - 2;
      v = std::clamp(invert_cell(*table, i, u - table->cum[i]), inner_lo, inner_hi);
    }
    return out;
  };
  return model;
}

NoiseModel custom_noise_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open density file: " + path);
  std::vector<double> xs, fs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    double x, f;
    if (row >> x >> f) {
      xs.push_back(x);
      fs.push_back(f);
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::runtime_error("density file " + path + ": malformed line " +
                               std::to_string(lineno));
    }
  }
  try {
    return custom_noise(std::move(xs), std::move(fs));
  } catch (const InvalidDensity& e) {
    throw std::runtime_error("density file " + path + ": " + e.what());
  }
}

}  // namespace witbench
