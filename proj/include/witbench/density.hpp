#pragma once

#include <string>
#include <vector>

#include "witbench/core.hpp"

namespace witbench {

// Builds a NoiseModel from a tabulated density (piecewise-linear between the
// given nodes). The table is normalized to unit mass and then standardized to
// zero mean / unit variance; entropy comes from entropy_oracle on the
// standardized density and sampling uses exact inverse-CDF on the table.
// Throws InvalidDensity for negative values, non-increasing xs, zero mass, or
// entropy above the Gaussian ceiling.
NoiseModel custom_noise(std::vector<double> xs, std::vector<double> fs,
                        const std::string& label = "custom");

// Loads a two-column text file (x f(x) per line, '#' comments allowed).
// Throws std::runtime_error if the file cannot be read or parsed.
NoiseModel custom_noise_from_file(const std::string& path);

}  // namespace witbench
