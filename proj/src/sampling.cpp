// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/sampling.hpp"

#include <cmath>

#include "fuzzyanti/error.hpp"

namespace fuzzyanti {

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::sign() { return (engine_() >> 63) != 0 ? -1.0 : 1.0; }

void GridSpec::validate() const {
  if (!(min > 0.0)) throw ValidationError("grid minimum must be positive");
  if (!(max > min)) throw ValidationError("grid maximum must exceed its minimum");
  if (points < 2) throw ValidationError("grid needs at least two points");
}

std::vector<double> GridSpec::values() const {
  validate();
  return log_grid(min, max, points);
}

std::vector<double> log_grid(double min, double max, std::size_t points) {
  std::vector<double> out;
  if (points == 0) return out;
  if (points == 1) {
    out.push_back(min);
    return out;
  }
  const double lo = std::log10(min);
  const double hi = std::log10(max);
  // Rounded decade exponents keep points like 1e-3 and 1e6 exact.
  const double lo_r = std::abs(lo - std::round(lo)) < 1e-12 ? std::round(lo) : lo;
  const double hi_r = std::abs(hi - std::round(hi)) < 1e-12 ? std::round(hi) : hi;
  const double span = hi_r - lo_r;
  const auto steps = static_cast<double>(points - 1);
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    out.push_back(std::pow(10.0, lo_r + span * static_cast<double>(i) / steps));
  }
  return out;
}

std::vector<double> open_unit_grid(std::size_t points) {
  std::vector<double> out;
  out.reserve(points);
  const auto denom = static_cast<double>(points + 1);
  for (std::size_t i = 1; i <= points; ++i) out.push_back(static_cast<double>(i) / denom);
  return out;
}

}  // namespace fuzzyanti
