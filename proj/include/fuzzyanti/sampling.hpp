// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace fuzzyanti {

/// Seeded generator. The raw mt19937_64 sequence is fixed by the standard, and
/// the conversions below avoid the implementation-defined std distributions,
/// so samples are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01();                      // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  double log_uniform(double lo, double hi);
  double sign();                           // +1 or -1
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Geometric grid from `min` to `max` inclusive.
struct GridSpec {
  double min = 1e-3;
  double max = 1e6;
  std::size_t points = 61;

  void validate() const;
  std::vector<double> values() const;
};

/// Evenly spaced exponents, so that decade points such as 1 and 10 come out exact.
std::vector<double> log_grid(double min, double max, std::size_t points);

/// Interior points {1/(n+1), ..., n/(n+1)} of the open unit interval.
std::vector<double> open_unit_grid(std::size_t points);

}  // namespace fuzzyanti
