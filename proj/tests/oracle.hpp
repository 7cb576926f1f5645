// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

// Reference values computed straight from the membership formulas, without
// going through the library. Used to cross-check the engine.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

inline double l2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// k w / (t + k w), 1 for t <= 0
inline double harmonic(double k, double w, double t) {
  if (t <= 0.0) return 1.0;
  return k * w / (t + k * w);
}

// 2 w^2 / (t^2 + w^2) above the plateau (0, w], 1 on it and for t <= 0
inline double quadratic(double w, double t) {
  if (t <= 0.0) return 1.0;
  if (w == 0.0) return 0.0;
  if (t <= w) return 1.0;
  return 2.0 * w * w / (t * t + w * w);
}

inline double harmonic_alpha(double k, double w, double a) { return k * w * a / (1.0 - a); }
inline double quadratic_alpha(double w, double a) { return w * std::sqrt((1.0 + a) / (1.0 - a)); }

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (n - 1)));
  return out;
}

// First (w, t) on the grid with lhs(w, t) > rhs(w, t) (relative 1e-12).
inline std::optional<std::pair<double, double>> first_violation(const std::function<double(double, double)>& lhs,
                                                                 const std::function<double(double, double)>& rhs,
                                                                 const std::vector<double>& ws,
                                                                 const std::vector<double>& ts) {
  for (double w : ws) {
    for (double t : ts) {
      const double a = lhs(w, t);
      const double b = rhs(w, t);
      if (a - b > 1e-12 * std::max(a, b)) return std::make_pair(w, t);
    }
  }
  return std::nullopt;
}

// Least M on [lo, hi] (to relative 1e-7) for which `holds(M)` is true, with
// holds monotone in M.
inline double least_constant(const std::function<bool(double)>& holds, double lo, double hi) {
  while (hi - lo > 1e-7 * hi) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Exhaustive scan of (0,1) at step h for some r with pred(r).
inline std::optional<double> grid_scan(const std::function<bool(double)>& pred, double h = 0.01) {
  for (double r = h; r < 1.0; r += h) {
    if (pred(r)) return r;
  }
  return std::nullopt;
}

}  // namespace oracle
