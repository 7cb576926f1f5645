// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "fuzzyanti/operators.hpp"

namespace fuzzyanti::detail {

enum class Step { Continue, Violated, Negligible };

/// {1} followed by the grid, dropping a repeated 1.
inline std::vector<double> anchored(const GridSpec& g) {
  std::vector<double> out{1.0};
  for (double v : g.values()) {
    if (v != 1.0) out.push_back(v);
  }
  return out;
}

/// Calls visit(t) over the base radii, then over t_max 2^k until visit reports
/// Negligible or t passes 1e300. Returns the violating radius, if any.
template <class Visit>
std::optional<double> scan_radii(const std::vector<double>& base, double t_max, Visit&& visit) {
  for (double t : base) {
    if (visit(t) == Step::Violated) return t;
  }
  for (double t = 2.0 * t_max; t <= 1e300; t *= 2.0) {
    const Step s = visit(t);
    if (s == Step::Violated) return t;
    if (s == Step::Negligible) break;
  }
  return std::nullopt;
}

/// Same shape for deviation magnitudes, with a halving tail below m_min.
template <class Visit>
std::optional<double> scan_magnitudes(const std::vector<double>& base, double m_min, Visit&& visit) {
  for (double m : base) {
    if (visit(m) == Step::Violated) return m;
  }
  for (double m = 0.5 * m_min; m >= 1e-300; m *= 0.5) {
    const Step s = visit(m);
    if (s == Step::Violated) return m;
    if (s == Step::Negligible) break;
  }
  return std::nullopt;
}

inline bool negligible(double a, double b) { return a <= kTailFloor && b <= kTailFloor; }

void require_linear(const BoundednessCheck& b);
void require_positive(double v, const char* what);
void require_open_unit(double v, const char* what);

}  // namespace fuzzyanti::detail
