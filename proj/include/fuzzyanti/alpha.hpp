// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "fuzzyanti/space.hpp"
#include "fuzzyanti/verdict.hpp"

namespace fuzzyanti {

/// nu(x, .) never dropped to 1 - alpha within the bracket budget, i.e. the
/// membership violates axiom (v) numerically.
class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BisectionOptions {
  double tol = 1e-9;     // absolute below 1, relative above
  double growth = 2.0;   // bracket growth factor
  int max_growth_steps = 200;
};

/// inf { t : nu(t) <= level } for a nonincreasing profile with nu(0) = 1.
/// Returns the upper end of the final bracket, which is a member of the set.
double level_crossing(const std::function<double(double)>& nu, double level, const BisectionOptions& opts);

/// alpha-anti-norm family of a fuzzy anti-norm, sampled on `alpha_grid`.
struct AlphaNormProfile {
  FuzzyAntiNorm source;
  std::vector<double> alpha_grid;  // strictly increasing, inside (0,1)
  double bisection_tol = 1e-9;
  double bracket_growth = 2.0;
  int max_doublings = 200;

  /// 99-point grid {0.01, ..., 0.99}.
  static AlphaNormProfile with_defaults(FuzzyAntiNorm source);

  void validate() const;
  BisectionOptions bisection() const { return {bisection_tol, bracket_growth, max_doublings}; }
  /// Largest gap between neighbouring grid points.
  double grid_spacing() const;
};

/// |x|*_alpha = inf { t : nu(x,t) <= 1 - alpha }; 0 at the origin.
double alpha_norm(const AlphaNormProfile& p, const Vector& x, double alpha);

/// Closed-form inversion for the built-in families:
/// Harmonic / RatioSimple k|x| alpha / (1 - alpha), QuadraticCapped |x| sqrt((1+alpha)/(1-alpha)).
double closed_form_alpha_norm(const FuzzyAntiNorm& n, const Vector& x, double alpha);

/// nu'(x,t) = inf { 1 - alpha : |x|*_alpha <= t } over the grid, with the
/// empty infimum equal to 1 and nu'(0, 0) = 1.
double reconstruct_nu(const AlphaNormProfile& p, const Vector& x, double t);

/// Certified iff alpha -> |x|*_alpha is nondecreasing on the grid (slack
/// 2 bisection_tol); Refuted with the offending neighbouring pair otherwise.
Verdict check_ascending_family(const AlphaNormProfile& p, const Vector& x);

/// CSV "alpha,alpha_norm".
void write_alpha_curve(std::ostream& os, const AlphaNormProfile& p, const Vector& x);

/// CSV "t,nu,nu_reconstructed".
void write_duality_curve(std::ostream& os, const AlphaNormProfile& p, const Vector& x, std::span<const double> ts);

}  // namespace fuzzyanti
