// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzyanti/alpha.hpp"
#include "fuzzyanti/analysis.hpp"
#include "fuzzyanti/maps.hpp"
#include "fuzzyanti/sampling.hpp"
#include "fuzzyanti/space.hpp"
#include "fuzzyanti/verdict.hpp"

namespace fuzzyanti {

/// Relative slack of every sampled inequality: a <= b fails only when
/// a - b > kInequalitySlack * max(|a|, |b|).
inline constexpr double kInequalitySlack = 1e-12;

inline bool exceeds(double a, double b) {
  return a - b > kInequalitySlack * std::max(std::abs(a), std::abs(b));
}

/// Memberships at or below this value are treated as numerically zero when
/// deciding how far the tail scans run.
inline constexpr double kTailFloor = 1e-300;

inline constexpr std::size_t kDefaultBudget = 50'000'000;

/// A map between two fuzzy anti-normed spaces, together with the sampling plan
/// used to certify or refute statements about it.
///
/// Points are x = m u for directions u (the signed basis vectors first, then
/// `x_samples` random unit directions when the dimension exceeds 1) and
/// magnitudes m (1 first, then the `magnitudes` grid). Radii are t = 1, then
/// the `t_grid`, then a doubling tail past its maximum that stops once every
/// membership involved has dropped to kTailFloor. Continuity checks perturb x0
/// by h = m u with m from 1, the `deviation_grid`, and a halving tail below its
/// minimum. The first violation in this order is the reported witness.
///
/// For continuity the image difference T x - T x0 is only known up to
/// rounding, so its crisp norm is lowered by a rounding allowance before the
/// conclusion is compared; a violation is reported only when it survives that.
struct BoundednessCheck {
  FuzzyAntiNorm domain_norm;
  FuzzyAntiNorm codomain_norm;
  Mapping map;
  std::size_t x_samples = 8;
  GridSpec t_grid{1e-3, 1e6, 61};
  std::uint64_t seed = 42;
  GridSpec magnitudes{1e-3, 1e3, 13};
  GridSpec delta_grid{1e-6, 1e3, 46};
  GridSpec deviation_grid{1e-9, 1e6, 301};

  void validate() const;
};

/// Unit directions of the sampling plan, in sampling order.
std::vector<Vector> sample_directions(const BoundednessCheck& b);

/// The x samples of the boundedness checks, in sampling order.
std::vector<Vector> sample_points(const BoundednessCheck& b);

// ---------------------------------------------------------------------------
// Boundedness (linear maps only; nonlinear maps raise ValidationError)

/// nu_V(T x, t) <= nu_U(x, t / M) at every sampled (x, t).
/// Witness values: t, lhs, rhs, M.
Verdict check_strong_anti_bounded(const BoundednessCheck& b, double M);

struct StrongBoundSweep {
  double M = 0.0;
  Verdict verdict;
};

struct StrongBoundSearch {
  std::optional<double> constant;
  std::vector<StrongBoundSweep> sweep;      // M = 2^0 ... 2^32, in order, until the first pass
  std::vector<StrongBoundSweep> bisection;  // refinement steps
};

/// Least certifying M on the sweep 2^0..2^32, refined by bisection between the
/// last failing and first passing sweep values to 1e-6 relative width.
StrongBoundSearch search_strong_bound(const BoundednessCheck& b);

/// nu_U(x, t / M_alpha) <= 1 - alpha  =>  nu_V(T x, t) <= 1 - alpha.
Verdict check_weak_anti_bounded(const BoundednessCheck& b, double alpha, double M_alpha);

/// Evaluates the weak implication at a single (x, t). Refuted if it fails there.
Verdict weak_bound_at(const BoundednessCheck& b, double alpha, double M_alpha, const Vector& x, double t);

enum class UniformDirection {
  PaperGE,    // |T x|*_alpha >= M |x|*_alpha
  DerivedLE,  // |T x|*_alpha <= M |x|*_alpha
};

/// alpha-norm comparison over the sampled points and the alpha grid of
/// `domain`. Equality is allowed to 10 bisection_tol, scaled by max(1, M |x|*_alpha).
/// Witness values: alpha, lhs = |T x|*_alpha, rhs = M |x|*_alpha.
Verdict check_uniform_anti_bounded(const BoundednessCheck& b, const AlphaNormProfile& domain,
                                   const AlphaNormProfile& codomain, double M, UniformDirection direction);

// ---------------------------------------------------------------------------
// Continuity (any map)

/// For each eps, the largest delta among `deltas` with
/// nu_V(T x - T x0, eps) <= nu_U(x - x0, delta) at all sampled x.
/// Constants "delta[eps=..]". Refuted for the first eps that admits no delta,
/// with the witness for the smallest delta tried. Inconclusive once `budget`
/// evaluations are spent.
Verdict check_strong_continuity_at(const BoundednessCheck& b, const Vector& x0, std::span<const double> eps_grid,
                                   std::span<const double> deltas, std::size_t budget = kDefaultBudget);
Verdict check_strong_continuity_at(const BoundednessCheck& b, const Vector& x0, std::span<const double> eps_grid);

/// nu_U(x - x0, delta) <= 1 - alpha  =>  nu_V(T x - T x0, eps) <= 1 - alpha.
Verdict check_weak_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha,
                                 std::span<const double> deltas, std::size_t budget = kDefaultBudget);
Verdict check_weak_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha);

/// nu_U(x - x0, delta) < beta  =>  nu_V(T x - T x0, eps) < alpha, searched over
/// delta (descending) then beta (descending). beta is unconstrained in (0,1).
Verdict check_fuzzy_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha,
                                  std::span<const double> deltas, std::span<const double> betas,
                                  std::size_t budget = kDefaultBudget);
Verdict check_fuzzy_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha);

/// Default beta grid {0.05, 0.10, ..., 0.95}.
std::vector<double> default_beta_grid();

/// Every sequence that converges to x0 (per check_convergent at level r) must
/// have an image converging to T x0 under the same tail criterion. Sequences
/// that fail to converge are skipped and listed in the note.
Verdict check_sequential_continuity_at(const BoundednessCheck& b, const Vector& x0,
                                       std::span<const SequenceSpec> sequences, std::span<const double> t_grid,
                                       double r = 0.05);

// ---------------------------------------------------------------------------
// Theorem lattice

struct LatticeFixture {
  std::string name;
  BoundednessCheck check;
};

/// "zero", "identity", "example-4-3", "example-4-6".
LatticeFixture named_fixture(const std::string& name);
std::vector<std::string> named_fixture_names();

struct NotionRow {
  std::string notion;
  Verdict verdict;
};

/// One implication between notions, e.g. "strong-bounded => weak-bounded".
struct RuleCheck {
  std::string rule;
  bool exercised = false;  // the hypothesis was observed, so the conclusion was tested
  bool contradiction = false;
  std::string detail;
};

struct LatticeReport {
  std::string fixture;
  std::vector<NotionRow> notions;
  std::vector<RuleCheck> rules;
  std::vector<std::string> notes;

  std::size_t contradictions() const;
  const NotionRow* notion(const std::string& name) const;
  const RuleCheck* rule(const std::string& name) const;
};

/// Runs every applicable checker on a linear fixture and cross-checks the
/// verdicts against the implications between the continuity and boundedness
/// notions. A combination that no theorem allows is a contradiction.
LatticeReport run_theorem_lattice(const LatticeFixture& fixture);

}  // namespace fuzzyanti
