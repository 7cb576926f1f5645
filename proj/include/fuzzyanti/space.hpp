// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "fuzzyanti/conorm.hpp"
#include "fuzzyanti/vector.hpp"
#include "fuzzyanti/verdict.hpp"

namespace fuzzyanti {

enum class Family {
  Harmonic,         // k|x| / (t + k|x|)
  QuadraticCapped,  // 2|x|^2 / (t^2 + |x|^2) for t > |x|, 1 on (0, |x|]
  RatioSimple,      // same shape as Harmonic, separate tag for scalar-map fixtures
};

/// A fuzzy anti-norm nu : R^n x R -> [0,1] built on a crisp norm.
struct FuzzyAntiNorm {
  Family family = Family::Harmonic;
  double k = 1.0;  // scale for Harmonic / RatioSimple, ignored otherwise
  CrispNorm crisp = CrispNorm::Euclidean;
  std::size_t dimension = 1;

  static FuzzyAntiNorm harmonic(double k, CrispNorm crisp, std::size_t dimension);
  static FuzzyAntiNorm quadratic_capped(CrispNorm crisp, std::size_t dimension);
  static FuzzyAntiNorm ratio_simple(double k, CrispNorm crisp, std::size_t dimension);

  void validate() const;

  /// Membership as a function of the crisp norm w = |x| and the radius t.
  double profile(double w, double t) const noexcept;

  /// nu(x, t). Throws DimensionMismatch if x has the wrong dimension.
  double operator()(const Vector& x, double t) const;

  double crisp_norm(const Vector& x) const { return norm(crisp, x); }

  /// Config-file spelling, e.g. "harmonic(k=2)" or "quadratic-capped".
  std::string family_name() const;
};

double antinorm_eval(const FuzzyAntiNorm& n, const Vector& x, double t);

/// Parses "harmonic(k=...)", "quadratic-capped" or "ratio-simple(k=...)".
FuzzyAntiNorm parse_antinorm(std::string_view family, CrispNorm crisp, std::size_t dimension);

/// Arbitrary membership function, used to exercise the checkers on mutants.
struct Membership {
  std::size_t dimension = 1;
  std::function<double(const Vector&, double)> eval;

  static Membership of(const FuzzyAntiNorm& n);
};

inline constexpr std::size_t kAxiomCount = 7;

/// Labels "(i)" ... "(vii)".
std::string_view axiom_label(std::size_t index);

using AxiomVerdicts = std::array<Verdict, kAxiomCount>;

/// One verdict per anti-norm axiom (i)-(vii), in order.
///
/// (i)   nu(x,t) = 1 for t <= 0.
/// (ii)  nu(x,t) = 0 for t > 0 iff x is the origin.
/// (iii) nu(cx,t) = nu(x,t/|c|), with c log-uniform in [1e-3,1e3] and random sign.
/// (iv)  nu(x+y,s+t) <= nu(x,s) <> nu(y,t).
/// (v)   nu(x,T) <= tol at a horizon grown by doubling from 1 (200 doublings).
///       Exhausting the budget is Inconclusive; a limit is not refutable by sampling.
/// (vi)  for x != 0 the supremum of nu(x,.) reaches 1 - tol on t = 2^-j, j >= 0.
///       Not reaching it is Inconclusive for the same reason.
/// (vii) strict decrease between consecutive points of a log grid on
///       [1e-6, 1e12] where both values lie in (0,1).
///
/// Sample vectors are uniform in [-10,10]^n with the origin and the unit
/// vectors always included.
AxiomVerdicts check_antinorm_axioms(const Membership& nu, TConorm conorm, std::size_t sample_count,
                                    std::uint64_t seed, double tol = 1e-9);
AxiomVerdicts check_antinorm_axioms(const FuzzyAntiNorm& nu, TConorm conorm, std::size_t sample_count,
                                    std::uint64_t seed, double tol = 1e-9);

}  // namespace fuzzyanti
