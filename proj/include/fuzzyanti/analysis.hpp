// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzyanti/space.hpp"
#include "fuzzyanti/verdict.hpp"

namespace fuzzyanti {

/// Scalar factor g(n) of the generator x_n = offset + g(n) * direction.
enum class SequenceKind {
  Constant,     // 1
  Harmonic,     // 1/n
  Geometric,    // ratio^n
  Linear,       // n
  Alternating,  // (-1)^n
};

std::string_view to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(std::string_view name);

struct SequenceSpec {
  SequenceKind kind = SequenceKind::Harmonic;
  Vector offset;     // empty means the origin
  Vector direction;  // x_0 in the usual notation
  double ratio = 0.5;
  std::size_t horizon = 10000;
  FuzzyAntiNorm space;

  void validate() const;
  double scale(std::size_t n) const;
  Vector term(std::size_t n) const;  // n >= 1
  Vector offset_or_zero() const;
};

/// Outcome of the finite-horizon tail test on values v_1..v_N against level r.
struct TailOutcome {
  Status status = Status::Inconclusive;
  std::size_t n0 = 0;         // least n with v_m < r for all n <= m <= N (Certified)
  std::size_t witness_n = 0;  // index of the violating value (Refuted)
  double witness_value = 0.0;
};

/// Certified when some n0 exists and the last quarter of the values all sit
/// below r; Refuted when the last quarter all sit at or above r; Inconclusive
/// otherwise. values[i] belongs to index n = i + 1.
TailOutcome tail_criterion(std::span<const double> values, double r);

/// Convergence x_n -> limit, checked separately for each t. When the deviation
/// x_n - limit is a nonincreasing multiple of a fixed vector, the membership is
/// monotone in n and the certification is labelled "tail-bound".
Verdict check_convergent(const SequenceSpec& s, const Vector& limit, std::span<const double> t_grid, double r);

/// Cauchy test over pairs (n, n+p), 1 <= p <= p_max, n + p <= horizon.
Verdict check_cauchy(const SequenceSpec& s, std::span<const double> t_grid, double r, std::size_t p_max);

/// Searches r in {0.05, 0.1, 0.25, 0.5} and t = 2^j, j = 0..200, for a pair with
/// nu(x,t) < r at every point. Finite sets never refute, so an exhausted
/// search is Inconclusive.
Verdict check_bounded_set(std::span<const Vector> points, const Membership& nu);
Verdict check_bounded_set(std::span<const Vector> points, const FuzzyAntiNorm& space);

}  // namespace fuzzyanti
