// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "fuzzyanti/verdict.hpp"

namespace fuzzyanti {

enum class ConormKind { Max, ProbabilisticSum, BoundedSum };

/// A t-conorm on [0,1]: commutative, associative, monotone, with identity 0.
struct TConorm {
  ConormKind kind = ConormKind::Max;

  /// Unchecked evaluation; operands are assumed to lie in [0,1].
  double operator()(double a, double b) const noexcept;
};

/// Checked evaluation; throws DomainError for operands outside [0,1].
double eval_conorm(TConorm c, double a, double b);

std::string_view to_string(ConormKind kind);

/// Accepts "max", "prob-sum" and "bounded-sum".
ConormKind parse_conorm(std::string_view name);

using BinaryOp = std::function<double(double, double)>;

/// Samples `sample_count` pseudo-random quadruples (plus the corners of the
/// unit square) and tests commutativity, associativity, the identity law,
/// monotonicity and closure of [0,1]. Equalities are checked to 1e-12.
Verdict check_conorm_axioms(const BinaryOp& op, std::size_t sample_count, std::uint64_t seed);
Verdict check_conorm_axioms(TConorm c, std::size_t sample_count, std::uint64_t seed);

/// Given r1 > r2 in (0,1), returns r in (0,1) with r1 > r <> r2, scanning down
/// geometrically from r1 - r2. Empty if 64 halvings find nothing.
std::optional<double> witness_dominating(TConorm c, double r1, double r2);

/// Given r4 in (0,1), returns r5 in (0,1) with r5 <> r5 <= r4. The scan starts
/// at the root of r <> r = r4 for the built-in kinds and halves from there.
std::optional<double> witness_idempotent_bound(TConorm c, double r4);

}  // namespace fuzzyanti
