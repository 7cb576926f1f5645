// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/conorm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/sampling.hpp"

namespace fuzzyanti {

namespace {

constexpr double kLawTolerance = 1e-12;
constexpr int kScanSteps = 64;

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

bool in_open_unit(double v) { return v > 0.0 && v < 1.0; }

Witness law_witness(std::initializer_list<std::pair<std::string, double>> vals, double lhs, double rhs) {
  Witness w;
  w.values = NamedValues(vals);
  w.values.set("lhs", lhs);
  w.values.set("rhs", rhs);
  return w;
}

}  // namespace

double TConorm::operator()(double a, double b) const noexcept {
  switch (kind) {
    case ConormKind::Max:
      return std::max(a, b);
    case ConormKind::ProbabilisticSum:
      return a + b - a * b;
    case ConormKind::BoundedSum:
      return std::min(1.0, a + b);
  }
  return std::max(a, b);
}

double eval_conorm(TConorm c, double a, double b) {
  if (!in_unit(a) || !in_unit(b)) {
    throw DomainError("t-conorm operands must lie in [0,1]");
  }
  return c(a, b);
}

std::string_view to_string(ConormKind kind) {
  switch (kind) {
    case ConormKind::Max:
      return "max";
    case ConormKind::ProbabilisticSum:
      return "prob-sum";
    case ConormKind::BoundedSum:
      return "bounded-sum";
  }
  return "max";
}

ConormKind parse_conorm(std::string_view name) {
  if (name == "max") return ConormKind::Max;
  if (name == "prob-sum") return ConormKind::ProbabilisticSum;
  if (name == "bounded-sum") return ConormKind::BoundedSum;
  throw ValidationError("unknown t-conorm '" + std::string(name) + "'");
}

Verdict check_conorm_axioms(const BinaryOp& op, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw ValidationError("sample_count must be at least 1");

  Rng rng(seed);
  std::size_t evaluations = 0;

  auto check = [&](double a, double b, double c, double d) -> std::optional<Verdict> {
    auto refute = [&](std::string_view law, double lhs, double rhs) {
      Verdict v = Verdict::refute(law_witness({{"a", a}, {"b", b}, {"c", c}, {"d", d}}, lhs, rhs),
                                  evaluations);
      v.note = std::string(law);
      return v;
    };

    const double ab = op(a, b);
    const double ba = op(b, a);
    evaluations += 2;
    if (std::abs(ab - ba) > kLawTolerance) return refute("commutativity", ab, ba);

    const double left = op(ab, c);
    const double right = op(a, op(b, c));
    evaluations += 3;
    if (std::abs(left - right) > kLawTolerance) return refute("associativity", left, right);

    const double a0 = op(a, 0.0);
    ++evaluations;
    if (std::abs(a0 - a) > kLawTolerance) return refute("identity", a0, a);

    // Monotonicity on the ordered pair (min, max) of each coordinate.
    const double lo = op(std::min(a, c), std::min(b, d));
    const double hi = op(std::max(a, c), std::max(b, d));
    evaluations += 2;
    if (lo > hi + kLawTolerance) return refute("monotonicity", lo, hi);

    if (!in_unit(ab)) return refute("closure", ab, ab);
    return std::nullopt;
  };

  // Corners first; they catch identity and closure failures deterministically.
  constexpr std::array<double, 2> corners{0.0, 1.0};
  for (double a : corners) {
    for (double b : corners) {
      if (auto bad = check(a, b, a, b)) return *bad;
    }
  }
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double a = rng.uniform01();
    const double b = rng.uniform01();
    const double c = rng.uniform01();
    const double d = rng.uniform01();
    if (auto bad = check(a, b, c, d)) return *bad;
  }
  return Verdict::certify("sampled", evaluations,
                          NamedValues{{"samples", static_cast<double>(sample_count)}});
}

Verdict check_conorm_axioms(TConorm c, std::size_t sample_count, std::uint64_t seed) {
  return check_conorm_axioms(BinaryOp([c](double a, double b) { return c(a, b); }), sample_count, seed);
}

std::optional<double> witness_dominating(TConorm c, double r1, double r2) {
  if (!in_open_unit(r1) || !in_open_unit(r2) || !(r1 > r2)) {
    throw ValidationError("witness_dominating needs r1 > r2 in (0,1)");
  }
  double r = r1 - r2;
  for (int i = 0; i < kScanSteps; ++i) {
    if (r1 > c(r, r2)) return r;
    r *= 0.5;
  }
  return std::nullopt;
}

std::optional<double> witness_idempotent_bound(TConorm c, double r4) {
  if (!in_open_unit(r4)) throw ValidationError("witness_idempotent_bound needs r4 in (0,1)");
  double r = r4;
  switch (c.kind) {
    case ConormKind::Max:
      r = r4;
      break;
    case ConormKind::ProbabilisticSum:
      r = 1.0 - std::sqrt(1.0 - r4);  // 2r - r^2 = r4
      break;
    case ConormKind::BoundedSum:
      r = 0.5 * r4;
      break;
  }
  for (int i = 0; i < kScanSteps; ++i) {
    if (in_open_unit(r) && c(r, r) <= r4) return r;
    r *= 0.5;
  }
  return std::nullopt;
}

}  // namespace fuzzyanti
