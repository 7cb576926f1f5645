// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzyanti {

enum class Status { Certified, Refuted, Inconclusive };

std::string_view to_string(Status s);

/// Ordered list of named scalars. Order is preserved so reports stay byte-stable.
class NamedValues {
 public:
  NamedValues() = default;
  NamedValues(std::initializer_list<std::pair<std::string, double>> init) : items_(init) {}

  NamedValues& set(std::string name, double value);
  std::optional<double> get(std::string_view name) const;
  double at(std::string_view name) const;  // throws std::out_of_range
  bool empty() const { return items_.empty(); }
  const std::vector<std::pair<std::string, double>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, double>> items_;
};

/// A concrete tuple at which a universally quantified claim fails (or a
/// located object, such as the point a bound was certified at).
struct Witness {
  std::vector<double> point;  // x, or the deviation x - x0 for continuity checks
  NamedValues values;         // t, lhs, rhs, delta, ...
};

/// Outcome of a check. Certification over a sampled domain is labelled with
/// its basis; a refutation always carries a witness that re-verifies.
struct Verdict {
  Status status = Status::Inconclusive;
  std::string basis;        // "sampled", "exact", "tail-bound", "vacuous", "budget"
  NamedValues constants;    // constants found (M, delta, n0, ...)
  std::optional<Witness> witness;
  std::size_t samples = 0;  // evaluations performed
  std::string note;

  bool certified() const { return status == Status::Certified; }
  bool refuted() const { return status == Status::Refuted; }
  bool inconclusive() const { return status == Status::Inconclusive; }

  static Verdict certify(std::string basis, std::size_t samples, NamedValues constants = {});
  static Verdict refute(Witness w, std::size_t samples);
  static Verdict inconclusive_after(std::size_t samples, std::string note);
};

/// Conjunction of several verdicts: the first refutation, else the first
/// inconclusive part, else Certified(sampled) with `constants`. Samples add up.
Verdict combine_verdicts(std::span<const Verdict> parts, NamedValues constants);

}  // namespace fuzzyanti
