// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/verdict.hpp"

#include <stdexcept>

namespace fuzzyanti {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Certified:
      return "certified";
    case Status::Refuted:
      return "refuted";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

NamedValues& NamedValues::set(std::string name, double value) {
  for (auto& [k, v] : items_) {
    if (k == name) {
      v = value;
      return *this;
    }
  }
  items_.emplace_back(std::move(name), value);
  return *this;
}

std::optional<double> NamedValues::get(std::string_view name) const {
  for (const auto& [k, v] : items_) {
    if (k == name) return v;
  }
  return std::nullopt;
}

double NamedValues::at(std::string_view name) const {
  if (auto v = get(name)) return *v;
  throw std::out_of_range("no value named '" + std::string(name) + "'");
}

Verdict Verdict::certify(std::string basis, std::size_t samples, NamedValues constants) {
  Verdict v;
  v.status = Status::Certified;
  v.basis = std::move(basis);
  v.samples = samples;
  v.constants = std::move(constants);
  return v;
}

Verdict Verdict::refute(Witness w, std::size_t samples) {
  Verdict v;
  v.status = Status::Refuted;
  v.basis = "exact";
  v.witness = std::move(w);
  v.samples = samples;
  return v;
}

Verdict Verdict::inconclusive_after(std::size_t samples, std::string note) {
  Verdict v;
  v.status = Status::Inconclusive;
  v.basis = "budget";
  v.samples = samples;
  v.note = std::move(note);
  return v;
}

Verdict combine_verdicts(std::span<const Verdict> parts, NamedValues constants) {
  std::size_t samples = 0;
  for (const auto& v : parts) samples += v.samples;
  for (Status wanted : {Status::Refuted, Status::Inconclusive}) {
    for (const auto& v : parts) {
      if (v.status == wanted) {
        Verdict out = v;
        out.samples = samples;
        return out;
      }
    }
  }
  return Verdict::certify("sampled", samples, std::move(constants));
}

}  // namespace fuzzyanti
