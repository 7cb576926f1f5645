// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"

namespace fuzzyanti {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Constant:
      return "constant";
    case SequenceKind::Harmonic:
      return "harmonic";
    case SequenceKind::Geometric:
      return "geometric";
    case SequenceKind::Linear:
      return "linear";
    case SequenceKind::Alternating:
      return "alternating";
  }
  return "constant";
}

SequenceKind parse_sequence_kind(std::string_view name) {
  if (name == "constant") return SequenceKind::Constant;
  if (name == "harmonic") return SequenceKind::Harmonic;
  if (name == "geometric") return SequenceKind::Geometric;
  if (name == "linear") return SequenceKind::Linear;
  if (name == "alternating") return SequenceKind::Alternating;
  throw ValidationError("unknown sequence generator '" + std::string(name) + "'");
}

void SequenceSpec::validate() const {
  space.validate();
  if (horizon < 2) throw ValidationError("sequence horizon must be at least 2");
  if (direction.size() != space.dimension) throw DimensionMismatch("sequence direction has the wrong dimension");
  if (offset.size() != 0 && offset.size() != space.dimension) {
    throw DimensionMismatch("sequence offset has the wrong dimension");
  }
  if (!std::isfinite(ratio)) throw ValidationError("geometric ratio must be finite");
}

double SequenceSpec::scale(std::size_t n) const {
  const auto nd = static_cast<double>(n);
  switch (kind) {
    case SequenceKind::Constant:
      return 1.0;
    case SequenceKind::Harmonic:
      return 1.0 / nd;
    case SequenceKind::Geometric:
      return std::pow(ratio, nd);
    case SequenceKind::Linear:
      return nd;
    case SequenceKind::Alternating:
      return (n % 2 == 0) ? 1.0 : -1.0;
  }
  return 1.0;
}

Vector SequenceSpec::offset_or_zero() const { return offset.size() == 0 ? Vector::zero(space.dimension) : offset; }

Vector SequenceSpec::term(std::size_t n) const { return offset_or_zero() + direction * scale(n); }

TailOutcome tail_criterion(std::span<const double> values, double r) {
  TailOutcome out;
  const std::size_t count = values.size();
  if (count == 0) return out;
  const std::size_t tail_start = count - std::max<std::size_t>(1, count / 4);  // 0-based

  std::size_t first_good = count;  // 0-based start of the all-below suffix
  for (std::size_t i = count; i-- > 0;) {
    if (values[i] < r) {
      first_good = i;
    } else {
      break;
    }
  }
  if (first_good <= tail_start) {
    out.status = Status::Certified;
    out.n0 = first_good + 1;
    return out;
  }
  const bool persistent =
      std::all_of(values.begin() + static_cast<std::ptrdiff_t>(tail_start), values.end(), [r](double v) { return v >= r; });
  if (persistent) {
    out.status = Status::Refuted;
    out.witness_n = count;
    out.witness_value = values[count - 1];
  }
  return out;
}

namespace {

void require_level(double r) {
  if (!(r > 0.0 && r < 1.0)) throw ValidationError("level r must lie in (0,1)");
}

void require_t_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw ValidationError("t grid is empty");
  for (double t : t_grid) {
    if (!(t > 0.0)) throw ValidationError("t grid values must be positive");
  }
}

std::string per_t(std::string_view name, double t) { return std::string(name) + "[t=" + format_double(t) + "]"; }

// Combines per-t outcomes: the first refutation wins, then any inconclusive.
struct PerTCollector {
  std::optional<Verdict> refuted;
  bool inconclusive = false;
  bool all_tail_bound = true;
  NamedValues constants;
  std::size_t evals = 0;

  Verdict finish(std::string note_if_inconclusive) {
    if (refuted) {
      refuted->samples = evals;
      return *refuted;
    }
    if (inconclusive) return Verdict::inconclusive_after(evals, std::move(note_if_inconclusive));
    return Verdict::certify(all_tail_bound ? "tail-bound" : "sampled", evals, std::move(constants));
  }
};

}  // namespace

Verdict check_convergent(const SequenceSpec& s, const Vector& limit, std::span<const double> t_grid, double r) {
  s.validate();
  require_t_grid(t_grid);
  require_level(r);
  if (limit.size() != s.space.dimension) throw DimensionMismatch("limit has the wrong dimension");

  const Vector base_dev = s.offset_or_zero() - limit;
  const bool nonincreasing_scale = s.kind != SequenceKind::Linear &&
                                   !(s.kind == SequenceKind::Geometric && std::abs(s.ratio) > 1.0);
  const bool monotone = (base_dev.is_zero() && nonincreasing_scale) || s.direction.is_zero();

  std::vector<double> norms(s.horizon);
  for (std::size_t n = 1; n <= s.horizon; ++n) norms[n - 1] = s.space.crisp_norm(s.term(n) - limit);

  PerTCollector acc;
  std::vector<double> values(s.horizon);
  for (double t : t_grid) {
    for (std::size_t i = 0; i < s.horizon; ++i) values[i] = s.space.profile(norms[i], t);
    acc.evals += s.horizon;
    const TailOutcome tail = tail_criterion(values, r);
    if (tail.status == Status::Certified) {
      acc.constants.set(per_t("n0", t), static_cast<double>(tail.n0));
      if (!monotone) acc.all_tail_bound = false;
    } else if (tail.status == Status::Refuted) {
      if (!acc.refuted) {
        acc.refuted = Verdict::refute(
            Witness{s.term(tail.witness_n).data(),
                    {{"t", t}, {"n", static_cast<double>(tail.witness_n)}, {"nu", tail.witness_value}, {"r", r}}},
            acc.evals);
      }
    } else {
      acc.inconclusive = true;
    }
  }
  return acc.finish("tail neither settles below r nor stays above it within the horizon");
}

Verdict check_cauchy(const SequenceSpec& s, std::span<const double> t_grid, double r, std::size_t p_max) {
  s.validate();
  require_t_grid(t_grid);
  require_level(r);
  if (p_max < 1) throw ValidationError("p_max must be at least 1");

  // Crisp norms of x_{n+p} - x_n; the offset cancels.
  const std::size_t pairs_n = s.horizon - 1;
  std::vector<std::vector<double>> diff_norms(pairs_n);
  for (std::size_t n = 1; n <= pairs_n; ++n) {
    const std::size_t pmax_here = std::min(p_max, s.horizon - n);
    auto& row = diff_norms[n - 1];
    row.reserve(pmax_here);
    for (std::size_t p = 1; p <= pmax_here; ++p) {
      row.push_back(s.space.crisp_norm(s.direction * (s.scale(n + p) - s.scale(n))));
    }
  }

  // Sup over all p >= 1 of |g(n+p) - g(n)| when the family admits a closed bound.
  auto closed_bound = [&](std::size_t n) -> std::optional<double> {
    switch (s.kind) {
      case SequenceKind::Constant:
        return 0.0;
      case SequenceKind::Harmonic:
        return 1.0 / static_cast<double>(n);
      case SequenceKind::Geometric:
        if (std::abs(s.ratio) < 1.0) return 2.0 * std::pow(std::abs(s.ratio), static_cast<double>(n));
        return std::nullopt;
      default:
        return std::nullopt;
    }
  };

  PerTCollector acc;
  std::vector<double> worst(pairs_n);
  for (double t : t_grid) {
    std::vector<std::size_t> worst_p(pairs_n, 1);
    for (std::size_t i = 0; i < pairs_n; ++i) {
      double m = 0.0;
      for (std::size_t j = 0; j < diff_norms[i].size(); ++j) {
        const double v = s.space.profile(diff_norms[i][j], t);
        if (v > m) {
          m = v;
          worst_p[i] = j + 1;
        }
      }
      acc.evals += diff_norms[i].size();
      worst[i] = m;
    }
    const TailOutcome tail = tail_criterion(worst, r);
    if (tail.status == Status::Certified) {
      acc.constants.set(per_t("n0", t), static_cast<double>(tail.n0));
      const auto bound = closed_bound(tail.n0);
      if (!bound || !(s.space(s.direction * *bound, t) < r)) acc.all_tail_bound = false;
    } else if (tail.status == Status::Refuted) {
      if (!acc.refuted) {
        const std::size_t n = tail.witness_n;
        const std::size_t p = worst_p[n - 1];
        acc.refuted = Verdict::refute(Witness{s.term(n).data(),
                                              {{"t", t},
                                               {"n", static_cast<double>(n)},
                                               {"p", static_cast<double>(p)},
                                               {"nu", tail.witness_value},
                                               {"r", r}}},
                                      acc.evals);
      }
    } else {
      acc.inconclusive = true;
    }
  }
  return acc.finish("Cauchy tail neither settles below r nor stays above it within the horizon");
}

Verdict check_bounded_set(std::span<const Vector> points, const Membership& nu) {
  if (points.empty()) throw ValidationError("point set is empty");
  if (!nu.eval) throw ValidationError("membership function is empty");
  for (const auto& x : points) {
    if (x.size() != nu.dimension) throw DimensionMismatch("point has the wrong dimension");
  }
  constexpr double levels[] = {0.05, 0.1, 0.25, 0.5};
  constexpr int max_doublings = 200;
  std::size_t evals = 0;
  for (double r : levels) {
    double t = 1.0;
    for (int j = 0; j <= max_doublings; ++j, t *= 2.0) {
      bool all_below = true;
      for (const auto& x : points) {
        ++evals;
        if (!(nu.eval(x, t) < r)) {
          all_below = false;
          break;
        }
      }
      if (all_below) return Verdict::certify("exact", evals, {{"t", t}, {"r", r}});
    }
  }
  return Verdict::inconclusive_after(evals, "no (t, r) pair found within the search budget");
}

Verdict check_bounded_set(std::span<const Vector> points, const FuzzyAntiNorm& space) {
  space.validate();
  return check_bounded_set(points, Membership::of(space));
}

}  // namespace fuzzyanti
