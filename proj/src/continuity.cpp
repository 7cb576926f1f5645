// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"
#include "fuzzyanti/operators.hpp"
#include "scan.hpp"

namespace fuzzyanti {

using detail::Step;

namespace {

enum class Outcome { Clean, Violated, OutOfBudget };

// Walks x = x0 + m u over the deviation plan, handing x - x0 and the crisp
// norm of T x - T x0 lowered by its rounding allowance to the visitor.
// Evaluations are counted against a shared budget.
class DeviationScan {
 public:
  DeviationScan(const BoundednessCheck& b, const Vector& x0, std::size_t budget)
      : b_(b), x0_(x0), t0_(b.map(x0)), dirs_(sample_directions(b)), mags_(detail::anchored(b.deviation_grid)),
        budget_(budget), t0_norm_(b.codomain_norm.crisp_norm(t0_)) {}

  Outcome run(const std::function<Step(const Vector&, double)>& visit, Vector& hit) {
    for (const Vector& u : dirs_) {
      bool exhausted = false;
      auto found = detail::scan_magnitudes(mags_, b_.deviation_grid.min, [&](double m) {
        if (pairs_ >= budget_) {
          exhausted = true;
          return Step::Violated;
        }
        ++pairs_;
        const Vector x = x0_ + u * m;
        const Vector tx = b_.map(x);
        const Step s = visit(x - x0_, lowered_norm(tx));
        if (s == Step::Violated) hit = x;
        return s;
      });
      if (exhausted) return Outcome::OutOfBudget;
      if (found) return Outcome::Violated;
    }
    return Outcome::Clean;
  }

  std::size_t pairs() const { return pairs_; }

  // |T x - T x0| minus a bound on the rounding of both evaluations and the
  // subtraction, clamped at 0.
  double lowered_norm(const Vector& tx) const {
    const FuzzyAntiNorm& v = b_.codomain_norm;
    const double n = static_cast<double>(tx.size());
    const double allowance = 16.0 * n * std::numeric_limits<double>::epsilon() * (v.crisp_norm(tx) + t0_norm_);
    return std::max(0.0, v.crisp_norm(tx - t0_) - allowance);
  }

 private:
  const BoundednessCheck& b_;
  Vector x0_;
  Vector t0_;
  std::vector<Vector> dirs_;
  std::vector<double> mags_;
  std::size_t budget_;
  double t0_norm_;
  std::size_t pairs_ = 0;
};

std::vector<double> descending(std::span<const double> values, const char* what) {
  if (values.empty()) throw ValidationError(std::string(what) + " candidates are empty");
  std::vector<double> out(values.begin(), values.end());
  for (double v : out) detail::require_positive(v, what);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void prepare(const BoundednessCheck& b, const Vector& x0) {
  b.validate();
  if (x0.size() != b.domain_norm.dimension) throw DimensionMismatch("x0 has the wrong dimension");
}

std::string budget_note(std::size_t budget) {
  return "evaluation budget of " + std::to_string(budget) + " pairs exhausted";
}

}  // namespace

Verdict check_strong_continuity_at(const BoundednessCheck& b, const Vector& x0, std::span<const double> eps_grid,
                                   std::span<const double> deltas, std::size_t budget) {
  prepare(b, x0);
  if (eps_grid.empty()) throw ValidationError("eps grid is empty");
  for (double eps : eps_grid) detail::require_positive(eps, "eps");
  const auto candidates = descending(deltas, "delta");
  DeviationScan scan(b, x0, budget);
  NamedValues found;
  for (double eps : eps_grid) {
    Vector x;
    double lhs = 0.0;
    double rhs = 0.0;
    bool admitted = false;
    for (double delta : candidates) {
      const Outcome o = scan.run(
          [&](const Vector& d, double w) {
            lhs = b.codomain_norm.profile(w, eps);
            rhs = b.domain_norm(d, delta);
            if (exceeds(lhs, rhs)) return Step::Violated;
            return detail::negligible(lhs, rhs) ? Step::Negligible : Step::Continue;
          },
          x);
      if (o == Outcome::OutOfBudget) return Verdict::inconclusive_after(scan.pairs(), budget_note(budget));
      if (o == Outcome::Clean) {
        found.set("delta[eps=" + format_double(eps) + "]", delta);
        admitted = true;
        break;
      }
    }
    if (!admitted) {
      Verdict v = Verdict::refute(
          {x.data(), {{"eps", eps}, {"delta", candidates.back()}, {"lhs", lhs}, {"rhs", rhs}}}, scan.pairs());
      v.note = "no candidate delta for eps=" + format_double(eps);
      return v;
    }
  }
  return Verdict::certify("sampled", scan.pairs(), std::move(found));
}

Verdict check_strong_continuity_at(const BoundednessCheck& b, const Vector& x0, std::span<const double> eps_grid) {
  const auto deltas = b.delta_grid.values();
  return check_strong_continuity_at(b, x0, eps_grid, deltas);
}

Verdict check_weak_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha,
                                 std::span<const double> deltas, std::size_t budget) {
  prepare(b, x0);
  detail::require_positive(eps, "eps");
  detail::require_open_unit(alpha, "alpha");
  const auto candidates = descending(deltas, "delta");
  const double level = 1.0 - alpha;
  DeviationScan scan(b, x0, budget);
  Vector x;
  double premise = 0.0;
  double conclusion = 0.0;
  for (double delta : candidates) {
    const Outcome o = scan.run(
        [&](const Vector& d, double w) {
          premise = b.domain_norm(d, delta);
          conclusion = b.codomain_norm.profile(w, eps);
          if (premise <= level && exceeds(conclusion, level)) return Step::Violated;
          return detail::negligible(premise, conclusion) ? Step::Negligible : Step::Continue;
        },
        x);
    if (o == Outcome::OutOfBudget) return Verdict::inconclusive_after(scan.pairs(), budget_note(budget));
    if (o == Outcome::Clean) return Verdict::certify("sampled", scan.pairs(), {{"delta", delta}});
  }
  return Verdict::refute({x.data(),
                          {{"eps", eps},
                           {"alpha", alpha},
                           {"delta", candidates.back()},
                           {"premise", premise},
                           {"conclusion", conclusion}}},
                         scan.pairs());
}

Verdict check_weak_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha) {
  const auto deltas = b.delta_grid.values();
  return check_weak_continuity_at(b, x0, eps, alpha, deltas);
}

std::vector<double> default_beta_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 19; ++i) out.push_back(i / 20.0);
  return out;
}

Verdict check_fuzzy_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha,
                                  std::span<const double> deltas, std::span<const double> betas,
                                  std::size_t budget) {
  prepare(b, x0);
  detail::require_positive(eps, "eps");
  detail::require_open_unit(alpha, "alpha");
  const auto delta_list = descending(deltas, "delta");
  const auto beta_list = descending(betas, "beta");
  for (double beta : beta_list) detail::require_open_unit(beta, "beta");
  DeviationScan scan(b, x0, budget);
  Vector x;
  double premise = 0.0;
  double conclusion = 0.0;
  for (double delta : delta_list) {
    for (double beta : beta_list) {
      const Outcome o = scan.run(
          [&](const Vector& d, double w) {
            premise = b.domain_norm(d, delta);
            conclusion = b.codomain_norm.profile(w, eps);
            if (premise < beta && conclusion >= alpha) return Step::Violated;
            return detail::negligible(premise, conclusion) ? Step::Negligible : Step::Continue;
          },
          x);
      if (o == Outcome::OutOfBudget) return Verdict::inconclusive_after(scan.pairs(), budget_note(budget));
      if (o == Outcome::Clean) return Verdict::certify("sampled", scan.pairs(), {{"delta", delta}, {"beta", beta}});
    }
  }
  return Verdict::refute({x.data(),
                          {{"eps", eps},
                           {"alpha", alpha},
                           {"delta", delta_list.back()},
                           {"beta", beta_list.back()},
                           {"premise", premise},
                           {"conclusion", conclusion}}},
                         scan.pairs());
}

Verdict check_fuzzy_continuity_at(const BoundednessCheck& b, const Vector& x0, double eps, double alpha) {
  const auto deltas = b.delta_grid.values();
  const auto betas = default_beta_grid();
  return check_fuzzy_continuity_at(b, x0, eps, alpha, deltas, betas);
}

Verdict check_sequential_continuity_at(const BoundednessCheck& b, const Vector& x0,
                                       std::span<const SequenceSpec> sequences, std::span<const double> t_grid,
                                       double r) {
  prepare(b, x0);
  detail::require_open_unit(r, "r");
  if (t_grid.empty()) throw ValidationError("t grid is empty");
  for (double t : t_grid) detail::require_positive(t, "t");
  const Vector t0 = b.map(x0);
  std::size_t evals = 0;
  std::size_t accepted = 0;
  bool inconclusive = false;
  std::string skipped;
  NamedValues n0;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    SequenceSpec s = sequences[i];
    s.space = b.domain_norm;
    const Verdict conv = check_convergent(s, x0, t_grid, r);
    evals += conv.samples;
    if (!conv.certified()) {
      skipped += (skipped.empty() ? "" : ",") + std::to_string(i);
      continue;
    }
    ++accepted;
    std::vector<Vector> images;
    images.reserve(s.horizon);
    for (std::size_t n = 1; n <= s.horizon; ++n) images.push_back(b.map(s.term(n)) - t0);
    for (double t : t_grid) {
      std::vector<double> values;
      values.reserve(images.size());
      for (const Vector& d : images) values.push_back(b.codomain_norm(d, t));
      evals += values.size();
      const TailOutcome tail = tail_criterion(values, r);
      if (tail.status == Status::Refuted) {
        Verdict v = Verdict::refute({s.term(tail.witness_n).data(),
                                     {{"sequence", static_cast<double>(i)},
                                      {"t", t},
                                      {"n", static_cast<double>(tail.witness_n)},
                                      {"nu", tail.witness_value},
                                      {"r", r}}},
                                    evals);
        return v;
      }
      if (tail.status == Status::Inconclusive) {
        inconclusive = true;
        continue;
      }
      const std::string key = "n0[t=" + format_double(t) + "]";
      const double prev = n0.get(key).value_or(0.0);
      n0.set(key, std::max(prev, static_cast<double>(tail.n0)));
    }
  }
  const std::string note = skipped.empty() ? "" : "skipped sequences not converging to x0: " + skipped;
  if (accepted == 0) {
    Verdict v = Verdict::inconclusive_after(evals, "no sequence converges to x0");
    if (!note.empty()) v.note += "; " + note;
    return v;
  }
  if (inconclusive) {
    Verdict v = Verdict::inconclusive_after(evals, "image tail undecided on the horizon");
    if (!note.empty()) v.note += "; " + note;
    return v;
  }
  Verdict v = Verdict::certify("sampled", evals, std::move(n0));
  v.note = note;
  return v;
}

}  // namespace fuzzyanti
