// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/alpha.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"
#include "fuzzyanti/sampling.hpp"

namespace fuzzyanti {

namespace {

constexpr int kMaxBisectionSteps = 2000;

void require_open_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0,1)");
}

}  // namespace

double level_crossing(const std::function<double(double)>& nu, double level, const BisectionOptions& opts) {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 0;
  while (nu(hi) > level) {
    if (++steps > opts.max_growth_steps) {
      throw BracketFailure("membership never drops to the requested level within the bracket budget");
    }
    lo = hi;
    hi *= opts.growth;
  }
  for (int i = 0; i < kMaxBisectionSteps; ++i) {
    if (hi - lo <= opts.tol * std::min(1.0, hi)) break;
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;  // adjacent doubles
    if (nu(mid) <= level) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

AlphaNormProfile AlphaNormProfile::with_defaults(FuzzyAntiNorm source) {
  AlphaNormProfile p{source, open_unit_grid(99)};
  p.validate();
  return p;
}

void AlphaNormProfile::validate() const {
  source.validate();
  if (alpha_grid.empty()) throw ValidationError("alpha grid is empty");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    require_open_unit(alpha_grid[i]);
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1])) {
      throw ValidationError("alpha grid must be strictly increasing");
    }
  }
  if (!(bisection_tol > 0.0)) throw ValidationError("bisection_tol must be positive");
  if (!(bracket_growth > 1.0)) throw ValidationError("bracket_growth must exceed 1");
  if (max_doublings < 1) throw ValidationError("max_doublings must be positive");
}

double AlphaNormProfile::grid_spacing() const {
  double gap = std::max(alpha_grid.front(), 1.0 - alpha_grid.back());
  for (std::size_t i = 1; i < alpha_grid.size(); ++i) gap = std::max(gap, alpha_grid[i] - alpha_grid[i - 1]);
  return gap;
}

double alpha_norm(const AlphaNormProfile& p, const Vector& x, double alpha) {
  require_open_unit(alpha);
  if (x.size() != p.source.dimension) throw DimensionMismatch("vector dimension does not match the space");
  const double w = p.source.crisp_norm(x);
  if (w == 0.0) return 0.0;
  return level_crossing([&](double t) { return p.source.profile(w, t); }, 1.0 - alpha, p.bisection());
}

double closed_form_alpha_norm(const FuzzyAntiNorm& n, const Vector& x, double alpha) {
  require_open_unit(alpha);
  if (x.size() != n.dimension) throw DimensionMismatch("vector dimension does not match the space");
  const double w = n.crisp_norm(x);
  switch (n.family) {
    case Family::Harmonic:
    case Family::RatioSimple:
      return n.k * w * alpha / (1.0 - alpha);
    case Family::QuadraticCapped:
      return w * std::sqrt((1.0 + alpha) / (1.0 - alpha));
  }
  throw ValidationError("no closed form for this family");
}

double reconstruct_nu(const AlphaNormProfile& p, const Vector& x, double t) {
  if (t == 0.0 && x.is_zero()) return 1.0;
  double best = 1.0;
  for (double alpha : p.alpha_grid) {
    if (alpha_norm(p, x, alpha) <= t) best = std::min(best, 1.0 - alpha);
  }
  return best;
}

Verdict check_ascending_family(const AlphaNormProfile& p, const Vector& x) {
  if (x.is_zero()) throw ValidationError("ascending-family check needs a nonzero vector");
  const double slack = 2.0 * p.bisection_tol;
  std::size_t evals = 0;
  double prev = 0.0;
  for (std::size_t i = 0; i < p.alpha_grid.size(); ++i) {
    const double a = alpha_norm(p, x, p.alpha_grid[i]);
    ++evals;
    if (i > 0 && a < prev - slack) {
      return Verdict::refute(Witness{x.data(),
                                     {{"alpha1", p.alpha_grid[i - 1]},
                                      {"alpha2", p.alpha_grid[i]},
                                      {"norm1", prev},
                                      {"norm2", a}}},
                             evals);
    }
    prev = a;
  }
  return Verdict::certify(p.alpha_grid.size() == 1 ? "vacuous" : "sampled", evals);
}

void write_alpha_curve(std::ostream& os, const AlphaNormProfile& p, const Vector& x) {
  os << "alpha,alpha_norm\n";
  for (double alpha : p.alpha_grid) {
    os << format_double(alpha) << ',' << format_double(alpha_norm(p, x, alpha)) << '\n';
  }
}

void write_duality_curve(std::ostream& os, const AlphaNormProfile& p, const Vector& x, std::span<const double> ts) {
  os << "t,nu,nu_reconstructed\n";
  for (double t : ts) {
    os << format_double(t) << ',' << format_double(p.source(x, t)) << ',' << format_double(reconstruct_nu(p, x, t))
       << '\n';
  }
}

}  // namespace fuzzyanti
