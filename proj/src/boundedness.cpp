// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/operators.hpp"
#include "scan.hpp"

namespace fuzzyanti {

namespace detail {

void require_linear(const BoundednessCheck& b) {
  if (!b.map.is_linear()) {
    throw ValidationError("boundedness checks need a linear map, got " + b.map.describe());
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(what) + " must be positive and finite");
}

void require_open_unit(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) throw ValidationError(std::string(what) + " must lie in (0,1)");
}

}  // namespace detail

using detail::Step;

void BoundednessCheck::validate() const {
  domain_norm.validate();
  codomain_norm.validate();
  map.check_dimensions(domain_norm.dimension, codomain_norm.dimension);
  t_grid.validate();
  magnitudes.validate();
  delta_grid.validate();
  deviation_grid.validate();
}

std::vector<Vector> sample_directions(const BoundednessCheck& b) {
  const std::size_t n = b.domain_norm.dimension;
  std::vector<Vector> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = Vector::basis(n, i);
    e *= 1.0 / b.domain_norm.crisp_norm(e);
    dirs.push_back(e);
    dirs.push_back(-e);
  }
  if (n == 1) return dirs;
  Rng rng(b.seed);
  for (std::size_t s = 0; s < b.x_samples; ++s) {
    Vector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = rng.uniform(-1.0, 1.0);
    const double w = b.domain_norm.crisp_norm(u);
    if (w == 0.0) continue;
    u *= 1.0 / w;
    dirs.push_back(u);
  }
  return dirs;
}

std::vector<Vector> sample_points(const BoundednessCheck& b) {
  const auto mags = detail::anchored(b.magnitudes);
  std::vector<Vector> points;
  for (const Vector& u : sample_directions(b)) {
    for (double m : mags) points.push_back(u * m);
  }
  return points;
}

Verdict check_strong_anti_bounded(const BoundednessCheck& b, double M) {
  b.validate();
  detail::require_linear(b);
  detail::require_positive(M, "M");
  const auto radii = detail::anchored(b.t_grid);
  std::size_t pairs = 0;
  for (const Vector& x : sample_points(b)) {
    const Vector tx = b.map(x);
    double lhs = 0.0;
    double rhs = 0.0;
    auto hit = detail::scan_radii(radii, b.t_grid.max, [&](double t) {
      ++pairs;
      lhs = b.codomain_norm(tx, t);
      rhs = b.domain_norm(x, t / M);
      if (exceeds(lhs, rhs)) return Step::Violated;
      return detail::negligible(lhs, rhs) ? Step::Negligible : Step::Continue;
    });
    if (hit) {
      return Verdict::refute({x.data(), {{"t", *hit}, {"lhs", lhs}, {"rhs", rhs}, {"M", M}}}, pairs);
    }
  }
  return Verdict::certify("sampled", pairs, {{"M", M}});
}

StrongBoundSearch search_strong_bound(const BoundednessCheck& b) {
  StrongBoundSearch out;
  for (int k = 0; k <= 32; ++k) {
    const double M = std::ldexp(1.0, k);
    out.sweep.push_back({M, check_strong_anti_bounded(b, M)});
    if (!out.sweep.back().verdict.certified()) continue;
    if (k == 0) {
      out.constant = M;
      return out;
    }
    double lo = std::ldexp(1.0, k - 1);
    double hi = M;
    while (hi - lo > 1e-6 * hi) {
      const double mid = 0.5 * (lo + hi);
      out.bisection.push_back({mid, check_strong_anti_bounded(b, mid)});
      if (out.bisection.back().verdict.certified()) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.constant = hi;
    return out;
  }
  return out;
}

namespace {

struct WeakOutcome {
  bool violated = false;
  double premise = 0.0;
  double conclusion = 0.0;
};

WeakOutcome weak_eval(const BoundednessCheck& b, double alpha, double M_alpha, const Vector& x, const Vector& tx,
                      double t) {
  WeakOutcome o;
  o.premise = b.domain_norm(x, t / M_alpha);
  o.conclusion = b.codomain_norm(tx, t);
  const double level = 1.0 - alpha;
  o.violated = o.premise <= level && exceeds(o.conclusion, level);
  return o;
}

Witness weak_witness(const Vector& x, double alpha, double M_alpha, double t, const WeakOutcome& o) {
  return {x.data(),
          {{"alpha", alpha}, {"M_alpha", M_alpha}, {"t", t}, {"premise", o.premise}, {"conclusion", o.conclusion}}};
}

}  // namespace

Verdict check_weak_anti_bounded(const BoundednessCheck& b, double alpha, double M_alpha) {
  b.validate();
  detail::require_linear(b);
  detail::require_open_unit(alpha, "alpha");
  detail::require_positive(M_alpha, "M_alpha");
  const auto radii = detail::anchored(b.t_grid);
  std::size_t pairs = 0;
  for (const Vector& x : sample_points(b)) {
    const Vector tx = b.map(x);
    WeakOutcome o;
    auto hit = detail::scan_radii(radii, b.t_grid.max, [&](double t) {
      ++pairs;
      o = weak_eval(b, alpha, M_alpha, x, tx, t);
      if (o.violated) return Step::Violated;
      return detail::negligible(o.premise, o.conclusion) ? Step::Negligible : Step::Continue;
    });
    if (hit) return Verdict::refute(weak_witness(x, alpha, M_alpha, *hit, o), pairs);
  }
  return Verdict::certify("sampled", pairs, {{"alpha", alpha}, {"M_alpha", M_alpha}});
}

Verdict weak_bound_at(const BoundednessCheck& b, double alpha, double M_alpha, const Vector& x, double t) {
  b.validate();
  detail::require_linear(b);
  detail::require_open_unit(alpha, "alpha");
  detail::require_positive(M_alpha, "M_alpha");
  const WeakOutcome o = weak_eval(b, alpha, M_alpha, x, b.map(x), t);
  if (o.violated) return Verdict::refute(weak_witness(x, alpha, M_alpha, t, o), 1);
  return Verdict::certify("sampled", 1, {{"alpha", alpha}, {"M_alpha", M_alpha}});
}

Verdict check_uniform_anti_bounded(const BoundednessCheck& b, const AlphaNormProfile& domain,
                                   const AlphaNormProfile& codomain, double M, UniformDirection direction) {
  b.validate();
  detail::require_linear(b);
  detail::require_positive(M, "M");
  domain.validate();
  codomain.validate();
  if (domain.source.dimension != b.domain_norm.dimension || codomain.source.dimension != b.codomain_norm.dimension) {
    throw DimensionMismatch("alpha-norm profiles do not match the spaces of the check");
  }
  const double tol = 10.0 * std::max(domain.bisection_tol, codomain.bisection_tol);
  std::size_t evals = 0;
  for (const Vector& x : sample_points(b)) {
    const Vector tx = b.map(x);
    for (double alpha : domain.alpha_grid) {
      evals += 2;
      const double lhs = alpha_norm(codomain, tx, alpha);
      const double rhs = M * alpha_norm(domain, x, alpha);
      const double slack = tol * std::max({1.0, lhs, rhs});
      const bool ok = direction == UniformDirection::DerivedLE ? lhs <= rhs + slack : lhs >= rhs - slack;
      if (!ok) {
        return Verdict::refute({x.data(), {{"alpha", alpha}, {"lhs", lhs}, {"rhs", rhs}, {"M", M}}}, evals);
      }
    }
  }
  return Verdict::certify("sampled", evals, {{"M", M}});
}

}  // namespace fuzzyanti
