// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/space.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <string>
#include <vector>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/sampling.hpp"

namespace fuzzyanti {

// ---------------------------------------------------------------------------
// Vector

Vector Vector::basis(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw DimensionMismatch("basis index out of range");
  Vector v(dimension);
  v[index] = 1.0;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw DimensionMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double c) {
  for (double& x : coords_) x *= c;
  return *this;
}

double norm(CrispNorm kind, const Vector& x) {
  double acc = 0.0;
  switch (kind) {
    case CrispNorm::Euclidean: {
      // Scaled accumulation avoids overflow for large coordinates.
      double scale = 0.0;
      for (double c : x.coords()) scale = std::max(scale, std::abs(c));
      if (scale == 0.0) return 0.0;
      for (double c : x.coords()) {
        const double r = c / scale;
        acc += r * r;
      }
      return scale * std::sqrt(acc);
    }
    case CrispNorm::Sup:
      for (double c : x.coords()) acc = std::max(acc, std::abs(c));
      return acc;
    case CrispNorm::OneNorm:
      for (double c : x.coords()) acc += std::abs(c);
      return acc;
  }
  return acc;
}

std::string_view to_string(CrispNorm kind) {
  switch (kind) {
    case CrispNorm::Euclidean:
      return "l2";
    case CrispNorm::Sup:
      return "sup";
    case CrispNorm::OneNorm:
      return "l1";
  }
  return "l2";
}

CrispNorm parse_crisp_norm(std::string_view name) {
  if (name == "l2") return CrispNorm::Euclidean;
  if (name == "sup") return CrispNorm::Sup;
  if (name == "l1") return CrispNorm::OneNorm;
  throw ValidationError("unknown crisp norm '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// FuzzyAntiNorm

FuzzyAntiNorm FuzzyAntiNorm::harmonic(double k, CrispNorm crisp, std::size_t dimension) {
  FuzzyAntiNorm n{Family::Harmonic, k, crisp, dimension};
  n.validate();
  return n;
}

FuzzyAntiNorm FuzzyAntiNorm::quadratic_capped(CrispNorm crisp, std::size_t dimension) {
  FuzzyAntiNorm n{Family::QuadraticCapped, 1.0, crisp, dimension};
  n.validate();
  return n;
}

FuzzyAntiNorm FuzzyAntiNorm::ratio_simple(double k, CrispNorm crisp, std::size_t dimension) {
  FuzzyAntiNorm n{Family::RatioSimple, k, crisp, dimension};
  n.validate();
  return n;
}

void FuzzyAntiNorm::validate() const {
  if (dimension < 1) throw ValidationError("space dimension must be at least 1");
  if (!(k > 0.0) || !std::isfinite(k)) throw ValidationError("family parameter k must be positive");
}

double FuzzyAntiNorm::profile(double w, double t) const noexcept {
  if (t <= 0.0) return 1.0;
  if (w == 0.0) return 0.0;
  switch (family) {
    case Family::Harmonic:
    case Family::RatioSimple:
      // k w / (t + k w), written in the ratio t / (k w) so huge norms stay finite.
      return 1.0 / (1.0 + t / (k * w));
    case Family::QuadraticCapped: {
      if (t <= w) return 1.0;
      const double u = t / w;
      return 2.0 / (u * u + 1.0);
    }
  }
  return 1.0;
}

double FuzzyAntiNorm::operator()(const Vector& x, double t) const {
  if (x.size() != dimension) throw DimensionMismatch("vector dimension does not match the space");
  return profile(norm(crisp, x), t);
}

namespace {

std::string format_k(double k) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, k);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(k);
}

}  // namespace

std::string FuzzyAntiNorm::family_name() const {
  switch (family) {
    case Family::Harmonic:
      return "harmonic(k=" + format_k(k) + ")";
    case Family::QuadraticCapped:
      return "quadratic-capped";
    case Family::RatioSimple:
      return "ratio-simple(k=" + format_k(k) + ")";
  }
  return "harmonic";
}

double antinorm_eval(const FuzzyAntiNorm& n, const Vector& x, double t) { return n(x, t); }

FuzzyAntiNorm parse_antinorm(std::string_view family, CrispNorm crisp, std::size_t dimension) {
  auto parse_k = [&](std::string_view prefix) -> double {
    std::string_view rest = family.substr(prefix.size());
    if (rest.empty()) return 1.0;
    if (rest.size() < 5 || rest.substr(0, 3) != "(k=" || rest.back() != ')') {
      throw ValidationError("malformed family parameter in '" + std::string(family) + "'");
    }
    std::string_view num = rest.substr(3, rest.size() - 4);
    double k = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw ValidationError("bad k value in '" + std::string(family) + "'");
    }
    return k;
  };
  if (family == "quadratic-capped") return FuzzyAntiNorm::quadratic_capped(crisp, dimension);
  if (family.starts_with("harmonic")) return FuzzyAntiNorm::harmonic(parse_k("harmonic"), crisp, dimension);
  if (family.starts_with("ratio-simple")) {
    return FuzzyAntiNorm::ratio_simple(parse_k("ratio-simple"), crisp, dimension);
  }
  throw ValidationError("unknown anti-norm family '" + std::string(family) + "'");
}

Membership Membership::of(const FuzzyAntiNorm& n) {
  return Membership{n.dimension, [n](const Vector& x, double t) { return n(x, t); }};
}

// ---------------------------------------------------------------------------
// Axiom checker

std::string_view axiom_label(std::size_t index) {
  static constexpr std::array<std::string_view, kAxiomCount> labels{"(i)",  "(ii)", "(iii)", "(iv)",
                                                                    "(v)",  "(vi)", "(vii)"};
  return index < labels.size() ? labels[index] : "?";
}

namespace {

constexpr int kHorizonDoublings = 200;
constexpr int kSupremumHalvings = 1100;
constexpr double kSupremumFloor = 1e-300;

std::vector<Vector> sample_vectors(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<Vector> out;
  out.reserve(count + dim + 1);
  out.push_back(Vector::zero(dim));
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Vector::basis(dim, i));
  for (std::size_t s = 0; s < count; ++s) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.uniform(-10.0, 10.0);
    out.push_back(std::move(v));
  }
  return out;
}

Witness point_witness(const Vector& x, NamedValues values) { return Witness{x.data(), std::move(values)}; }

double positive_radius(Rng& rng) { return rng.log_uniform(1e-3, 1e3); }

// s, t for the triangle axiom: mostly positive, occasionally non-positive.
double any_radius(Rng& rng) {
  const double t = positive_radius(rng);
  return rng.uniform01() < 0.1 ? -t : t;
}

}  // namespace

AxiomVerdicts check_antinorm_axioms(const Membership& nu, TConorm conorm, std::size_t sample_count,
                                    std::uint64_t seed, double tol) {
  if (sample_count < 1) throw ValidationError("sample_count must be at least 1");
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
  if (!nu.eval) throw ValidationError("membership function is empty");

  const std::size_t dim = nu.dimension;
  AxiomVerdicts out;

  // Each axiom draws from its own stream so verdicts do not depend on check order.
  auto stream = [seed](std::uint64_t axiom) { return Rng(seed * 0x9E3779B97F4A7C15ULL + axiom); };

  // (i)
  {
    Rng rng = stream(1);
    const auto xs = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> bad;
    for (const auto& x : xs) {
      for (double t : {-1.0, 0.0, -positive_radius(rng)}) {
        const double v = nu.eval(x, t);
        ++evals;
        if (std::abs(v - 1.0) > tol) {
          bad = Verdict::refute(point_witness(x, {{"t", t}, {"nu", v}}), evals);
          break;
        }
      }
      if (bad) break;
    }
    out[0] = bad ? *bad : Verdict::certify("sampled", evals);
  }

  // (ii)
  {
    Rng rng = stream(2);
    const auto xs = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> bad;
    for (const auto& x : xs) {
      const double t = positive_radius(rng);
      const double v = nu.eval(x, t);
      ++evals;
      const bool ok = x.is_zero() ? std::abs(v) <= tol : v > 0.0;
      if (!ok) {
        bad = Verdict::refute(point_witness(x, {{"t", t}, {"nu", v}}), evals);
        break;
      }
    }
    out[1] = bad ? *bad : Verdict::certify("sampled", evals);
  }

  // (iii)
  {
    Rng rng = stream(3);
    const auto xs = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> bad;
    for (const auto& x : xs) {
      const double c = rng.sign() * rng.log_uniform(1e-3, 1e3);
      const double t = positive_radius(rng);
      const double lhs = nu.eval(x * c, t);
      const double rhs = nu.eval(x, t / std::abs(c));
      evals += 2;
      if (std::abs(lhs - rhs) > tol) {
        bad = Verdict::refute(point_witness(x, {{"c", c}, {"t", t}, {"lhs", lhs}, {"rhs", rhs}}), evals);
        break;
      }
    }
    out[2] = bad ? *bad : Verdict::certify("sampled", evals);
  }

  // (iv)
  {
    Rng rng = stream(4);
    const auto xs = sample_vectors(dim, sample_count, rng);
    const auto ys = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> bad;
    for (std::size_t i = 0; i < xs.size() && !bad; ++i) {
      // Pair each x with a y from the shuffled tail so that (0, e_i) pairs also occur.
      const Vector& x = xs[i];
      const Vector& y = ys[(i * 7 + 3) % ys.size()];
      const double s = any_radius(rng);
      const double t = any_radius(rng);
      const double lhs = nu.eval(x + y, s + t);
      const double rhs = conorm(nu.eval(x, s), nu.eval(y, t));
      evals += 3;
      if (lhs > rhs + tol) {
        Witness w = point_witness(x, {{"s", s}, {"t", t}, {"lhs", lhs}, {"rhs", rhs}});
        for (std::size_t j = 0; j < y.size(); ++j) w.values.set("y" + std::to_string(j), y[j]);
        bad = Verdict::refute(std::move(w), evals);
      }
    }
    out[3] = bad ? *bad : Verdict::certify("sampled", evals);
  }

  // (v)
  {
    Rng rng = stream(5);
    const auto xs = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> stuck;
    double largest_horizon = 0.0;
    for (const auto& x : xs) {
      double horizon = 1.0;
      double v = nu.eval(x, horizon);
      ++evals;
      int doublings = 0;
      while (v > tol && doublings < kHorizonDoublings) {
        horizon *= 2.0;
        v = nu.eval(x, horizon);
        ++evals;
        ++doublings;
      }
      if (v > tol) {
        stuck = Verdict::inconclusive_after(evals, "membership stays above tol up to the horizon budget");
        stuck->witness = point_witness(x, {{"t", horizon}, {"nu", v}});
        break;
      }
      largest_horizon = std::max(largest_horizon, horizon);
    }
    out[4] = stuck ? *stuck : Verdict::certify("sampled", evals, {{"max_horizon", largest_horizon}});
  }

  // (vi)
  {
    Rng rng = stream(6);
    const auto xs = sample_vectors(dim, sample_count, rng);
    std::size_t evals = 0;
    std::optional<Verdict> stuck;
    double smallest_t = 1.0;
    for (const auto& x : xs) {
      if (x.is_zero()) continue;  // the implication holds trivially at the origin
      double t = 1.0;
      double v = nu.eval(x, t);
      ++evals;
      int halvings = 0;
      while (v < 1.0 - tol && halvings < kSupremumHalvings && t > kSupremumFloor) {
        t *= 0.5;
        v = nu.eval(x, t);
        ++evals;
        ++halvings;
      }
      if (v < 1.0 - tol) {
        stuck = Verdict::inconclusive_after(evals, "supremum over the scanned radii stays below 1 - tol");
        stuck->witness = point_witness(x, {{"t", t}, {"nu", v}});
        break;
      }
      smallest_t = std::min(smallest_t, t);
    }
    out[5] = stuck ? *stuck : Verdict::certify("sampled", evals, {{"min_radius", smallest_t}});
  }

  // (vii)
  {
    Rng rng = stream(7);
    const auto xs = sample_vectors(dim, sample_count, rng);
    const auto grid = log_grid(1e-6, 1e12, 181);
    std::size_t evals = 0;
    std::optional<Verdict> bad;
    for (const auto& x : xs) {
      double prev_t = grid.front();
      double prev = nu.eval(x, prev_t);
      ++evals;
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const double t = grid[i];
        const double v = nu.eval(x, t);
        ++evals;
        const bool inside = prev > 0.0 && prev < 1.0 && v > 0.0 && v < 1.0;
        if (inside && !(v < prev)) {
          bad = Verdict::refute(point_witness(x, {{"t1", prev_t}, {"t2", t}, {"nu1", prev}, {"nu2", v}}), evals);
          break;
        }
        prev_t = t;
        prev = v;
      }
      if (bad) break;
    }
    out[6] = bad ? *bad : Verdict::certify("sampled", evals);
  }

  return out;
}

AxiomVerdicts check_antinorm_axioms(const FuzzyAntiNorm& nu, TConorm conorm, std::size_t sample_count,
                                    std::uint64_t seed, double tol) {
  nu.validate();
  return check_antinorm_axioms(Membership::of(nu), conorm, sample_count, seed, tol);
}

}  // namespace fuzzyanti
