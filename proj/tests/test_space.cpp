// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "fuzzyanti/error.hpp"
#include "fuzzyanti/sampling.hpp"
#include "fuzzyanti/space.hpp"
#include "oracle.hpp"

using namespace fuzzyanti;

namespace {

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(-10.0, 10.0);
  return v;
}

}  // namespace

TEST_CASE("anti-norm evaluation") {
  const auto h1 = FuzzyAntiNorm::harmonic(1.0, CrispNorm::Euclidean, 2);
  const auto qc = FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 2);
  const Vector e1{1.0, 0.0};
  CHECK(antinorm_eval(h1, e1, 1.0) == 0.5);
  CHECK(antinorm_eval(qc, e1, 0.5) == 1.0);
  for (const auto& n : {h1, qc, FuzzyAntiNorm::ratio_simple(2.0, CrispNorm::Sup, 2)}) {
    CHECK(antinorm_eval(n, Vector::zero(2), 5.0) == 0.0);
    CHECK(antinorm_eval(n, e1, 0.0) == 1.0);
    CHECK(antinorm_eval(n, e1, -3.0) == 1.0);
  }
  CHECK_THROWS_AS(antinorm_eval(h1, Vector{1.0}, 1.0), DimensionMismatch);
}

TEST_CASE("families agree with the closed formulas") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Vector x = random_vector(rng, 3);
    const double t = rng.log_uniform(1e-4, 1e4) * (rng.uniform01() < 0.1 ? -1.0 : 1.0);
    const double w = oracle::l2(x.data());
    for (double k : {0.5, 1.0, 2.0}) {
      const auto h = FuzzyAntiNorm::harmonic(k, CrispNorm::Euclidean, 3);
      CHECK(h(x, t) == doctest::Approx(oracle::harmonic(k, w, t)).epsilon(1e-14));
    }
    const auto q = FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 3);
    CHECK(q(x, t) == doctest::Approx(oracle::quadratic(w, t)).epsilon(1e-14));
  }
}

TEST_CASE("crisp norms behave like norms on samples") {
  Rng rng(5);
  for (auto kind : {CrispNorm::Euclidean, CrispNorm::Sup, CrispNorm::OneNorm}) {
    CAPTURE(to_string(kind));
    CHECK(parse_crisp_norm(to_string(kind)) == kind);
    CHECK(norm(kind, Vector::zero(3)) == 0.0);
    for (int i = 0; i < 500; ++i) {
      const Vector x = random_vector(rng, 3);
      const Vector y = random_vector(rng, 3);
      const double c = rng.uniform(-5.0, 5.0);
      CHECK(norm(kind, x) > 0.0);
      CHECK(norm(kind, x * c) == doctest::Approx(std::abs(c) * norm(kind, x)).epsilon(1e-14));
      CHECK(norm(kind, x + y) <= norm(kind, x) + norm(kind, y) + 1e-12);
    }
  }
  CHECK(norm(CrispNorm::Euclidean, Vector{3e200, 4e200}) == doctest::Approx(5e200));
  CHECK_THROWS_AS(parse_crisp_norm("l3"), ValidationError);
}

TEST_CASE("membership is nonincreasing in t") {
  Rng rng(8);
  const auto ts = oracle::logspace(1e-6, 1e8, 400);
  for (const auto& n : {FuzzyAntiNorm::harmonic(2.0, CrispNorm::Euclidean, 2),
                        FuzzyAntiNorm::quadratic_capped(CrispNorm::OneNorm, 2)}) {
    for (int i = 0; i < 50; ++i) {
      const Vector x = random_vector(rng, 2);
      for (std::size_t j = 1; j < ts.size(); ++j) CHECK(n(x, ts[j]) <= n(x, ts[j - 1]));
    }
  }
}

TEST_CASE("quadratic-capped is continuous across its plateau edge") {
  const auto q = FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 1);
  for (double w : {0.5, 1.0, 7.0}) {
    for (double off = 1e-3; off >= 1e-9; off /= 10.0) {
      const double v = q(Vector{w}, w * (1.0 + off));
      CHECK(v < 1.0);
      CHECK(1.0 - v <= 2.0 * off + 1e-15);
    }
  }
}

TEST_CASE("axioms hold for the built-in families") {
  for (const auto& n : {FuzzyAntiNorm::harmonic(1.0, CrispNorm::Euclidean, 2),
                        FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 2),
                        FuzzyAntiNorm::ratio_simple(2.0, CrispNorm::Sup, 1)}) {
    CAPTURE(n.family_name());
    const auto v = check_antinorm_axioms(n, TConorm{ConormKind::Max}, 500, 7, 1e-9);
    for (std::size_t i = 0; i < kAxiomCount; ++i) {
      CAPTURE(axiom_label(i));
      CHECK(v[i].certified());
    }
  }
}

TEST_CASE("homogeneity holds to 1e-12 and the triangle law on 10^4 tuples") {
  for (const auto& n : {FuzzyAntiNorm::harmonic(0.5, CrispNorm::Euclidean, 3),
                        FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 3)}) {
    const auto tight = check_antinorm_axioms(n, TConorm{ConormKind::Max}, 500, 3, 1e-12);
    CHECK(tight[2].certified());
    const auto many = check_antinorm_axioms(n, TConorm{ConormKind::Max}, 10000, 9, 1e-9);
    CHECK(many[3].certified());
  }
}

TEST_CASE("a mutant without the t <= 0 cap fails the first axiom at t = -1") {
  const auto h = FuzzyAntiNorm::harmonic(1.0, CrispNorm::Euclidean, 2);
  Membership mutant{2, [h](const Vector& x, double t) {
                      const double kw = h.k * h.crisp_norm(x);
                      return kw == 0.0 ? 0.0 : kw / (t + kw);
                    }};
  const auto v = check_antinorm_axioms(mutant, TConorm{ConormKind::Max}, 500, 7, 1e-9);
  REQUIRE(v[0].refuted());
  REQUIRE(v[0].witness);
  CHECK(v[0].witness->values.at("t") == -1.0);
  const Vector x(v[0].witness->point);
  CHECK(std::abs(mutant.eval(x, -1.0) - 1.0) > 1e-9);
}

TEST_CASE("a membership that never vanishes is not refuted on the limit axiom") {
  Membership stuck{1, [](const Vector& x, double t) {
                     if (t <= 0.0) return 1.0;
                     if (x[0] == 0.0) return 0.0;
                     return 0.5 + 0.5 / (1.0 + t);
                   }};
  const auto v = check_antinorm_axioms(stuck, TConorm{ConormKind::Max}, 50, 1, 1e-9);
  CHECK(v[4].inconclusive());
}

TEST_CASE("space declarations parse") {
  const auto h = parse_antinorm("harmonic(k=2.5)", CrispNorm::Sup, 3);
  CHECK(h.family == Family::Harmonic);
  CHECK(h.k == 2.5);
  CHECK(h.family_name() == "harmonic(k=2.5)");
  CHECK(parse_antinorm("quadratic-capped", CrispNorm::Euclidean, 1).family == Family::QuadraticCapped);
  CHECK(parse_antinorm("ratio-simple(k=1)", CrispNorm::Euclidean, 1).family == Family::RatioSimple);
  CHECK_THROWS_AS(parse_antinorm("harmonic(k=-1)", CrispNorm::Euclidean, 1), ValidationError);
  CHECK_THROWS_AS(parse_antinorm("gaussian", CrispNorm::Euclidean, 1), ValidationError);
  CHECK_THROWS_AS(parse_antinorm("harmonic(k=1)", CrispNorm::Euclidean, 0), ValidationError);
}
