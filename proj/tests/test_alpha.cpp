// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fuzzyanti/alpha.hpp"
#include "fuzzyanti/error.hpp"
#include "fuzzyanti/sampling.hpp"
#include "oracle.hpp"

using namespace fuzzyanti;

namespace {

const auto kH1 = FuzzyAntiNorm::harmonic(1.0, CrispNorm::Euclidean, 2);
const auto kH2 = FuzzyAntiNorm::harmonic(2.0, CrispNorm::Euclidean, 2);
const auto kQ = FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 2);

Vector random_vector(Rng& rng) { return Vector{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)}; }

}  // namespace

TEST_CASE("alpha-norm examples") {
  const auto p1 = AlphaNormProfile::with_defaults(kH1);
  const auto pq = AlphaNormProfile::with_defaults(kQ);
  CHECK(alpha_norm(p1, Vector{2.0, 0.0}, 0.5) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(alpha_norm(pq, Vector{0.0, 1.0}, 0.6) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(alpha_norm(p1, Vector::zero(2), 0.3) == 0.0);
  CHECK(closed_form_alpha_norm(kH2, Vector{1.0, 0.0}, 0.5) == doctest::Approx(2.0));
  CHECK(closed_form_alpha_norm(kQ, Vector{3.0, 0.0}, 0.6) == doctest::Approx(6.0));
  CHECK(closed_form_alpha_norm(kH2, Vector::zero(2), 0.4) == 0.0);
  CHECK_THROWS_AS(alpha_norm(p1, Vector{1.0, 0.0}, 1.0), ValidationError);
  CHECK_THROWS_AS(alpha_norm(p1, Vector{1.0}, 0.5), DimensionMismatch);
}

TEST_CASE("bisection agrees with the closed forms") {
  Rng rng(21);
  for (const auto& n : {kH1, kH2, kQ}) {
    const auto p = AlphaNormProfile::with_defaults(n);
    for (int i = 0; i < 500; ++i) {
      const Vector x = random_vector(rng);
      const double a = rng.uniform(0.01, 0.99);
      const double w = oracle::l2(x.data());
      const double exact = n.family == Family::QuadraticCapped ? oracle::quadratic_alpha(w, a)
                                                              : oracle::harmonic_alpha(n.k, w, a);
      const double got = alpha_norm(p, x, a);
      CHECK(std::abs(got - exact) <= 10.0 * p.bisection_tol * std::max(1.0, exact));
      CHECK(got > 0.0);
    }
  }
}

TEST_CASE("alpha-norms are absolutely homogeneous") {
  Rng rng(4);
  for (const auto& n : {kH1, kQ}) {
    const auto p = AlphaNormProfile::with_defaults(n);
    for (int i = 0; i < 300; ++i) {
      const Vector x = random_vector(rng);
      const double c = rng.sign() * rng.log_uniform(1e-3, 1e3);
      const double a = rng.uniform(0.01, 0.99);
      const double lhs = alpha_norm(p, x * c, a);
      const double rhs = std::abs(c) * alpha_norm(p, x, a);
      CHECK(std::abs(lhs - rhs) <= 10.0 * p.bisection_tol * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("membership is recovered from its alpha-norms") {
  Rng rng(6);
  for (const auto& n : {kH1, kQ}) {
    const auto p = AlphaNormProfile::with_defaults(n);
    const double bound = p.grid_spacing() + 10.0 * p.bisection_tol;
    int used = 0;
    while (used < 200) {
      const Vector x = random_vector(rng);
      const double t = rng.log_uniform(1e-2, 1e3);
      const double v = n(x, t);
      if (!(v > 0.0 && v < 1.0)) continue;
      ++used;
      CHECK(std::abs(reconstruct_nu(p, x, t) - v) <= bound);
    }
  }
  const auto p = AlphaNormProfile::with_defaults(kH1);
  CHECK(std::abs(reconstruct_nu(p, Vector{1.0, 0.0}, 1.0) - 0.5) <= p.grid_spacing() + 10.0 * p.bisection_tol);
  CHECK(reconstruct_nu(p, Vector::zero(2), 0.0) == 1.0);
  CHECK(reconstruct_nu(p, Vector{0.3, 0.1}, 0.0) == 1.0);
}

TEST_CASE("alpha-norms ascend with alpha") {
  CHECK(check_ascending_family(AlphaNormProfile::with_defaults(kH1), Vector{1.0, 0.0}).certified());
  CHECK(check_ascending_family(AlphaNormProfile::with_defaults(kQ), Vector{0.0, 1.0}).certified());
  const AlphaNormProfile single{kH1, {0.5}};
  const Verdict v = check_ascending_family(single, Vector{1.0, 0.0});
  CHECK(v.certified());
  CHECK(v.basis == "vacuous");
  CHECK_THROWS_AS(check_ascending_family(single, Vector::zero(2)), ValidationError);
}

TEST_CASE("profile validation and bracket failure") {
  AlphaNormProfile bad{kH1, {0.5, 0.4}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  AlphaNormProfile tight = AlphaNormProfile::with_defaults(kH1);
  tight.max_doublings = 3;
  CHECK_THROWS_AS(alpha_norm(tight, Vector{1000.0, 0.0}, 0.5), BracketFailure);
}

TEST_CASE("curve writers emit headers and full-precision rows") {
  const auto p = AlphaNormProfile{FuzzyAntiNorm::quadratic_capped(CrispNorm::Euclidean, 1), {0.6}};
  std::ostringstream a;
  write_alpha_curve(a, p, Vector{1.0});
  std::istringstream in(a.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "alpha,alpha_norm");
  CHECK(row.substr(0, 4) == "0.6,");
  CHECK(std::stod(row.substr(4)) == doctest::Approx(2.0).epsilon(1e-9));

  std::ostringstream d;
  const std::vector<double> ts{1.0, 3.0};
  write_duality_curve(d, AlphaNormProfile::with_defaults(FuzzyAntiNorm::harmonic(1.0, CrispNorm::Euclidean, 1)),
                      Vector{1.0}, ts);
  CHECK(d.str().rfind("t,nu,nu_reconstructed\n1,0.5,", 0) == 0);
}
