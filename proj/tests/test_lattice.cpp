// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <string>

#include "doctest.h"
#include "fuzzyanti/error.hpp"
#include "fuzzyanti/operators.hpp"

using namespace fuzzyanti;

namespace {

using Matrix = std::map<std::string, Status>;

constexpr auto C = Status::Certified;
constexpr auto R = Status::Refuted;
constexpr auto I = Status::Inconclusive;

Matrix all_certified() {
  return {{"strong-bounded", C},    {"weak-bounded", C},     {"uniform-bounded-le", C},
          {"strong-continuity", C}, {"weak-continuity", C},  {"fuzzy-continuity", C},
          {"sequential-continuity", C}};
}

Matrix expected(const std::string& fixture) {
  if (fixture != "example-4-6") return all_certified();
  return {{"strong-bounded", R},    {"weak-bounded", C},    {"uniform-bounded-le", I},
          {"strong-continuity", R}, {"weak-continuity", C}, {"fuzzy-continuity", C},
          {"sequential-continuity", C}};
}

}  // namespace

TEST_CASE("every named fixture is consistent with the implications") {
  for (const auto& name : named_fixture_names()) {
    CAPTURE(name);
    const LatticeReport rep = run_theorem_lattice(named_fixture(name));
    CHECK(rep.fixture == name);
    CHECK(rep.contradictions() == 0);
    for (const auto& r : rep.rules) {
      CAPTURE(r.rule);
      CHECK_FALSE(r.contradiction);
    }
    const Matrix want = expected(name);
    REQUIRE(rep.notions.size() == want.size());
    for (const auto& row : rep.notions) {
      CAPTURE(row.notion);
      CHECK(row.verdict.status == want.at(row.notion));
    }
  }
}

TEST_CASE("strong constants are reused for the weak notions") {
  const LatticeReport rep = run_theorem_lattice(named_fixture("example-4-3"));
  const RuleCheck* reuse = rep.rule("strong-bounded => weak-bounded (same constant)");
  REQUIRE(reuse);
  CHECK(reuse->exercised);
  const RuleCheck* uniform = rep.rule("strong-bounded => alpha-norm bounded (same constant)");
  REQUIRE(uniform);
  CHECK(uniform->exercised);
  CHECK(rep.rule("strong-bounded <=> strong-continuous at origin")->exercised);
  const NotionRow* strong = rep.notion("strong-bounded");
  REQUIRE(strong);
  CHECK(strong->verdict.constants.at("M") >= 1.5);

  const LatticeReport capped = run_theorem_lattice(named_fixture("example-4-6"));
  CHECK_FALSE(capped.rule("strong-bounded => weak-bounded (same constant)")->exercised);
  CHECK(capped.rule("finite dimension => weak-bounded")->exercised);
  CHECK(capped.rule("weak-continuous at origin => weak-bounded (M_alpha = 1/delta)")->exercised);
  CHECK(capped.notion("weak-bounded")->verdict.constants.get("M_alpha[alpha=0.5]"));
}

TEST_CASE("lattice input validation") {
  CHECK_THROWS_AS(named_fixture("nonexistent"), ValidationError);
  const auto r1 = FuzzyAntiNorm::ratio_simple(1.0, CrispNorm::Euclidean, 1);
  const LatticeFixture quartic{"quartic", {r1, r1, ScalarMap{ScalarKind::Quartic, 1.0}}};
  CHECK_THROWS_AS(run_theorem_lattice(quartic), ValidationError);
}
