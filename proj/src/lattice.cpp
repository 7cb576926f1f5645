// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"
#include "fuzzyanti/operators.hpp"

namespace fuzzyanti {

namespace {

constexpr std::array<double, 5> kAlphas{0.1, 0.3, 0.5, 0.7, 0.9};
constexpr std::array<double, 3> kEps{0.1, 1.0, 10.0};
constexpr std::array<double, 3> kSequenceRadii{0.1, 1.0, 10.0};
constexpr std::size_t kRandomPoints = 5;

constexpr const char* kStrongToWeak = "strong-bounded => weak-bounded (same constant)";
constexpr const char* kContToBound = "strong-continuous at origin => strong-bounded (M = 1/delta)";
constexpr const char* kBoundToCont = "strong-bounded <=> strong-continuous at origin";
constexpr const char* kContEverywhere = "strong continuity at origin <=> at every point";
constexpr const char* kWeakContToBound = "weak-continuous at origin => weak-bounded (M_alpha = 1/delta)";
constexpr const char* kWeakBoundToCont = "weak-bounded => weak-continuous at origin (delta = 1/M_alpha)";
constexpr const char* kStrongToWeakCont = "strong-continuous => weak-continuous";
constexpr const char* kStrongToSequential = "strong-continuous => sequentially continuous";
constexpr const char* kSequentialEverywhere = "sequential continuity at origin => at every point";
constexpr const char* kStrongToUniform = "strong-bounded => alpha-norm bounded (same constant)";
constexpr const char* kWeakUniform = "weak-bounded <=> alpha-norm bounded per level";
constexpr const char* kFiniteDimWeak = "finite dimension => weak-bounded";

class Recorder {
 public:
  explicit Recorder(LatticeReport& r) : r_(r) {}

  void observe(const char* rule, bool contradiction, const std::string& detail = {}) {
    RuleCheck& c = get(rule);
    c.exercised = true;
    if (contradiction) {
      c.contradiction = true;
      if (!c.detail.empty()) c.detail += "; ";
      c.detail += detail;
    }
  }

  void declare(const char* rule) { get(rule); }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }

 private:
  RuleCheck& get(const char* rule) {
    for (auto& c : r_.rules) {
      if (c.rule == rule) return c;
    }
    r_.rules.push_back(RuleCheck{rule, false, false, {}});
    return r_.rules.back();
  }

  LatticeReport& r_;
};

std::string at_alpha(double alpha) { return "alpha=" + format_double(alpha); }

Vector scaled(const std::vector<double>& coords, double c) { return Vector(coords) * c; }

// Weak continuity implication at origin with eps = 1, evaluated at one deviation.
bool weak_continuity_fails_at(const BoundednessCheck& b, double alpha, double delta, const Vector& h) {
  const double level = 1.0 - alpha;
  return b.domain_norm(h, delta) <= level && exceeds(b.codomain_norm(b.map(h), 1.0), level);
}

AlphaNormProfile single_level(const FuzzyAntiNorm& n, double alpha) { return AlphaNormProfile{n, {alpha}}; }

// Midpoint between the two alpha-norms of a refuted comparison; the weak
// implication holds its premise and breaks its conclusion there.
double split_radius(const Witness& w) { return 0.5 * (w.values.at("lhs") + w.values.at("rhs")); }

struct LevelResult {
  Verdict continuity;
  Verdict bounded;
};

// Weak constant for one level through the continuity route, reconciled with
// the alpha-norm comparison. When one check refutes what the other certified,
// the witness is carried over; if it breaks the certified statement too, the
// certification was a sampling gap and the next smaller delta is tried.
LevelResult establish_weak_level(const BoundednessCheck& b, const Vector& theta, double alpha, Recorder& rec) {
  const auto grid = b.delta_grid.values();
  double ceiling = std::numeric_limits<double>::infinity();
  LevelResult out;
  for (std::size_t attempt = 0; attempt <= grid.size(); ++attempt) {
    std::vector<double> deltas;
    for (double d : grid) {
      if (d < ceiling) deltas.push_back(d);
    }
    if (deltas.empty()) break;
    out.continuity = check_weak_continuity_at(b, theta, 1.0, alpha, deltas);
    if (!out.continuity.certified()) {
      out.bounded = Verdict::inconclusive_after(0, "no weak continuity delta at " + at_alpha(alpha));
      return out;
    }
    const double delta = out.continuity.constants.at("delta");
    const double M_alpha = 1.0 / delta;
    out.bounded = check_weak_anti_bounded(b, alpha, M_alpha);
    if (out.bounded.refuted()) {
      const Witness& w = *out.bounded.witness;
      const Vector h = scaled(w.point, 1.0 / w.values.at("t"));
      if (weak_continuity_fails_at(b, alpha, delta, h)) {
        rec.note("sampling gap at " + at_alpha(alpha) + ": delta=" + format_double(delta) +
                 " overturned by a transferred weak-bound witness");
        ceiling = delta;
        continue;
      }
      rec.observe(kWeakContToBound, true, at_alpha(alpha) + " weak bound refuted and the witness does not transfer");
      return out;
    }
    rec.observe(kWeakContToBound, false);

    const Verdict le = check_uniform_anti_bounded(b, single_level(b.domain_norm, alpha),
                                                  single_level(b.codomain_norm, alpha), M_alpha,
                                                  UniformDirection::DerivedLE);
    if (le.refuted()) {
      const Witness& w = *le.witness;
      const Verdict at = weak_bound_at(b, alpha, M_alpha, Vector(w.point), split_radius(w));
      if (at.refuted()) {
        rec.note("sampling gap at " + at_alpha(alpha) + ": M_alpha=" + format_double(M_alpha) +
                 " overturned by an alpha-norm witness");
        ceiling = delta;
        continue;
      }
      rec.observe(kWeakUniform, true, at_alpha(alpha) + " alpha-norm bound fails while the weak bound holds");
      return out;
    }
    rec.observe(kWeakUniform, false);
    out.bounded.constants.set("delta", delta);
    return out;
  }
  out.bounded = Verdict::inconclusive_after(0, "delta candidates exhausted at " + at_alpha(alpha));
  return out;
}

std::vector<SequenceSpec> sequences_towards(const BoundednessCheck& b, const Vector& x0) {
  const std::size_t n = b.domain_norm.dimension;
  Vector e = Vector::basis(n, 0);
  e *= 1.0 / b.domain_norm.crisp_norm(e);
  SequenceSpec harmonic{SequenceKind::Harmonic, x0, e, 0.5, 10000, b.domain_norm};
  SequenceSpec geometric{SequenceKind::Geometric, x0, e, 0.5, 10000, b.domain_norm};
  return {harmonic, geometric};
}

}  // namespace

std::size_t LatticeReport::contradictions() const {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.contradiction ? 1 : 0;
  return n;
}

const NotionRow* LatticeReport::notion(const std::string& name) const {
  for (const auto& row : notions) {
    if (row.notion == name) return &row;
  }
  return nullptr;
}

const RuleCheck* LatticeReport::rule(const std::string& name) const {
  for (const auto& r : rules) {
    if (r.rule == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> named_fixture_names() { return {"zero", "identity", "example-4-3", "example-4-6"}; }

LatticeFixture named_fixture(const std::string& name) {
  constexpr std::size_t dim = 2;
  const auto l2 = CrispNorm::Euclidean;
  const auto h1 = FuzzyAntiNorm::harmonic(1.0, l2, dim);
  if (name == "zero") return {name, {h1, h1, LinearMap::zero(dim, dim)}};
  if (name == "identity") return {name, {h1, h1, LinearMap::identity(dim)}};
  if (name == "example-4-3") {
    return {name, {FuzzyAntiNorm::harmonic(2.0, l2, dim), h1, LinearMap::scaling(3.0, dim)}};
  }
  if (name == "example-4-6") {
    return {name, {FuzzyAntiNorm::quadratic_capped(l2, dim), h1, LinearMap::identity(dim)}};
  }
  throw ValidationError("unknown lattice fixture '" + name + "'");
}

LatticeReport run_theorem_lattice(const LatticeFixture& fixture) {
  const BoundednessCheck& b = fixture.check;
  b.validate();
  if (!b.map.is_linear()) throw ValidationError("the lattice needs a linear map");
  LatticeReport report;
  report.fixture = fixture.name;
  Recorder rec(report);
  for (const char* r : {kStrongToWeak, kContToBound, kBoundToCont, kContEverywhere, kWeakContToBound,
                        kWeakBoundToCont, kStrongToWeakCont, kStrongToSequential, kSequentialEverywhere,
                        kStrongToUniform, kWeakUniform, kFiniteDimWeak}) {
    rec.declare(r);
  }
  const Vector theta = Vector::zero(b.domain_norm.dimension);

  Rng rng(b.seed ^ 0x5EEDF00Dull);
  std::vector<Vector> points;
  for (std::size_t i = 0; i < kRandomPoints; ++i) {
    Vector p(b.domain_norm.dimension);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = rng.uniform(-2.0, 2.0);
    points.push_back(p);
  }

  // Strong boundedness.
  const StrongBoundSearch search = search_strong_bound(b);
  Verdict strong = search.constant ? check_strong_anti_bounded(b, *search.constant) : search.sweep.back().verdict;
  if (!search.constant) strong.note = "no certifying constant up to 2^32";

  // Constant reuse for the weak notion.
  if (search.constant) {
    const double M = *search.constant;
    for (double alpha : kAlphas) {
      const Verdict w = check_weak_anti_bounded(b, alpha, M);
      rec.observe(kStrongToWeak, !w.certified(), at_alpha(alpha) + " weak bound with M=" + format_double(M) + " is " +
                                                     std::string(to_string(w.status)));
      const Verdict c = check_weak_continuity_at(b, theta, 1.0, alpha, std::vector<double>{1.0 / M});
      if (c.refuted()) {
        const Vector h(c.witness->point);
        const bool transfers = weak_bound_at(b, alpha, M, h, 1.0).refuted();
        rec.observe(transfers ? kStrongToWeak : kWeakBoundToCont, true,
                    at_alpha(alpha) + " weak continuity refuted at delta=1/M");
      } else {
        rec.observe(kWeakBoundToCont, false);
      }
    }
  }

  // Strong continuity at the origin and elsewhere.
  const Verdict sc0 = check_strong_continuity_at(b, theta, kEps);
  if (sc0.certified()) {
    const double delta = sc0.constants.at("delta[eps=1]");
    const Verdict v = check_strong_anti_bounded(b, 1.0 / delta);
    rec.observe(kContToBound, !v.certified(), "M=1/delta=" + format_double(1.0 / delta) + " is " +
                                                  std::string(to_string(v.status)));
  }
  if (!strong.inconclusive() && !sc0.inconclusive()) {
    rec.observe(kBoundToCont, strong.certified() != sc0.certified(),
                "strong boundedness is " + std::string(to_string(strong.status)) + " but strong continuity is " +
                    std::string(to_string(sc0.status)));
  }
  for (const Vector& p : points) {
    const Verdict v = check_strong_continuity_at(b, p, kEps);
    if (v.inconclusive() || sc0.inconclusive()) continue;
    rec.observe(kContEverywhere, v.status != sc0.status,
                "status at a random point differs from the origin (" + std::string(to_string(v.status)) + ")");
  }

  // Weak notions per level.
  std::vector<Verdict> wc_parts;
  std::vector<Verdict> wb_parts;
  NamedValues deltas;
  NamedValues constants;
  for (double alpha : kAlphas) {
    LevelResult level = establish_weak_level(b, theta, alpha, rec);
    if (level.continuity.certified()) deltas.set("delta[" + at_alpha(alpha) + "]", level.continuity.constants.at("delta"));
    if (level.bounded.certified()) {
      constants.set("M_alpha[" + at_alpha(alpha) + "]", level.bounded.constants.at("M_alpha"));
    }
    rec.observe(kFiniteDimWeak, !level.bounded.certified(), "no weak constant established at " + at_alpha(alpha));
    if (sc0.certified()) rec.observe(kStrongToWeakCont, level.continuity.refuted(), at_alpha(alpha));
    wc_parts.push_back(std::move(level.continuity));
    wb_parts.push_back(std::move(level.bounded));
  }
  const Verdict weak_continuity = combine_verdicts(wc_parts, deltas);
  const Verdict weak = combine_verdicts(wb_parts, constants);

  // alpha-norm comparison with the strong constant.
  Verdict uniform;
  if (search.constant) {
    const double M = *search.constant;
    uniform = check_uniform_anti_bounded(b, AlphaNormProfile::with_defaults(b.domain_norm),
                                         AlphaNormProfile::with_defaults(b.codomain_norm), M,
                                         UniformDirection::DerivedLE);
    if (uniform.refuted()) {
      const Witness& w = *uniform.witness;
      const double t = split_radius(w);
      const Vector x(w.point);
      const bool gap = exceeds(b.codomain_norm(b.map(x), t), b.domain_norm(x, t / M));
      if (gap) {
        rec.note("sampling gap: strong constant overturned by an alpha-norm witness");
        strong = Verdict::refute({w.point, {{"t", t}, {"M", M}}}, strong.samples);
      } else {
        rec.observe(kStrongToUniform, true, "alpha-norm bound with the strong constant fails");
      }
    } else {
      rec.observe(kStrongToUniform, false);
    }
  } else {
    uniform = Verdict::inconclusive_after(0, "no strong constant to compare with");
  }

  // Sequential continuity.
  const auto seq0 = check_sequential_continuity_at(b, theta, sequences_towards(b, theta), kSequenceRadii);
  if (sc0.certified()) rec.observe(kStrongToSequential, seq0.refuted(), "sequential continuity at origin refuted");
  if (seq0.certified()) {
    for (const Vector& p : points) {
      const Verdict v = check_sequential_continuity_at(b, p, sequences_towards(b, p), kSequenceRadii);
      rec.observe(kSequentialEverywhere, v.refuted(), "sequential continuity refuted at a random point");
    }
  }

  const Verdict fuzzy = check_fuzzy_continuity_at(b, theta, 1.0, 0.5);

  report.notions = {{"strong-bounded", strong},          {"weak-bounded", weak},
                    {"uniform-bounded-le", uniform},      {"strong-continuity", sc0},
                    {"weak-continuity", weak_continuity}, {"fuzzy-continuity", fuzzy},
                    {"sequential-continuity", seq0}};
  return report;
}

}  // namespace fuzzyanti
