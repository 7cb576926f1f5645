// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <type_traits>
#include <sstream>

#include "fuzzyanti/alpha.hpp"
#include "fuzzyanti/conorm.hpp"
#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"
#include "fuzzyanti/operators.hpp"
#include "fuzzyanti/suite.hpp"
#include "json.hpp"
#include "suite_text.hpp"

namespace fuzzyanti {

namespace {

using json = nlohmann::ordered_json;

// Typed access to key=value parameters; finish() rejects unused keys.
class Reader {
 public:
  Reader(std::string what, Params p) : what_(std::move(what)), p_(std::move(p)) {}

  bool has(const std::string& key) const {
    for (const auto& [k, v] : p_) {
      if (k == key) return true;
    }
    return false;
  }

  std::string text(const std::string& key) {
    if (auto v = take(key)) return *v;
    throw ValidationError(what_ + ": missing parameter '" + key + "'");
  }
  std::string text_or(const std::string& key, std::string fallback) { return take(key).value_or(std::move(fallback)); }

  double number(const std::string& key) { return wrap(key, [&] { return detail::parse_number(text(key)); }); }
  double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  std::size_t count_or(const std::string& key, std::size_t fallback) {
    if (!has(key)) return fallback;
    return wrap(key, [&] { return static_cast<std::size_t>(detail::parse_unsigned(text(key))); });
  }

  std::vector<double> list(const std::string& key) { return wrap(key, [&] { return detail::parse_list(text(key)); }); }
  std::vector<double> list_or(const std::string& key, std::vector<double> fallback) {
    return has(key) ? list(key) : std::move(fallback);
  }

  Vector vec(const std::string& key) { return wrap(key, [&] { return detail::parse_vector(text(key)); }); }
  std::vector<Vector> points(const std::string& key) {
    return wrap(key, [&] { return detail::parse_points(text(key)); });
  }

  void finish() const {
    if (!p_.empty()) throw ValidationError(what_ + ": unknown parameter '" + p_.front().first + "'");
  }

 private:
  std::optional<std::string> take(const std::string& key) {
    for (auto it = p_.begin(); it != p_.end(); ++it) {
      if (it->first == key) {
        std::string v = std::move(it->second);
        p_.erase(it);
        return v;
      }
    }
    return std::nullopt;
  }

  template <class F>
  std::invoke_result_t<F> wrap(const std::string& key, F&& f) {
    try {
      return f();
    } catch (const ValidationError& e) {
      throw ValidationError(what_ + ": parameter '" + key + "': " + e.what());
    }
  }

  std::string what_;
  Params p_;
};

struct Outcome {
  Verdict verdict;
  json details;
};

using Job = std::function<Outcome()>;

Outcome plain(Verdict v) { return {std::move(v), nullptr}; }

BoundednessCheck make_check(const SuiteConfig& cfg, Reader& r, std::uint64_t seed) {
  BoundednessCheck b{cfg.space(r.text("domain")), cfg.space(r.text("codomain")), cfg.map(r.text("map"))};
  b.x_samples = r.count_or("x_samples", b.x_samples);
  b.t_grid = {r.number_or("t_min", b.t_grid.min), r.number_or("t_max", b.t_grid.max),
              r.count_or("t_points", b.t_grid.points)};
  b.delta_grid = {r.number_or("delta_min", b.delta_grid.min), r.number_or("delta_max", b.delta_grid.max),
                  r.count_or("delta_points", b.delta_grid.points)};
  b.seed = seed;
  b.validate();
  return b;
}

void require_linear(const BoundednessCheck& b) {
  if (!b.map.is_linear()) throw ValidationError("boundedness checks need a linear map, got " + b.map.describe());
}

std::string key_at(const char* name, double a) { return std::string(name) + "[alpha=" + format_double(a) + "]"; }

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json values = json::object();
  for (const auto& [k, v] : w->values.items()) values[k] = v;
  return json{{"point", w->point}, {"values", values}};
}

json constants_json(const NamedValues& c) {
  json out = json::object();
  for (const auto& [k, v] : c.items()) out[k] = v;
  return out;
}

Job strong_bound_search_job(BoundednessCheck b) {
  require_linear(b);
  return [b] {
    const StrongBoundSearch s = search_strong_bound(b);
    json sweep = json::array();
    for (const auto& step : s.sweep) {
      json item{{"M", step.M}, {"verdict", to_string(step.verdict.status)}};
      if (step.verdict.witness) {
        item["t"] = step.verdict.witness->values.at("t");
        item["lhs"] = step.verdict.witness->values.at("lhs");
        item["rhs"] = step.verdict.witness->values.at("rhs");
      }
      sweep.push_back(std::move(item));
    }
    json details{{"sweep", sweep}, {"bisection_steps", s.bisection.size()}};
    std::size_t samples = 0;
    for (const auto& step : s.sweep) samples += step.verdict.samples;
    for (const auto& step : s.bisection) samples += step.verdict.samples;
    if (s.constant) return Outcome{Verdict::certify("sampled", samples, {{"M", *s.constant}}), details};
    Verdict v = s.sweep.back().verdict;
    v.samples = samples;
    v.note = "no certifying constant up to 2^32";
    return Outcome{v, details};
  };
}

Job build_job(const SuiteConfig& cfg, const CheckDecl& c, std::uint64_t seed) {
  Reader r("check '" + c.name + "'", c.params);
  Job job;
  const std::string& k = c.kind;
  if (k == "conorm-axioms") {
    const TConorm op{parse_conorm(r.text_or("conorm", "max"))};
    const std::size_t n = r.count_or("samples", 1000);
    job = [op, n, seed] { return plain(check_conorm_axioms(op, n, seed)); };
  } else if (k == "axioms") {
    const FuzzyAntiNorm nu = cfg.space(r.text("space"));
    const TConorm op{parse_conorm(r.text_or("conorm", "max"))};
    const std::size_t n = r.count_or("samples", 500);
    const double tol = r.number_or("tol", 1e-9);
    job = [nu, op, n, seed, tol] {
      const AxiomVerdicts all = check_antinorm_axioms(nu, op, n, seed, tol);
      json details = json::object();
      for (std::size_t i = 0; i < all.size(); ++i) details[std::string(axiom_label(i))] = to_string(all[i].status);
      return Outcome{combine_verdicts(all, {}), details};
    };
  } else if (k == "alpha-norm" || k == "ascending") {
    AlphaNormProfile p = AlphaNormProfile::with_defaults(cfg.space(r.text("space")));
    p.alpha_grid = r.list_or("alpha", p.alpha_grid);
    p.bisection_tol = r.number_or("bisection_tol", p.bisection_tol);
    p.validate();
    const Vector x = r.vec("x");
    if (x.size() != p.source.dimension) throw DimensionMismatch("check '" + c.name + "': x has the wrong dimension");
    if (k == "ascending") {
      job = [p, x] { return plain(check_ascending_family(p, x)); };
    } else {
      job = [p, x] {
        NamedValues values;
        for (double a : p.alpha_grid) {
          values.set(key_at("alpha_norm", a), alpha_norm(p, x, a));
          values.set(key_at("closed_form", a), closed_form_alpha_norm(p.source, x, a));
        }
        return plain(Verdict::certify("exact", p.alpha_grid.size(), std::move(values)));
      };
    }
  } else if (k == "strong-bound-search") {
    job = strong_bound_search_job(make_check(cfg, r, seed));
  } else if (k == "strong-bounded") {
    BoundednessCheck b = make_check(cfg, r, seed);
    require_linear(b);
    const double M = r.number("M");
    job = [b, M] { return plain(check_strong_anti_bounded(b, M)); };
  } else if (k == "weak-bounded") {
    BoundednessCheck b = make_check(cfg, r, seed);
    require_linear(b);
    const auto alphas = r.list("alpha");
    const std::string rule = r.text_or("rule", "");
    std::optional<double> M;
    if (rule.empty()) {
      M = r.number("M_alpha");
    } else if (rule != "reciprocal-complement") {
      throw ValidationError("check '" + c.name + "': unknown constant rule '" + rule + "'");
    }
    job = [b, alphas, M] {
      std::vector<Verdict> parts;
      NamedValues constants;
      for (double a : alphas) {
        const double m = M ? *M : 1.0 / (1.0 - a);
        parts.push_back(check_weak_anti_bounded(b, a, m));
        constants.set(key_at("M_alpha", a), m);
      }
      return plain(combine_verdicts(parts, std::move(constants)));
    };
  } else if (k == "uniform-bounded") {
    BoundednessCheck b = make_check(cfg, r, seed);
    require_linear(b);
    const double M = r.number("M");
    const std::string dir = r.text_or("direction", "le");
    if (dir != "le" && dir != "ge") throw ValidationError("check '" + c.name + "': direction must be le or ge");
    AlphaNormProfile pd = AlphaNormProfile::with_defaults(b.domain_norm);
    AlphaNormProfile pc = AlphaNormProfile::with_defaults(b.codomain_norm);
    pd.alpha_grid = pc.alpha_grid = r.list_or("alpha", pd.alpha_grid);
    pd.validate();
    const auto direction = dir == "le" ? UniformDirection::DerivedLE : UniformDirection::PaperGE;
    job = [b, pd, pc, M, direction] { return plain(check_uniform_anti_bounded(b, pd, pc, M, direction)); };
  } else if (k == "strong-continuity" || k == "weak-continuity" || k == "fuzzy-continuity") {
    BoundednessCheck b = make_check(cfg, r, seed);
    const Vector x0 = r.vec("x0");
    if (x0.size() != b.domain_norm.dimension) throw DimensionMismatch("check '" + c.name + "': x0 has the wrong dimension");
    const auto eps = r.list("eps");
    const std::size_t budget = r.count_or("budget", kDefaultBudget);
    const auto deltas = b.delta_grid.values();
    if (k == "strong-continuity") {
      job = [b, x0, eps, deltas, budget] { return plain(check_strong_continuity_at(b, x0, eps, deltas, budget)); };
    } else {
      const auto alphas = r.list("alpha");
      const auto betas = r.list_or("beta", default_beta_grid());
      const bool weak = k == "weak-continuity";
      job = [b, x0, eps, alphas, betas, deltas, budget, weak] {
        std::vector<Verdict> parts;
        NamedValues constants;
        for (double e : eps) {
          for (double a : alphas) {
            Verdict v = weak ? check_weak_continuity_at(b, x0, e, a, deltas, budget)
                             : check_fuzzy_continuity_at(b, x0, e, a, deltas, betas, budget);
            const std::string tag = "[eps=" + format_double(e) + ",alpha=" + format_double(a) + "]";
            for (const auto& [name, value] : v.constants.items()) constants.set(name + tag, value);
            parts.push_back(std::move(v));
          }
        }
        return plain(combine_verdicts(parts, std::move(constants)));
      };
    }
  } else if (k == "sequential-continuity") {
    BoundednessCheck b = make_check(cfg, r, seed);
    const Vector x0 = r.vec("x0");
    std::vector<SequenceSpec> seqs;
    for (auto name : detail::split(r.text("sequences"), ',')) seqs.push_back(cfg.sequence(std::string(name)));
    const auto ts = r.list_or("t", {0.1, 1.0, 10.0});
    const double level = r.number_or("r", 0.05);
    job = [b, x0, seqs, ts, level] { return plain(check_sequential_continuity_at(b, x0, seqs, ts, level)); };
  } else if (k == "convergent" || k == "cauchy") {
    const SequenceSpec s = cfg.sequence(r.text("sequence"));
    const auto ts = r.list_or("t", {0.1, 1.0, 10.0});
    const double level = r.number_or("r", 0.05);
    if (k == "convergent") {
      const Vector limit = r.has("limit") ? r.vec("limit") : Vector::zero(s.space.dimension);
      job = [s, limit, ts, level] { return plain(check_convergent(s, limit, ts, level)); };
    } else {
      const std::size_t p_max = r.count_or("p_max", 32);
      job = [s, ts, level, p_max] { return plain(check_cauchy(s, ts, level, p_max)); };
    }
  } else if (k == "bounded-set") {
    const FuzzyAntiNorm nu = cfg.space(r.text("space"));
    const auto pts = r.points("points");
    job = [nu, pts] { return plain(check_bounded_set(pts, nu)); };
  } else if (k == "lattice") {
    LatticeFixture f = named_fixture(r.text("fixture"));
    f.check.seed = seed;
    job = [f] {
      const LatticeReport rep = run_theorem_lattice(f);
      json matrix = json::object();
      for (const auto& row : rep.notions) matrix[row.notion] = to_string(row.verdict.status);
      json rules = json::array();
      std::string contradicted;
      for (const auto& rule : rep.rules) {
        rules.push_back({{"rule", rule.rule},
                         {"exercised", rule.exercised},
                         {"contradiction", rule.contradiction},
                         {"detail", rule.detail}});
        if (rule.contradiction) contradicted += (contradicted.empty() ? "" : "; ") + rule.rule;
      }
      json details{{"matrix", matrix}, {"rules", rules}, {"notes", rep.notes}};
      std::size_t samples = 0;
      for (const auto& row : rep.notions) samples += row.verdict.samples;
      Verdict v = Verdict::certify("sampled", samples, {{"contradictions", static_cast<double>(rep.contradictions())}});
      if (rep.contradictions() > 0) {
        v.status = Status::Refuted;
        v.basis = "contradiction";
        v.note = contradicted;
      }
      return Outcome{v, details};
    };
  } else {
    throw ValidationError("check '" + c.name + "': unknown kind '" + k + "'");
  }
  r.finish();

  if (c.expect) {
    static const std::set<std::string> verdicts{"certified", "refuted", "inconclusive"};
    const bool search = k == "strong-bound-search";
    const bool ok = verdicts.count(*c.expect) > 0 || (search && (*c.expect == "found" || *c.expect == "absent"));
    if (!ok) throw ValidationError("check '" + c.name + "': invalid expect value '" + *c.expect + "'");
  }
  return job;
}

Status expected_status(const std::string& e) {
  if (e == "certified" || e == "found") return Status::Certified;
  if (e == "refuted" || e == "absent") return Status::Refuted;
  return Status::Inconclusive;
}

using CurveWriter = std::function<void(std::ostream&)>;

struct CurveJob {
  std::string file;
  CurveWriter write;
};

CurveJob build_curve(const SuiteConfig& cfg, const CurveDecl& c) {
  Reader r("curve '" + c.kind + "' at line " + std::to_string(c.line), c.params);
  const FuzzyAntiNorm nu = cfg.space(r.text("space"));
  const Vector x = r.vec("x");
  if (x.size() != nu.dimension) throw DimensionMismatch("curve at line " + std::to_string(c.line) + ": x has the wrong dimension");
  const std::string file = r.text("file");
  auto radii = [&] {
    if (r.has("t")) return r.list("t");
    GridSpec g{r.number_or("t_min", 1e-3), r.number_or("t_max", 1e3), r.count_or("t_points", 61)};
    g.validate();
    return g.values();
  };
  CurveWriter w;
  if (c.kind == "nu") {
    const auto ts = radii();
    w = [nu, x, ts](std::ostream& os) {
      os << "t,nu\n";
      for (double t : ts) os << format_double(t) << ',' << format_double(nu(x, t)) << '\n';
    };
  } else if (c.kind == "alpha" || c.kind == "duality") {
    AlphaNormProfile p = AlphaNormProfile::with_defaults(nu);
    p.alpha_grid = r.list_or("alpha", p.alpha_grid);
    p.validate();
    if (c.kind == "alpha") {
      w = [p, x](std::ostream& os) { write_alpha_curve(os, p, x); };
    } else {
      const auto ts = radii();
      w = [p, x, ts](std::ostream& os) { write_duality_curve(os, p, x, ts); };
    }
  } else {
    throw ValidationError("unknown curve kind '" + c.kind + "'");
  }
  r.finish();
  return {file, w};
}

std::filesystem::path output_path(const std::string& path, const RunOptions& options) {
  std::filesystem::path p(path);
  if (options.out && p.is_relative()) p = *options.out / p;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t effective_seed(const SuiteConfig& config, const RunOptions& options) {
  if (options.seed) return *options.seed;
  if (!config.seed) throw ValidationError("no seed given");
  return *config.seed;
}

}  // namespace

void validate_suite(const SuiteConfig& config) {
  const std::uint64_t seed = config.seed.value_or(0);
  for (const auto& c : config.checks) build_job(config, c, seed);
  for (const auto& c : config.curves) build_curve(config, c);
}

SuiteResult run_suite(const SuiteConfig& config, const RunOptions& options) {
  const std::uint64_t seed = effective_seed(config, options);
  std::vector<Job> jobs;
  for (const auto& c : config.checks) jobs.push_back(build_job(config, c, seed));
  std::vector<CurveJob> curves;
  for (const auto& c : config.curves) curves.push_back(build_curve(config, c));

  std::vector<Outcome> outcomes(jobs.size());
  std::vector<double> wall(jobs.size());
  auto timed = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    outcomes[i] = jobs[i]();
    wall[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  const std::size_t width = std::max<std::size_t>(1, config.jobs);
  for (std::size_t first = 0; first < jobs.size(); first += width) {
    const std::size_t last = std::min(jobs.size(), first + width);
    if (width == 1) {
      timed(first);
      continue;
    }
    std::vector<std::future<void>> running;
    for (std::size_t i = first; i < last; ++i) running.push_back(std::async(std::launch::async, timed, i));
    for (auto& f : running) f.get();
  }

  SuiteResult result;
  json walls = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const CheckDecl& c = config.checks[i];
    const Verdict& v = outcomes[i].verdict;
    json params = json::object();
    for (const auto& [k, val] : c.params) params[k] = val;
    json rec{{"check", c.kind},
             {"name", c.name},
             {"fixture", config.name},
             {"parameters", params},
             {"seed", seed},
             {"verdict", to_string(v.status)},
             {"basis", v.basis},
             {"constants", constants_json(v.constants)},
             {"witness", witness_json(v.witness)},
             {"samples", v.samples},
             {"note", v.note}};
    if (!outcomes[i].details.is_null()) rec["details"] = outcomes[i].details;
    if (c.expect) {
      const bool match = expected_status(*c.expect) == v.status;
      rec["expect"] = *c.expect;
      rec["match"] = match;
      if (!match) ++result.mismatches;
    }
    result.records.push_back(rec.dump());
    walls.push_back({{"name", c.name}, {"wall_ms", wall[i]}});
  }
  result.timestamp_record = json{{"record", "timestamp"}, {"utc", utc_now()}, {"wall", walls}}.dump();

  const auto report = output_path(config.report_path.empty() ? config.name + ".jsonl" : config.report_path, options);
  std::ofstream out(report, std::ios::binary);
  if (!out) throw ValidationError("cannot write report " + report.string());
  for (const auto& line : result.records) out << line << '\n';
  out << result.timestamp_record << '\n';
  result.written.push_back(report);

  for (const auto& curve : curves) {
    const auto path = output_path(curve.file, options);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot write curve " + path.string());
    curve.write(os);
    result.written.push_back(path);
  }
  return result;
}

std::vector<std::filesystem::path> emit_curves(const SuiteConfig& config, const RunOptions& options) {
  std::vector<std::filesystem::path> written;
  std::vector<CurveJob> curves;
  for (const auto& c : config.curves) curves.push_back(build_curve(config, c));
  if (curves.empty()) throw ValidationError("the suite declares no curves");
  for (const auto& curve : curves) {
    const auto path = output_path(curve.file, options);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot write curve " + path.string());
    curve.write(os);
    written.push_back(path);
  }
  return written;
}

}  // namespace fuzzyanti
