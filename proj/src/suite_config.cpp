// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/suite.hpp"
#include "suite_text.hpp"

namespace fuzzyanti {

namespace detail {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError("not a finite decimal number: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("not a non-negative integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_number(part));
  return out;
}

Vector parse_vector(std::string_view text) { return Vector(parse_list(text)); }

std::vector<Vector> parse_points(std::string_view text) {
  std::vector<Vector> out;
  for (auto part : split(text, ';')) out.push_back(parse_vector(part));
  return out;
}

}  // namespace detail

using detail::split_ws;
using detail::trim;

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line) {}

namespace {

enum class Section { Top, Spaces, Maps, Sequences, Checks, Curves };

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

std::pair<std::string, std::string> key_value(std::string_view token) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ValidationError("expected key=value, got '" + std::string(token) + "'");
  }
  return {std::string(token.substr(0, eq)), std::string(token.substr(eq + 1))};
}

Params key_values(const std::vector<std::string_view>& tokens, std::size_t from) {
  Params out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    auto kv = key_value(tokens[i]);
    for (const auto& [k, v] : out) {
      if (k == kv.first) throw ValidationError("parameter '" + k + "' given twice");
    }
    out.push_back(std::move(kv));
  }
  return out;
}

std::string take(Params& p, const std::string& key, std::string fallback) {
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (it->first == key) {
      std::string v = it->second;
      p.erase(it);
      return v;
    }
  }
  return fallback;
}

void no_leftovers(const Params& p, const std::string& what) {
  if (!p.empty()) throw ValidationError("unknown parameter '" + p.front().first + "' for " + what);
}

FuzzyAntiNorm parse_space(std::string_view rhs) {
  const auto tokens = split_ws(rhs);
  if (tokens.empty()) throw ValidationError("space declaration is empty");
  CrispNorm crisp = CrispNorm::Euclidean;
  std::size_t dim = 1;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].find('=') == std::string_view::npos) {
      crisp = parse_crisp_norm(tokens[i]);
      continue;
    }
    auto [k, v] = key_value(tokens[i]);
    if (k != "dim") throw ValidationError("unknown space parameter '" + k + "'");
    dim = static_cast<std::size_t>(detail::parse_unsigned(v));
  }
  return parse_antinorm(tokens[0], crisp, dim);
}

// "scaling(3)" -> 3
double call_argument(std::string_view token, std::string_view head) {
  if (token.size() < head.size() + 2 || token.back() != ')') {
    throw ValidationError("expected " + std::string(head) + "(<number>)");
  }
  return detail::parse_number(token.substr(head.size() + 1, token.size() - head.size() - 2));
}

Mapping parse_map(std::string_view rhs) {
  const auto tokens = split_ws(rhs);
  if (tokens.empty()) throw ValidationError("map declaration is empty");
  const std::string_view kind = tokens[0];
  Params p = key_values(tokens, 1);
  auto dim = [&] { return static_cast<std::size_t>(detail::parse_unsigned(take(p, "dim", "1"))); };
  auto done = [&](Mapping m) {
    no_leftovers(p, "map '" + std::string(kind) + "'");
    return m;
  };
  if (kind == "zero") {
    const std::size_t d = dim();
    const auto rows = static_cast<std::size_t>(detail::parse_unsigned(take(p, "rows", std::to_string(d))));
    const auto cols = static_cast<std::size_t>(detail::parse_unsigned(take(p, "cols", std::to_string(d))));
    return done(LinearMap::zero(rows, cols));
  }
  if (kind == "identity") return done(LinearMap::identity(dim()));
  if (kind.substr(0, 8) == "scaling(") {
    const double r = call_argument(kind, "scaling");
    return done(LinearMap::scaling(r, dim()));
  }
  if (kind == "quartic") return done(ScalarMap{ScalarKind::Quartic, 1.0});
  if (kind == "jump") return done(ScalarMap{ScalarKind::Jump, 1.0});
  if (kind == "matrix") {
    const auto rows = static_cast<std::size_t>(detail::parse_unsigned(take(p, "rows", "")));
    const auto cols = static_cast<std::size_t>(detail::parse_unsigned(take(p, "cols", "")));
    auto entries = detail::parse_list(take(p, "entries", ""));
    return done(LinearMap(rows, cols, std::move(entries)));
  }
  throw ValidationError("unknown map kind '" + std::string(kind) + "'");
}

struct PendingSequence {
  std::string name;
  Params params;
  std::string kind;
  std::size_t line;
};

SequenceSpec resolve_sequence(const SuiteConfig& cfg, PendingSequence s) {
  SequenceSpec spec;
  spec.kind = parse_sequence_kind(s.kind);
  spec.space = cfg.space(take(s.params, "space", ""));
  spec.direction = detail::parse_vector(take(s.params, "direction", ""));
  const std::string offset = take(s.params, "offset", "");
  if (!offset.empty()) spec.offset = detail::parse_vector(offset);
  spec.ratio = detail::parse_number(take(s.params, "ratio", "0.5"));
  spec.horizon = static_cast<std::size_t>(detail::parse_unsigned(take(s.params, "horizon", "10000")));
  no_leftovers(s.params, "sequence '" + s.name + "'");
  spec.validate();
  return spec;
}

}  // namespace

SuiteConfig SuiteConfig::parse(std::istream& in, const std::string& source) {
  SuiteConfig cfg;
  Section section = Section::Top;
  std::vector<PendingSequence> pending;
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) { throw ParseError(source, line_no, what); };
  auto declared = [&](const std::string& name) {
    for (const auto& s : cfg.spaces) {
      if (s.name == name) return true;
    }
    for (const auto& m : cfg.maps) {
      if (m.name == name) return true;
    }
    for (const auto& s : pending) {
      if (s.name == name) return true;
    }
    return false;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (name == "spaces") {
        section = Section::Spaces;
      } else if (name == "maps") {
        section = Section::Maps;
      } else if (name == "sequences") {
        section = Section::Sequences;
      } else if (name == "checks") {
        section = Section::Checks;
      } else if (name == "curves") {
        section = Section::Curves;
      } else {
        fail("unknown section [" + std::string(name) + "]");
      }
      continue;
    }
    try {
      if (section == Section::Checks || section == Section::Curves) {
        const auto tokens = split_ws(line);
        Params params = key_values(tokens, 1);
        if (section == Section::Curves) {
          cfg.curves.push_back({std::string(tokens[0]), std::move(params), line_no});
          continue;
        }
        CheckDecl c;
        c.kind = std::string(tokens[0]);
        c.line = line_no;
        const std::string expect = take(params, "expect", "");
        if (!expect.empty()) c.expect = expect;
        c.name = take(params, "name", c.kind + "#" + std::to_string(cfg.checks.size() + 1));
        c.params = std::move(params);
        cfg.checks.push_back(std::move(c));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected 'name = value'");
      const std::string key(trim(line.substr(0, eq)));
      const std::string_view value = trim(line.substr(eq + 1));
      if (section == Section::Top) {
        if (key == "seed") {
          cfg.seed = detail::parse_unsigned(value);
        } else if (key == "report") {
          cfg.report_path = std::string(value);
        } else if (key == "name") {
          cfg.name = std::string(value);
        } else if (key == "jobs") {
          cfg.jobs = std::max<std::size_t>(1, static_cast<std::size_t>(detail::parse_unsigned(value)));
        } else {
          fail("unknown setting '" + key + "'");
        }
        continue;
      }
      if (!valid_name(key)) fail("invalid name '" + key + "'");
      if (declared(key)) fail("name '" + key + "' declared twice");
      if (section == Section::Spaces) {
        cfg.spaces.push_back({key, parse_space(value)});
      } else if (section == Section::Maps) {
        cfg.maps.push_back({key, parse_map(value)});
      } else {
        const auto tokens = split_ws(value);
        if (tokens.empty()) fail("sequence declaration is empty");
        pending.push_back({key, key_values(tokens, 1), std::string(tokens[0]), line_no});
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  for (auto& s : pending) {
    line_no = s.line;
    try {
      cfg.sequences.push_back({s.name, resolve_sequence(cfg, s)});
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  line_no = 0;
  if (!cfg.seed) fail("missing mandatory 'seed' setting");
  return cfg;
}

SuiteConfig SuiteConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open config");
  SuiteConfig cfg = parse(in, path.string());
  if (cfg.name.empty()) cfg.name = path.stem().string();
  if (cfg.report_path.empty()) cfg.report_path = cfg.name + ".jsonl";
  return cfg;
}

const FuzzyAntiNorm& SuiteConfig::space(const std::string& name) const {
  for (const auto& s : spaces) {
    if (s.name == name) return s.norm;
  }
  throw ValidationError("undeclared space '" + name + "'");
}

const Mapping& SuiteConfig::map(const std::string& name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m.map;
  }
  throw ValidationError("undeclared map '" + name + "'");
}

const SequenceSpec& SuiteConfig::sequence(const std::string& name) const {
  for (const auto& s : sequences) {
    if (s.name == name) return s.spec;
  }
  throw ValidationError("undeclared sequence '" + name + "'");
}

}  // namespace fuzzyanti
