// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuzzyanti/analysis.hpp"
#include "fuzzyanti/maps.hpp"
#include "fuzzyanti/space.hpp"

namespace fuzzyanti {

/// Malformed config text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using Params = std::vector<std::pair<std::string, std::string>>;

struct NamedSpace {
  std::string name;
  FuzzyAntiNorm norm;
};

struct NamedMap {
  std::string name;
  Mapping map;
};

struct NamedSequence {
  std::string name;
  SequenceSpec spec;
};

struct CheckDecl {
  std::string kind;
  Params params;  // in the order written, "expect" and "name" excluded
  std::string name;
  std::optional<std::string> expect;
  std::size_t line = 0;
};

struct CurveDecl {
  std::string kind;  // "nu", "alpha", "duality"
  Params params;
  std::size_t line = 0;
};

/// A check suite:
///
///   seed = 42
///   report = out.jsonl
///   [spaces]     U = harmonic(k=2) l2 dim=2
///   [maps]       T = scaling(3) dim=2
///   [sequences]  S = harmonic space=U direction=1,0
///   [checks]     strong-bounded domain=U codomain=V map=T M=3 expect=certified
///   [curves]     nu space=U x=1,0 t=1,3 file=nu.csv
///
/// '#' starts a comment. Lists are comma separated; point sets separate
/// points with ';'.
struct SuiteConfig {
  std::string name;  // fixture label used in the report, defaults to the file stem
  std::optional<std::uint64_t> seed;
  std::string report_path;
  std::size_t jobs = 1;
  std::vector<NamedSpace> spaces;
  std::vector<NamedMap> maps;
  std::vector<NamedSequence> sequences;
  std::vector<CheckDecl> checks;
  std::vector<CurveDecl> curves;

  static SuiteConfig parse(std::istream& in, const std::string& source);
  static SuiteConfig load(const std::filesystem::path& path);

  const FuzzyAntiNorm& space(const std::string& name) const;
  const Mapping& map(const std::string& name) const;
  const SequenceSpec& sequence(const std::string& name) const;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;          // overrides the config
  std::optional<std::filesystem::path> out;   // directory for report and curves
};

struct SuiteResult {
  std::vector<std::string> records;  // one JSON object per check, config order
  std::string timestamp_record;      // wall times, kept apart from the records
  std::size_t mismatches = 0;
  std::vector<std::filesystem::path> written;

  int exit_status() const { return mismatches == 0 ? 0 : 1; }
};

/// Resolves names and parameters of every check and curve without running
/// anything. Throws ValidationError or DimensionMismatch.
void validate_suite(const SuiteConfig& config);

/// Runs the checks in order (concurrently when jobs > 1), writes the report
/// and any requested curves.
SuiteResult run_suite(const SuiteConfig& config, const RunOptions& options);

/// Writes only the curve files.
std::vector<std::filesystem::path> emit_curves(const SuiteConfig& config, const RunOptions& options);

/// Exit statuses for the command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

}  // namespace fuzzyanti
