// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fuzzyanti/error.hpp"
#include "fuzzyanti/suite.hpp"
#include "json.hpp"

namespace {

// One line per check: name, verdict, and the expectation when it was missed.
void summarize(const fuzzyanti::SuiteResult& r) {
  for (const auto& line : r.records) {
    const auto rec = nlohmann::json::parse(line);
    std::cout << rec["name"].get<std::string>() << ": " << rec["verdict"].get<std::string>();
    if (rec.contains("match") && !rec["match"].get<bool>()) {
      std::cout << " (expected " << rec["expect"].get<std::string>() << ")";
    }
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify or refute boundedness and continuity of maps between fuzzy anti-normed spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string config;
  app.add_option("--seed", seed, "Override the suite seed");
  app.add_option("--out", out, "Directory for the report and curve files");
  auto* run = app.add_subcommand("run", "Run every check of a suite and write the report");
  run->add_option("config", config, "Suite file")->required();
  auto* curves = app.add_subcommand("curves", "Write only the curve files of a suite");
  curves->add_option("config", config, "Suite file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fuzzyanti::kExitInvalid;
  }

  fuzzyanti::RunOptions options;
  options.seed = seed;
  if (!out.empty()) options.out = out;
  try {
    const auto suite = fuzzyanti::SuiteConfig::load(config);
    if (curves->parsed()) {
      for (const auto& path : fuzzyanti::emit_curves(suite, options)) std::cout << "wrote " << path.string() << '\n';
      return fuzzyanti::kExitOk;
    }
    const auto result = fuzzyanti::run_suite(suite, options);
    summarize(result);
    std::cout << "report: " << result.written.front().string() << '\n';
    if (result.mismatches > 0) {
      std::cerr << result.mismatches << " check(s) did not match their expectation\n";
    }
    return result.exit_status();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fuzzyanti::kExitInvalid;
  }
}
