#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcx/json_io.hpp"
#include "bcx/random.hpp"

namespace bcx {

struct VerifyConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  GenConfig gen;
};

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  /// Degenerate draws that were resampled.
  std::uint64_t retries = 0;
  /// The suite's own seed, derived from the run seed and the suite name.
  std::uint64_t seed = 0;
  /// Present iff failures > 0.
  std::optional<Json> first_counterexample;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  /// 0 when every suite passed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

/// Every suite in run order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws Error("UnknownSuite") for names outside suite_names().
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);
/// `name` is a suite name or "all".
VerifyReport run_verify(const std::string& name, const VerifyConfig& config);

Json to_json(const SuiteResult& r);
Json to_json(const VerifyReport& r);

}  // namespace bcx
