#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bifree/partition.hpp"

namespace bifree {

struct VerifyConfig {
  int order_a = 3;
  int order_b = 3;
  std::uint64_t seed = 1;
  int trials = 5;
  int cap = kDefaultEnumCap;
  /// Empty runs every suite; otherwise a subset of suite_names().
  std::vector<std::string> suites;
};

struct IdentityResult {
  std::string suite;
  std::string name;
  int trial = -1;  // -1 for trial-independent checks
  int order_a = 0, order_b = 0;
  bool ok = false;
  std::optional<std::pair<int, int>> first_failure;  // cell, when applicable
  double elapsed_ms = 0.0;
};

/// Canonical suite list, in execution order. The per-trial RNG stream is
/// seeded from (seed + 1000003 * suite_index + trial), so a suite's data does
/// not depend on which other suites were selected.
const std::vector<std::string>& suite_names();

/// Runs the selected suites; throws parse_error for unknown suite names or
/// orders incompatible with the cap.
std::vector<IdentityResult> run_verify(const VerifyConfig& cfg);

/// True iff every result passed.
bool all_ok(const std::vector<IdentityResult>& results);

}  // namespace bifree
