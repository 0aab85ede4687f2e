#pragma once

// Exhaustive (or seeded-sample) verification suites over the members of a
// family up to a size bound.

#include "forestry/family.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace forestry {

struct SuiteOptions {
  /// 0 selects the suite's own default bound.
  int max_size = 0;
  /// When nonzero, check a uniformly drawn subset of this many cases.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string suite;
  std::string family;
  int max_size = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
int default_max_size(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, const Family& family, const SuiteOptions& options = {});

}  // namespace forestry
