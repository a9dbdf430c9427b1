#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylcells {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string claim;  ///< what the suite verifies
  std::vector<Check> checks;
  /// Observations that are reported but not asserted (truncation effects,
  /// realized-set comparisons, items out of reach).
  std::vector<std::string> findings;
  bool pass() const;
};

struct SuiteOptions {
  /// When non-empty, KL tables are cached at "<cache_prefix>.<system>-L<L>".
  std::string cache_prefix;
  std::size_t max_ball = 200'000;
  /// Cap on finite Weyl group enumeration in harness runs.
  std::size_t max_states = 50'000;
};

struct SuiteInfo {
  std::string name;
  std::string claim;
};

/// Registered suites, in acceptance order.
const std::vector<SuiteInfo>& suites();

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(std::string_view name);
};

/// Runs one suite. Throws UnknownSuite with the list of available suites.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace weylcells
