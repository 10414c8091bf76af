#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bettikit::cli {

struct TrialOutcome {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<TrialOutcome> trials;

  bool passed() const {
    for (const auto& t : trials) {
      if (!t.passed) return false;
    }
    return !trials.empty();
  }
};

struct SuiteConfig {
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  /// Largest vertex count of any randomly drawn part.
  std::size_t max_vertices = 10;
  unsigned threads = 1;
};

/// Suite names accepted by run_suite.
const std::vector<std::string_view>& suite_names();

/// Runs one property suite. In every trial the closed form is the expected
/// value and brute-force enumeration the actual one. Throws BadInput for an
/// unknown name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

}  // namespace bettikit::cli
