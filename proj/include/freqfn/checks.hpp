#pragma once

#include "freqfn/step_function.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace freqfn {

/// Outcome of a sampled invariant suite.
struct SuiteResult {
  std::string suite;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == total; }
  /// "prop1: 200/200 exact"
  std::string summary() const;
};

/// Known suites: prop1, prop2, monotone, scale, oracle, disc, thm5, thm6, weak.
std::vector<std::string_view> suite_names();

/// Runs one suite over `samples` deterministic points drawn with `seed`.
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view suite, const StepFn& f, std::size_t samples,
                      std::uint64_t seed);

}  // namespace freqfn
