#pragma once

#include <string>
#include <vector>

namespace balseg {

struct VerifyOptions {
  // Word length ceiling for the enumeration-backed suites (bijections).
  long long max_length = 12;
  // Length ceiling for the brute-force counting oracle; 0 skips that suite.
  long long brute_max = 12;
  // Height ceiling for the generating-function and profile suites.
  long long h_max = 6;
};

struct SuiteResult {
  std::string name;
  bool ran = true;  // false when the options rule the suite out
  bool passed = true;
  std::string detail;  // first failure; empty when passed
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

// Cross-checks the whole library against independent ground truth: frozen
// tables, exhaustive enumeration, closed forms, combinatorial identities,
// word bijections, series expansions, and profile reconstruction.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace balseg
