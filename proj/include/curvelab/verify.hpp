#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace curvelab {

/// Zero fields select each suite's default.
struct SuiteOptions {
  std::int64_t bound = 0;
  /// Secondary bound: sch04 search bound, dtcoords uniqueness bound.
  std::int64_t search = 0;
  int depth = 0;
  int samples = 0;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string suite;
  int checked = 0;
  int failures = 0;
  /// First few failure descriptions.
  std::vector<std::string> notes;
};

/// cutpoints, ends, triples, sch04, dtcoords, diameter, counterexample.
const std::vector<std::string>& suite_names();

/// Throws Error("UnknownSuite").
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace curvelab
