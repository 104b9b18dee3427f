#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "signrmt/json_io.hpp"
#include "signrmt/pairing.hpp"

namespace signrmt::verify {

struct CheckResult {
  int criterion = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  bool quick = false;         // skip the large simulations and the k = 9 census
  unsigned workers = 0;
  std::uint64_t seed = 20240917;
  int cap = kDefaultEnumerationCap;
};

/// combinatorics, crossing-stats, spectra, theory, all.
const std::vector<std::string_view>& suite_names();

/// Runs the criteria of one suite in order. `on_result` (optional) sees
/// each result as soon as it is known. Throws InvalidArgument on an unknown
/// suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result = {});

/// "[PASS] 4 mean crossing: ... (1.2 s)"
std::string format_line(const CheckResult& r);

Json summary_json(std::string_view suite, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

// Independent oracles, also used by the unit tests.

/// Trace(A^j) for j = 0..max_power by repeated dense multiplication.
std::vector<double> trace_powers(const SymmetricMatrix& a, int max_power);

/// Volume of the k = 2 crossing pairing polytope by a midpoint grid over
/// the two differences, integrating the start index exactly.
double crossing_volume_grid(int cells_per_axis);

/// A partial pairing of 2v vertices: the single edge for v = 1, otherwise
/// the fully crossing pairing i <-> i + v.
Pairing crossing_partial(int v);

}  // namespace signrmt::verify
