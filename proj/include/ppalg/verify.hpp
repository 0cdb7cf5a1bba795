#pragma once

// Invariant suites shared by `ppalg verify` and the acceptance binary. A
// check is one exact comparison, or a conjunction over a family of cases
// whose size is reported in the detail string.

#include <cstdint>
#include <string>
#include <vector>

#include "ppalg/parallel.hpp"
#include "ppalg/quiver.hpp"

namespace ppalg {

struct Check {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string type;
  std::vector<Check> checks;
  double seconds = 0;

  /// No check failed (skipped checks do not count either way).
  bool passed() const;
};

struct VerifyOptions {
  Exec exec = Exec::parallel;
  bool deep = false;         // whole A4 exchange graph instead of a neighbourhood
  std::uint64_t seed = 1;    // pair sampling in A4
  int cap = 6;               // cap for homological dimensions
  std::uint32_t prime = 32003;
};

/// counts, golden, thm-quivershape, thm-mutation, prop-mutation3,
/// homological, functor, thm-multform, cluster.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const DynkinType& type, const VerifyOptions& options = {});
/// Also accepts "all" and "endo" (golden, thm-quivershape, prop-mutation3).
std::vector<SuiteResult> run_suites(const std::string& name, const DynkinType& type,
                                    const VerifyOptions& options = {});

/// One line per check: "PASS  A3  thm-mutation  B0 mutation rule  (42 directed edges)".
std::string format_result(const SuiteResult& r);

}  // namespace ppalg
