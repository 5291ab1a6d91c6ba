#pragma once

#include <string>
#include <vector>

#include "subcluster/instance.hpp"

namespace subcluster::selftest {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // one per failure, with replay data

  bool passed() const { return failures == 0; }
};

/// Knobs for the battery. n_max caps the partition-enumeration suites and
/// must stay at or below 12; seeds scales every seeded family; k_max caps the
/// cluster counts tried by the bound suites.
struct Options {
  int n_max = 10;
  int seeds = 100;
  int k_max = 4;

  void validate() const;
};

// One suite per acceptance criterion, in order. The two halves of the
// pendant-pair criterion (brute-force equivalence, call budget) are separate.
SuiteResult k2_optimality(const Options& options);             // 1
SuiteResult gsa_bound(const Options& options);                 // 2
SuiteResult queyranne_equivalence(const Options& options);     // 3a
SuiteResult queyranne_budget(const Options& options);          // 3b
SuiteResult counterexample_reproduction(const Options& options);  // 4
SuiteResult parallel_split_bound(const Options& options);      // 5
SuiteResult minimal_solution_disjointness(const Options& options);  // 6
SuiteResult multigroup_reduction(const Options& options);      // 7
SuiteResult family_properties(const Options& options);         // 8
SuiteResult oracle_contracts(const Options& options);          // 9
SuiteResult determinism_and_io(const Options& options);        // 10

std::vector<SuiteResult> run_all(const Options& options);

/// Deterministic battery instance shared by the suites.
Instance battery_instance(std::uint64_t seed, int n, int groups, double t, double density);

}  // namespace subcluster::selftest
