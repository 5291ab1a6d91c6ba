// Acceptance gate: runs the full property battery at its contract settings
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <vector>

#include "subcluster/selftest.hpp"

namespace {

struct Criterion {
  const char* label;
  std::vector<subcluster::selftest::SuiteResult> results;
};

}  // namespace

int main() {
  using namespace subcluster::selftest;

  Options options;  // n_max 10, 100 seeds, k up to 4
  options.validate();

  std::vector<Criterion> criteria;
  auto time_suite = [](auto&& fn, const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn(opts);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "  %-24s %6.2fs\n", result.name.c_str(), elapsed.count());
    return result;
  };

  criteria.push_back({" 1. two-way optimality vs brute force",
                      {time_suite(k2_optimality, options)}});
  criteria.push_back({" 2. greedy splitting within 2-2/k of optimal",
                      {time_suite(gsa_bound, options)}});
  criteria.push_back({" 3. pendant-pair equivalence and 5N^3 call budget",
                      {time_suite(queyranne_equivalence, options),
                       time_suite(queyranne_budget, options)}});
  criteria.push_back({" 4. counterexample ratio >= 1e4 and eps scaling",
                      {time_suite(counterexample_reproduction, options)}});
  criteria.push_back({" 5. parallel-split bound and its inequality chain",
                      {time_suite(parallel_split_bound, options)}});
  criteria.push_back({" 6. minimal optimal solutions disjoint and optimal",
                      {time_suite(minimal_solution_disjointness, options)}});
  criteria.push_back({" 7. per-group reduction equals multi-group optimum",
                      {time_suite(multigroup_reduction, options)}});
  criteria.push_back({" 8. hereditary family properties",
                      {time_suite(family_properties, options)}});
  criteria.push_back({" 9. oracle symmetry and submodularity contracts",
                      {time_suite(oracle_contracts, options)}});
  criteria.push_back({"10. determinism, round-trips, report verification",
                      {time_suite(determinism_and_io, options)}});

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    long long checks = 0;
    long long failures = 0;
    for (const auto& result : criterion.results) {
      checks += result.checks;
      failures += result.failures;
    }
    const bool passed = failures == 0;
    all_passed = all_passed && passed;
    std::printf("[%s] %s (%lld checks)\n", passed ? "PASS" : "FAIL", criterion.label, checks);
    if (!passed) {
      for (const auto& result : criterion.results) {
        for (const auto& message : result.messages) {
          std::printf("       %s\n", message.c_str());
        }
      }
    }
  }
  std::printf("%s\n", all_passed ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return all_passed ? 0 : 1;
}
