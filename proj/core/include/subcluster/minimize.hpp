#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subcluster/grouping.hpp"
#include "subcluster/oracle.hpp"
#include "subcluster/partition.hpp"

namespace subcluster {

struct MinimizationResult {
  ElementSet minimizer;  // nonempty proper subset of the ground set
  double value = 0.0;
  std::uint64_t oracle_calls = 0;
};

/// Diagnostic record of one pendant-pair round: the adjacency ordering (each
/// supernode named by its smallest original element) and the candidate cut
/// recorded at the end of the round.
struct PendantRound {
  std::vector<ElementId> ordering;
  ElementSet candidate;
  double value = 0.0;
};

struct PendantTrace {
  std::vector<PendantRound> rounds;
};

/// Exact minimum of a symmetric submodular function over nonempty proper
/// subsets, by repeated pendant-pair contraction. N-1 rounds; call count stays
/// within 5*N^3. The reported minimizer is the lexicographically smaller side
/// of the best cut; value ties across rounds also resolve lexicographically.
MinimizationResult queyranne_min(const SubmodularOracle& oracle, PendantTrace* trace = nullptr);

/// Replaceable implementation slot for hereditary-constrained minimization.
using ConstrainedMinImpl =
    std::function<MinimizationResult(const SubmodularOracle&, const GroupCapFamily&)>;

/// Minimum of the oracle over nonempty proper family members. The default
/// route is exact: a vacuous family falls through to queyranne_min, a
/// zero-cost-atom certificate resolves disconnected instances directly, and
/// everything else is pruned enumeration (ground size capped at 24). A caller
/// may supply an alternative implementation behind the same contract.
/// Throws InfeasibleError when the family has no nonempty proper member.
MinimizationResult constrained_min(const SubmodularOracle& oracle, const GroupCapFamily& family,
                                   const ConstrainedMinImpl& alternative = {});

/// Every inclusion-minimal nonempty proper family member achieving the
/// constrained optimum, sorted lexicographically. The results are checked to
/// be pairwise disjoint, which symmetry plus submodularity guarantees.
std::vector<ElementSet> minimal_optimal_solutions(const SubmodularOracle& oracle,
                                                  const GroupCapFamily& family);

/// Reference minimizer: plain enumeration of all nonempty proper subsets
/// (intersected with the family when given), pruned on group caps.
/// Refuses ground sets larger than 24.
MinimizationResult brute_force_min(const SubmodularOracle& oracle,
                                   const GroupCapFamily* family = nullptr);

struct BestPartitionResult {
  Partition partition;
  double cost = 0.0;
  std::uint64_t oracle_calls = 0;
};

/// Reference optimum for the constrained clustering objective: enumerate all
/// partitions into exactly k nonempty blocks (restricted growth strings),
/// keep the cheapest feasible one; ties resolve on the canonical block list.
/// Hard guards: N <= 12 and k <= N. Throws InfeasibleError when no feasible
/// k-partition exists.
BestPartitionResult brute_force_best_partition(const SubmodularOracle& oracle, int k,
                                               const Grouping& grouping, double t);

}  // namespace subcluster
