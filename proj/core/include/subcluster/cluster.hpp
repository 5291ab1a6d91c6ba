#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcluster/minimize.hpp"
#include "subcluster/partition.hpp"

namespace subcluster {

/// Best binary split found for one block: the proposed (split, remainder)
/// pair and the cost increment c(W) = f(S) + f(W\S) - f(W). The increment is
/// infinite when the block is a singleton or, for a constrained block, when
/// its hereditary family admits no nonempty proper subset.
struct SplitCandidate {
  ElementSet block;
  ElementSet split;
  ElementSet remainder;
  double increment = kInfiniteCost;
  bool constrained = false;

  bool finite() const { return increment < kInfiniteCost; }
};

/// One greedy iteration: costs of all current blocks, the block chosen, and
/// the constraint tags after the split.
struct SplitIteration {
  int chosen_block = -1;
  SplitCandidate chosen;
  std::vector<double> candidate_increments;
  std::vector<int> constrained_after;
};

struct ClusteringRun {
  std::string algorithm;
  int k = 0;
  double t = 0.0;
  std::string group_selector;  // designated group name, or "any"
  std::optional<std::uint64_t> seed;
  Partition partition;
  double cost = 0.0;
  std::uint64_t oracle_calls = 0;
  std::vector<SplitIteration> trace;
  std::optional<FeasibilityCertificate> certificate;
  bool degraded = false;

  bool feasible() const { return certificate.has_value(); }
};

/// Optimal binary split of one block. Unconstrained blocks go through the
/// pendant-pair minimizer on the block's split objective; constrained blocks
/// restrict the split to the supplied localized family (required in that
/// case) and collapse infeasibility into an infinite increment.
SplitCandidate evaluate_split(const SubmodularOracle& oracle, const ElementSet& block,
                              bool constrained, const GroupCapFamily* local_family = nullptr);

/// Greedy splitting: repeatedly apply the cheapest optimal binary split until
/// k blocks exist. Ties go to the lowest block index; split results for
/// untouched blocks are cached across iterations.
ClusteringRun greedy_splitting(const SubmodularOracle& oracle, int k);

/// Greedy splitting under the actionability constraint for one designated
/// group: exactly one block carries the constraint tag at every step, is
/// split within its localized family, and passes the tag to its remainder.
/// k = 1 returns the trivial single-block run.
ClusteringRun actionable_greedy_splitting(const SubmodularOracle& oracle,
                                          const Grouping& grouping, int group_index, double t,
                                          int k);

/// Multi-group reduction: run the designated-group algorithm once per group
/// and keep the cheapest feasible run (ties to the lowest group index).
ClusteringRun actionable_greedy_splitting_any_group(const SubmodularOracle& oracle,
                                                    const Grouping& grouping, double t, int k);

/// Exact optimum for k = 2: the best constrained minimizer across groups and
/// its complement; cost 2 f(S*) by symmetry.
ClusteringRun optimal_two_clustering(const SubmodularOracle& oracle, const Grouping& grouping,
                                     double t);

/// One-shot partition from minimal disjoint optimal solutions: pick k-1 of
/// them whose residual completes a feasible partition, or fall back to the
/// largest achievable m <= k (flagged degraded). Groups are searched
/// independently; the best run prefers more blocks, then lower cost, then the
/// lower group index.
ClusteringRun parallel_split(const SubmodularOracle& oracle, const Grouping& grouping, double t,
                             int k);

struct RatioCheck {
  double ratio = 1.0;
  double bound = 1.0;
  bool holds = true;
};

/// Compare a run against the optimum using the 2(1 - 1/k) splitting bound.
/// Both costs zero counts as ratio 1.
RatioCheck approximation_ratio_check(double run_cost, double opt_cost, int k);

/// Recompute and attach the feasibility certificate for a finished run
/// (used for algorithms that do not take the grouping as input).
void attach_feasibility(ClusteringRun& run, const Grouping& grouping, double t);

}  // namespace subcluster
