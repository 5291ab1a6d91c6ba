#include "subcluster/cluster.hpp"

namespace subcluster {

SplitCandidate evaluate_split(const SubmodularOracle& oracle, const ElementSet& block,
                              bool constrained, const GroupCapFamily* local_family) {
  SplitCandidate candidate;
  candidate.block = block;
  candidate.constrained = constrained;
  if (block.size() < 2) return candidate;  // nothing to split

  if (constrained) {
    if (local_family == nullptr) {
      throw InputError("constrained split needs the block's localized family");
    }
    if (!local_family->has_nonempty_proper_member()) return candidate;  // frozen block
  }

  const double block_value = oracle(block);
  const SplitObjectiveOracle objective(oracle, block);
  MinimizationResult result;
  if (constrained) {
    try {
      result = constrained_min(objective, *local_family);
    } catch (const InfeasibleError&) {
      return candidate;
    }
  } else {
    result = queyranne_min(objective);
  }
  candidate.split = objective.to_base_ids(result.minimizer);
  candidate.remainder = set_difference(block, candidate.split);
  candidate.increment = result.value - block_value;
  return candidate;
}

namespace {

struct TaggedBlock {
  ElementSet elements;
  bool constrained = false;
};

/// Shared greedy engine. `grouping`/`group_index` are only consulted for
/// constrained blocks.
ClusteringRun run_greedy(const SubmodularOracle& oracle, int k, bool actionable,
                         const Grouping* grouping, int group_index, double t,
                         std::string algorithm) {
  const int n = oracle.ground_size();
  const std::uint64_t calls_before = oracle.call_count();

  std::vector<TaggedBlock> blocks{{oracle.ground(), actionable}};
  std::vector<std::optional<SplitCandidate>> cache{std::nullopt};
  ClusteringRun run;
  run.algorithm = std::move(algorithm);
  run.k = k;
  run.t = t;

  while (static_cast<int>(blocks.size()) < k) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (cache[b]) continue;
      if (blocks[b].constrained) {
        const GroupCapFamily family =
            localized_family(blocks[b].elements, *grouping, group_index, t);
        cache[b] = evaluate_split(oracle, blocks[b].elements, true, &family);
      } else {
        cache[b] = evaluate_split(oracle, blocks[b].elements, false);
      }
    }

    int chosen = -1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!cache[b]->finite()) continue;
      if (chosen < 0 || cache[b]->increment < cache[static_cast<std::size_t>(chosen)]->increment) {
        chosen = static_cast<int>(b);
      }
    }
    if (chosen < 0) {
      throw InfeasibleError("no block can be split further; cannot reach " + std::to_string(k) +
                            " clusters");
    }

    SplitIteration iteration;
    iteration.chosen_block = chosen;
    iteration.chosen = *cache[static_cast<std::size_t>(chosen)];
    iteration.candidate_increments.reserve(blocks.size());
    for (const auto& c : cache) iteration.candidate_increments.push_back(c->increment);

    const SplitCandidate picked = *cache[static_cast<std::size_t>(chosen)];
    const bool was_constrained = blocks[static_cast<std::size_t>(chosen)].constrained;
    // the split side is always released from the constraint; the remainder
    // keeps the tag when the block carried it
    blocks[static_cast<std::size_t>(chosen)] = {picked.split, false};
    blocks.insert(blocks.begin() + chosen + 1, {picked.remainder, was_constrained});
    cache[static_cast<std::size_t>(chosen)] = std::nullopt;
    cache.insert(cache.begin() + chosen + 1, std::nullopt);

    iteration.constrained_after.reserve(blocks.size());
    for (const auto& block : blocks) iteration.constrained_after.push_back(block.constrained);
    run.trace.push_back(std::move(iteration));
  }

  std::vector<ElementSet> final_blocks;
  final_blocks.reserve(blocks.size());
  for (auto& block : blocks) final_blocks.push_back(std::move(block.elements));
  run.partition = Partition(n, std::move(final_blocks));
  run.cost = partition_cost(oracle, run.partition);
  run.oracle_calls = oracle.call_count() - calls_before;
  return run;
}

bool run_less(const ClusteringRun& a, const ClusteringRun& b) {
  if (a.partition.block_count() != b.partition.block_count()) {
    return a.partition.block_count() > b.partition.block_count();
  }
  return a.cost < b.cost;
}

}  // namespace

ClusteringRun greedy_splitting(const SubmodularOracle& oracle, int k) {
  const int n = oracle.ground_size();
  if (k < 2 || k > n) {
    throw InputError("cluster count must lie in 2.." + std::to_string(n));
  }
  ClusteringRun run = run_greedy(oracle, k, false, nullptr, -1, 0.0, "gsa");
  run.group_selector = "any";
  return run;
}

ClusteringRun actionable_greedy_splitting(const SubmodularOracle& oracle,
                                          const Grouping& grouping, int group_index, double t,
                                          int k) {
  const int n = oracle.ground_size();
  if (grouping.ground_size() != n) throw InputError("oracle and grouping ground sets differ");
  if (group_index < 0 || group_index >= grouping.group_count()) {
    throw InputError("group index out of range");
  }
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  if (k < 1) throw InputError("cluster count must be positive");
  if (k > max_k(grouping, t)) {
    throw InfeasibleError("no feasible partition into " + std::to_string(k) +
                          " clusters exists (max is " + std::to_string(max_k(grouping, t)) + ")");
  }

  ClusteringRun run;
  if (k == 1) {
    const std::uint64_t calls_before = oracle.call_count();
    run.algorithm = "agsa";
    run.k = 1;
    run.t = t;
    run.partition = Partition(n, {oracle.ground()});
    run.cost = partition_cost(oracle, run.partition);
    run.oracle_calls = oracle.call_count() - calls_before;
  } else {
    run = run_greedy(oracle, k, true, &grouping, group_index, t, "agsa");
  }
  run.group_selector = grouping.name(group_index);
  run.certificate = is_feasible(run.partition, grouping, t);
  if (!run.certificate) {
    throw std::logic_error("constrained run lost feasibility; tag bookkeeping is broken");
  }
  return run;
}

ClusteringRun actionable_greedy_splitting_any_group(const SubmodularOracle& oracle,
                                                    const Grouping& grouping, double t, int k) {
  std::optional<ClusteringRun> best;
  std::uint64_t total_calls = 0;
  for (int j = 0; j < grouping.group_count(); ++j) {
    try {
      ClusteringRun run = actionable_greedy_splitting(oracle, grouping, j, t, k);
      total_calls += run.oracle_calls;
      if (!best || run.cost < best->cost) best = std::move(run);
    } catch (const InfeasibleError&) {
      // this group cannot carry the constraint at this k; try the others
    }
  }
  if (!best) {
    throw InfeasibleError("no group admits a feasible partition into " + std::to_string(k) +
                          " clusters");
  }
  best->algorithm = "agsa-multi";
  best->group_selector = "any";
  best->oracle_calls = total_calls;
  return *best;
}

ClusteringRun optimal_two_clustering(const SubmodularOracle& oracle, const Grouping& grouping,
                                     double t) {
  const int n = oracle.ground_size();
  if (grouping.ground_size() != n) throw InputError("oracle and grouping ground sets differ");
  if (max_k(grouping, t) < 2) {
    throw InfeasibleError("no feasible two-way partition exists at this threshold");
  }
  const std::uint64_t calls_before = oracle.call_count();

  std::optional<MinimizationResult> best;
  int best_group = -1;
  for (int j = 0; j < grouping.group_count(); ++j) {
    try {
      MinimizationResult result = constrained_min(oracle, GroupCapFamily::for_group(grouping, j, t));
      if (!best || result.value < best->value) {
        best = std::move(result);
        best_group = j;
      }
    } catch (const InfeasibleError&) {
    }
  }
  if (!best) throw InfeasibleError("no group admits a feasible two-way split");

  ClusteringRun run;
  run.algorithm = "two-opt";
  run.k = 2;
  run.t = t;
  run.group_selector = grouping.name(best_group);
  run.partition = Partition(n, {best->minimizer, complement_of(best->minimizer, n)});
  run.cost = partition_cost(oracle, run.partition);
  run.oracle_calls = oracle.call_count() - calls_before;
  run.certificate = is_feasible(run.partition, grouping, t);
  if (!run.certificate) {
    throw std::logic_error("two-way split lost feasibility; family caps are broken");
  }
  return run;
}

namespace {

/// Cheapest feasible residual partition built from `want` of the minimal
/// solutions; ties go to the lexicographically first index selection.
std::optional<ClusteringRun> best_selection(const SubmodularOracle& oracle,
                                            const Grouping& grouping, double t,
                                            const std::vector<ElementSet>& solutions, int want) {
  const int n = oracle.ground_size();
  const int count = static_cast<int>(solutions.size());
  if (want < 1 || want > count) return std::nullopt;

  std::optional<ClusteringRun> best;
  std::vector<int> pick(static_cast<std::size_t>(want));
  auto recurse = [&](auto&& self, int from, int depth) -> void {
    if (depth == want) {
      std::vector<ElementSet> blocks;
      ElementSet used;
      for (int idx : pick) {
        blocks.push_back(solutions[static_cast<std::size_t>(idx)]);
        used = set_union(used, solutions[static_cast<std::size_t>(idx)]);
      }
      ElementSet residual = complement_of(used, n);
      if (residual.empty()) return;
      blocks.push_back(std::move(residual));
      Partition partition(n, std::move(blocks));
      auto certificate = is_feasible(partition, grouping, t);
      if (!certificate) return;
      const double cost = partition_cost(oracle, partition);
      if (!best || cost < best->cost) {
        ClusteringRun run;
        run.partition = std::move(partition);
        run.cost = cost;
        run.certificate = certificate;
        best = std::move(run);
      }
      return;
    }
    for (int i = from; i <= count - (want - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      self(self, i + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace

ClusteringRun parallel_split(const SubmodularOracle& oracle, const Grouping& grouping, double t,
                             int k) {
  const int n = oracle.ground_size();
  if (grouping.ground_size() != n) throw InputError("oracle and grouping ground sets differ");
  if (k < 2) throw InputError("cluster count must be at least 2");
  if (max_k(grouping, t) < 2) {
    throw InfeasibleError("no feasible two-way partition exists at this threshold");
  }
  const std::uint64_t calls_before = oracle.call_count();

  std::optional<ClusteringRun> best;
  int best_group = -1;
  for (int j = 0; j < grouping.group_count(); ++j) {
    std::vector<ElementSet> solutions;
    try {
      solutions = minimal_optimal_solutions(oracle, GroupCapFamily::for_group(grouping, j, t));
    } catch (const InfeasibleError&) {
      continue;
    }
    const int most = std::min(k - 1, static_cast<int>(solutions.size()));
    for (int want = most; want >= 1; --want) {
      auto candidate = best_selection(oracle, grouping, t, solutions, want);
      if (!candidate) continue;
      candidate->degraded = want < k - 1;
      if (!best || run_less(*candidate, *best)) {
        best = std::move(candidate);
        best_group = j;
      }
      break;  // a larger selection for this group already failed or won
    }
  }
  if (!best) {
    throw InfeasibleError("no group yields even a two-way parallel split");
  }

  best->algorithm = "parallel";
  best->k = k;
  best->t = t;
  best->group_selector = grouping.name(best_group);
  best->oracle_calls = oracle.call_count() - calls_before;
  return *best;
}

RatioCheck approximation_ratio_check(double run_cost, double opt_cost, int k) {
  if (k < 1) throw InputError("cluster count must be positive");
  RatioCheck check;
  check.bound = 2.0 * (1.0 - 1.0 / static_cast<double>(k));
  if (opt_cost == 0.0 && run_cost == 0.0) {
    check.ratio = 1.0;
  } else if (opt_cost == 0.0) {
    check.ratio = kInfiniteCost;
  } else {
    check.ratio = run_cost / opt_cost;
  }
  check.holds = check.ratio <= check.bound + kCostTolerance;
  return check;
}

void attach_feasibility(ClusteringRun& run, const Grouping& grouping, double t) {
  run.certificate = is_feasible(run.partition, grouping, t);
}

}  // namespace subcluster
