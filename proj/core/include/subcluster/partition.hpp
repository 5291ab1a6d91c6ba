#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcluster/grouping.hpp"
#include "subcluster/oracle.hpp"

namespace subcluster {

/// Ordered list of nonempty, pairwise disjoint blocks covering the ground set.
class Partition {
 public:
  /// Empty partition over an empty ground set (placeholder value).
  Partition() = default;

  Partition(int ground_size, std::vector<ElementSet> blocks);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const ElementSet& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_ = 0;
  std::vector<ElementSet> blocks_;
};

/// Witness that a partition is actionable: block `block_index` holds at least
/// a t-fraction of group `group_index`.
struct FeasibilityCertificate {
  int group_index = -1;
  std::string group_name;
  int block_index = -1;
  double fraction = 0.0;
};

/// First (group index, block index) pair, in that order, with
/// |C_i ∩ g| >= ceil(t |g|); absent when the partition is not actionable.
std::optional<FeasibilityCertificate> is_feasible(const Partition& partition,
                                                  const Grouping& grouping, double t);

/// Largest feasible cluster count: min(N, N - ceil(t |g_s|) + 1) with g_s the
/// smallest group. Clamped to N so a vacuous constraint (t = 0) stays valid.
int max_k(const Grouping& grouping, double t);

/// Sum of oracle values over the blocks; invariant under block reordering.
double partition_cost(const SubmodularOracle& oracle, const Partition& partition);

}  // namespace subcluster
