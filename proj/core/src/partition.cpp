#include "subcluster/partition.hpp"

namespace subcluster {

Partition::Partition(int ground_size, std::vector<ElementSet> blocks)
    : n_(ground_size), blocks_(std::move(blocks)) {
  if (n_ < 0) throw InputError("partition ground size must be nonnegative");
  std::vector<int> owner(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) {
      throw InputError("partition block " + std::to_string(i) + " is empty");
    }
    if (!is_sorted_unique(blocks_[i])) {
      throw InputError("partition block " + std::to_string(i) +
                       " must be sorted and duplicate-free");
    }
    for (ElementId x : blocks_[i]) {
      if (x < 0 || x >= n_) {
        throw InputError("partition references element " + std::to_string(x) +
                         " outside 0.." + std::to_string(n_ - 1));
      }
      if (owner[static_cast<std::size_t>(x)] >= 0) {
        throw InputError("element " + std::to_string(x) + " appears in blocks " +
                         std::to_string(owner[static_cast<std::size_t>(x)]) + " and " +
                         std::to_string(i));
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < n_; ++x) {
    if (owner[static_cast<std::size_t>(x)] < 0) {
      throw InputError("element " + std::to_string(x) + " is missing from the partition");
    }
  }
}

std::optional<FeasibilityCertificate> is_feasible(const Partition& partition,
                                                  const Grouping& grouping, double t) {
  if (partition.ground_size() != grouping.ground_size()) {
    throw InputError("partition and grouping ground sets differ");
  }
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  for (int j = 0; j < grouping.group_count(); ++j) {
    const auto& g = grouping.group(j);
    const long long needed = ceil_fraction(t, static_cast<long long>(g.size()));
    for (int i = 0; i < partition.block_count(); ++i) {
      const auto held = static_cast<long long>(intersection_size(partition.block(i), g));
      if (held >= needed) {
        return FeasibilityCertificate{
            j, grouping.name(j), i,
            static_cast<double>(held) / static_cast<double>(g.size())};
      }
    }
  }
  return std::nullopt;
}

int max_k(const Grouping& grouping, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  const int n = grouping.ground_size();
  const auto& smallest = grouping.group(grouping.smallest_group_index());
  const long long k = static_cast<long long>(n) -
                      ceil_fraction(t, static_cast<long long>(smallest.size())) + 1;
  return static_cast<int>(std::min<long long>(n, k));
}

double partition_cost(const SubmodularOracle& oracle, const Partition& partition) {
  if (partition.ground_size() != oracle.ground_size()) {
    throw InputError("partition and oracle ground sets differ");
  }
  double total = 0.0;
  for (const auto& block : partition.blocks()) total += oracle(block);
  return total;
}

}  // namespace subcluster
