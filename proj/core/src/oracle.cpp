#include "subcluster/oracle.hpp"

#include <random>

namespace subcluster {

ContractedOracle::ContractedOracle(const SubmodularOracle& base,
                                   std::vector<ElementSet> supernodes)
    : SubmodularOracle(static_cast<int>(supernodes.size())),
      base_(base),
      supernodes_(std::move(supernodes)) {
  std::size_t covered = 0;
  std::vector<char> seen(static_cast<std::size_t>(base.ground_size()), 0);
  for (const auto& node : supernodes_) {
    if (node.empty()) throw InputError("supernodes must be nonempty");
    for (ElementId x : node) {
      if (x < 0 || x >= base.ground_size() || seen[static_cast<std::size_t>(x)]) {
        throw InputError("supernodes must partition the base ground set");
      }
      seen[static_cast<std::size_t>(x)] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(base.ground_size())) {
    throw InputError("supernodes must cover the base ground set");
  }
}

ElementSet ContractedOracle::expand(const ElementSet& s) const {
  ElementSet out;
  for (ElementId id : s) {
    const auto& node = supernodes_[static_cast<std::size_t>(id)];
    out.insert(out.end(), node.begin(), node.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContractedOracle contract(const SubmodularOracle& base, std::vector<ElementSet> supernodes) {
  return ContractedOracle(base, std::move(supernodes));
}

SplitObjectiveOracle::SplitObjectiveOracle(const SubmodularOracle& base, ElementSet block)
    : SubmodularOracle(static_cast<int>(block.size())), base_(base), block_(std::move(block)) {
  if (!is_sorted_unique(block_)) throw InputError("block must be sorted and duplicate-free");
  if (!block_.empty() && (block_.front() < 0 || block_.back() >= base.ground_size())) {
    throw InputError("block element out of range");
  }
}

ElementSet SplitObjectiveOracle::to_base_ids(const ElementSet& local) const {
  ElementSet out;
  out.reserve(local.size());
  for (ElementId id : local) out.push_back(block_[static_cast<std::size_t>(id)]);
  return out;
}

double SplitObjectiveOracle::dispatch(const ElementSet& local) const {
  const ElementSet s = to_base_ids(local);
  return base_(s) + base_(set_difference(block_, s));
}

std::vector<ElementSet> SplitObjectiveOracle::zero_cost_atoms() const {
  const auto base_atoms = base_.zero_cost_atoms();
  if (base_atoms.empty()) return {};
  // h is zero on a union of base atoms only when the block itself is one,
  // so atoms are inherited only for atom-aligned blocks
  std::vector<ElementSet> local;
  std::size_t covered = 0;
  for (const auto& atom : base_atoms) {
    if (!is_subset(atom, block_)) {
      if (!sets_disjoint(atom, block_)) return {};
      continue;
    }
    ElementSet ids;
    ids.reserve(atom.size());
    for (ElementId x : atom) {
      const auto it = std::lower_bound(block_.begin(), block_.end(), x);
      ids.push_back(static_cast<ElementId>(it - block_.begin()));
    }
    covered += atom.size();
    local.push_back(std::move(ids));
  }
  if (covered != block_.size()) return {};
  return local;
}

namespace {

ElementSet random_subset(int n, std::mt19937_64& gen) {
  ElementSet s;
  for (int i = 0; i < n; ++i) {
    if (gen() & 1u) s.push_back(i);
  }
  return s;
}

ElementSet subset_from_mask(std::uint64_t mask, int n) {
  ElementSet s;
  for (int i = 0; i < n; ++i) {
    if (mask & (std::uint64_t{1} << i)) s.push_back(i);
  }
  return s;
}

}  // namespace

OracleCheckReport check_symmetric_submodular(const SubmodularOracle& oracle, int sample_count,
                                             std::uint64_t seed) {
  if (sample_count < 1) throw InputError("sample count must be at least 1");
  const int n = oracle.ground_size();
  OracleCheckReport report;
  report.value_at_empty = oracle({});
  report.value_at_full = oracle(make_range_set(n));

  std::mt19937_64 gen(seed);
  auto record_symmetry = [&](const ElementSet& s) {
    const double violation = std::abs(oracle(s) - oracle(complement_of(s, n)));
    ++report.symmetry_checks;
    if (violation > report.max_symmetry_violation) {
      report.max_symmetry_violation = violation;
      report.worst_symmetry_set = s;
    }
  };

  if (n <= 12) {
    report.symmetry_exhaustive = true;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      record_symmetry(subset_from_mask(mask, n));
    }
  } else {
    for (int i = 0; i < sample_count; ++i) record_symmetry(random_subset(n, gen));
  }

  for (int i = 0; i < sample_count; ++i) {
    const ElementSet a = random_subset(n, gen);
    const ElementSet b = random_subset(n, gen);
    const double lhs = oracle(a) + oracle(b);
    const double rhs = oracle(set_union(a, b)) + oracle(set_intersection(a, b));
    const double violation = rhs - lhs;  // > 0 breaks submodularity
    ++report.submodularity_checks;
    if (violation > report.max_submodularity_violation) {
      report.max_submodularity_violation = violation;
      report.worst_submodularity_pair = {a, b};
    }
  }
  return report;
}

}  // namespace subcluster
