#include "subcluster/grouping.hpp"

namespace subcluster {

Grouping::Grouping(int ground_size, std::vector<std::string> names,
                   std::vector<ElementSet> groups)
    : n_(ground_size), names_(std::move(names)), groups_(std::move(groups)) {
  if (n_ < 1) throw InputError("grouping needs a nonempty ground set");
  if (groups_.empty()) throw InputError("grouping needs at least one group");
  if (names_.size() != groups_.size()) throw InputError("one name per group required");
  std::vector<int> owner(static_cast<std::size_t>(n_), -1);
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    if (groups_[j].empty()) throw InputError("group '" + names_[j] + "' is empty");
    if (!is_sorted_unique(groups_[j])) {
      throw InputError("group '" + names_[j] + "' must be sorted and duplicate-free");
    }
    for (ElementId x : groups_[j]) {
      if (x < 0 || x >= n_) {
        throw InputError("group '" + names_[j] + "' references element " + std::to_string(x) +
                         " outside 0.." + std::to_string(n_ - 1));
      }
      if (owner[static_cast<std::size_t>(x)] >= 0) {
        throw InputError("element " + std::to_string(x) + " appears in groups '" +
                         names_[static_cast<std::size_t>(owner[static_cast<std::size_t>(x)])] +
                         "' and '" + names_[j] + "'");
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(j);
    }
  }
  for (int x = 0; x < n_; ++x) {
    if (owner[static_cast<std::size_t>(x)] < 0) {
      throw InputError("element " + std::to_string(x) + " belongs to no group");
    }
  }
}

Grouping Grouping::single_group(int ground_size, std::string name) {
  return Grouping(ground_size, {std::move(name)}, {make_range_set(ground_size)});
}

int Grouping::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j] == name) return static_cast<int>(j);
  }
  throw InputError("no group named '" + name + "'");
}

int Grouping::smallest_group_index() const {
  int best = 0;
  for (int j = 1; j < group_count(); ++j) {
    if (groups_[static_cast<std::size_t>(j)].size() <
        groups_[static_cast<std::size_t>(best)].size()) {
      best = j;
    }
  }
  return best;
}

ActionabilityParams::ActionabilityParams(double t_value, std::optional<int> group)
    : t(t_value), group_index(group) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
}

GroupCapFamily::GroupCapFamily(int ground_size, std::vector<ElementSet> groups,
                               std::vector<long long> caps)
    : n_(ground_size), groups_(std::move(groups)), caps_(std::move(caps)) {
  if (n_ < 0) throw InputError("family ground size must be nonnegative");
  if (groups_.empty()) throw InputError("family needs at least one group");
  if (groups_.size() != caps_.size()) throw InputError("one cap per group required");
  for (const auto& g : groups_) {
    if (!is_sorted_unique(g)) throw InputError("family group must be sorted and duplicate-free");
    if (!g.empty() && (g.front() < 0 || g.back() >= n_)) {
      throw InputError("family group element out of range");
    }
  }
}

GroupCapFamily GroupCapFamily::global(const Grouping& grouping, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  std::vector<long long> caps;
  caps.reserve(static_cast<std::size_t>(grouping.group_count()));
  for (const auto& g : grouping.groups()) {
    const auto size = static_cast<long long>(g.size());
    caps.push_back(size - ceil_fraction(t, size));
  }
  return GroupCapFamily(grouping.ground_size(), grouping.groups(), std::move(caps));
}

GroupCapFamily GroupCapFamily::for_group(const Grouping& grouping, int group_index, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  if (group_index < 0 || group_index >= grouping.group_count()) {
    throw InputError("group index out of range");
  }
  const auto& g = grouping.group(group_index);
  const auto size = static_cast<long long>(g.size());
  return GroupCapFamily(grouping.ground_size(), {g}, {size - ceil_fraction(t, size)});
}

bool GroupCapFamily::member(const ElementSet& s) const {
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    if (static_cast<long long>(intersection_size(s, groups_[j])) <= caps_[j]) return true;
  }
  return false;
}

bool GroupCapFamily::has_nonempty_proper_member() const {
  if (n_ < 2) return false;
  // hereditary, so existence reduces to the existence of a member singleton
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    if (caps_[j] < 0) continue;
    if (caps_[j] >= 1 && !groups_[j].empty()) return true;
    if (static_cast<int>(groups_[j].size()) < n_) return true;  // an element outside g
  }
  return false;
}

bool GroupCapFamily::admits_every_subset() const {
  for (std::size_t j = 0; j < groups_.size(); ++j) {
    if (caps_[j] >= static_cast<long long>(groups_[j].size())) return true;
  }
  return false;
}

GroupCapFamily localized_family(const ElementSet& block, const Grouping& grouping,
                                int group_index, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  if (group_index < 0 || group_index >= grouping.group_count()) {
    throw InputError("group index out of range");
  }
  if (!is_sorted_unique(block)) throw InputError("block must be sorted and duplicate-free");
  const auto& g = grouping.group(group_index);
  ElementSet local_group;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (set_contains(g, block[i])) local_group.push_back(static_cast<ElementId>(i));
  }
  const long long cap = static_cast<long long>(local_group.size()) -
                        ceil_fraction(t, static_cast<long long>(g.size()));
  return GroupCapFamily(static_cast<int>(block.size()), {std::move(local_group)}, {cap});
}

}  // namespace subcluster
