#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subcluster/common.hpp"

namespace subcluster {

/// Partition of the ground set into named groups (the aggregate units on
/// which actions are taken). Immutable after construction.
class Grouping {
 public:
  Grouping(int ground_size, std::vector<std::string> names, std::vector<ElementSet> groups);

  static Grouping single_group(int ground_size, std::string name = "all");

  int ground_size() const { return n_; }
  int group_count() const { return static_cast<int>(groups_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<ElementSet>& groups() const { return groups_; }
  const ElementSet& group(int j) const { return groups_.at(static_cast<std::size_t>(j)); }
  const std::string& name(int j) const { return names_.at(static_cast<std::size_t>(j)); }
  int index_of(const std::string& name) const;

  /// Index of the smallest group; ties go to the lowest index.
  int smallest_group_index() const;

  friend bool operator==(const Grouping&, const Grouping&) = default;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<ElementSet> groups_;
};

/// Threshold and target-group selection for a clustering request.
/// A missing group index means "any group may carry the constraint".
struct ActionabilityParams {
  double t = 0.0;
  std::optional<int> group_index;

  ActionabilityParams() = default;
  ActionabilityParams(double t_value, std::optional<int> group = std::nullopt);
};

/// Intensional hereditary family over a dense local ground set: a set S is a
/// member iff some group g has |S ∩ g| <= cap_g. Downward closed for any caps;
/// caps may be negative, which empties the clause for that group.
class GroupCapFamily {
 public:
  GroupCapFamily(int ground_size, std::vector<ElementSet> groups, std::vector<long long> caps);

  /// Family carrying the actionability constraint for every group at once:
  /// cap_g = |g| - ceil(t * |g|).
  static GroupCapFamily global(const Grouping& grouping, double t);

  /// Same cap rule restricted to one designated group.
  static GroupCapFamily for_group(const Grouping& grouping, int group_index, double t);

  int ground_size() const { return n_; }
  const std::vector<ElementSet>& groups() const { return groups_; }
  const std::vector<long long>& caps() const { return caps_; }

  bool member(const ElementSet& s) const;

  /// True when some nonempty proper subset of the ground set is a member.
  bool has_nonempty_proper_member() const;

  /// True when every subset is a member (vacuous constraint).
  bool admits_every_subset() const;

 private:
  int n_ = 0;
  std::vector<ElementSet> groups_;
  std::vector<long long> caps_;
};

inline bool family_member(const ElementSet& s, const GroupCapFamily& family) {
  return family.member(s);
}

/// Hereditary family used when splitting a block: over the block's local ids
/// (positions in the sorted block), with the designated group's cap
///   |block ∩ g| - ceil(t * |g|),
/// where |g| is the group's full size in the ground set. The cap can be
/// negative, in which case no set intersecting the group qualifies.
GroupCapFamily localized_family(const ElementSet& block, const Grouping& grouping,
                                int group_index, double t);

}  // namespace subcluster
