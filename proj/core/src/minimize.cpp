#include "subcluster/minimize.hpp"

#include <optional>

namespace subcluster {

namespace {

constexpr int kEnumerationGuard = 24;        // 2^24 subsets is the ceiling for enumeration
constexpr int kPartitionGuard = 12;          // restricted-growth enumeration ceiling
constexpr std::size_t kAchieverGuard = 100000;
constexpr int kAtomEnumerationGuard = 16;

bool better_candidate(double value, const ElementSet& set, bool have_best, double best_value,
                      const ElementSet& best_set) {
  if (!have_best) return true;
  if (value != best_value) return value < best_value;
  return lex_less(set, best_set);
}

/// Depth-first enumeration of nonempty proper subsets, restricted to family
/// members when a family is given. Supersets of a set that already exceeds
/// every group cap cannot re-enter the family, so that subtree is skipped.
class MemberEnumerator {
 public:
  MemberEnumerator(int n, const GroupCapFamily* family) : n_(n), family_(family) {
    if (family_) {
      const auto& groups = family_->groups();
      const auto& caps = family_->caps();
      in_group_.assign(groups.size(), std::vector<char>(static_cast<std::size_t>(n_), 0));
      counts_.assign(groups.size(), 0);
      for (std::size_t j = 0; j < groups.size(); ++j) {
        for (ElementId x : groups[j]) in_group_[j][static_cast<std::size_t>(x)] = 1;
        if (caps[j] < 0) ++groups_over_;
      }
    }
  }

  template <typename Visitor>
  void run(Visitor&& visit) {
    dfs(0, visit);
  }

 private:
  template <typename Visitor>
  void dfs(int next, Visitor& visit) {
    for (int i = next; i < n_; ++i) {
      current_.push_back(i);
      bool dead = false;
      if (family_) {
        for (std::size_t j = 0; j < counts_.size(); ++j) {
          if (in_group_[j][static_cast<std::size_t>(i)]) {
            if (++counts_[j] == family_->caps()[j] + 1) ++groups_over_;
          }
        }
        dead = groups_over_ == static_cast<int>(counts_.size());
      }
      if (!dead) {
        if (static_cast<int>(current_.size()) < n_) visit(current_);
        dfs(i + 1, visit);
      }
      if (family_) {
        for (std::size_t j = 0; j < counts_.size(); ++j) {
          if (in_group_[j][static_cast<std::size_t>(i)]) {
            if (counts_[j]-- == family_->caps()[j] + 1) --groups_over_;
          }
        }
      }
      current_.pop_back();
    }
  }

  int n_;
  const GroupCapFamily* family_;
  ElementSet current_;
  std::vector<std::vector<char>> in_group_;
  std::vector<long long> counts_;
  int groups_over_ = 0;
};

std::optional<ElementSet> best_zero_cost_member(const SubmodularOracle& oracle,
                                                const GroupCapFamily& family) {
  const auto atoms = oracle.zero_cost_atoms();
  if (atoms.size() < 2 || atoms.size() > kAtomEnumerationGuard) return std::nullopt;
  const auto count = static_cast<int>(atoms.size());
  std::optional<ElementSet> best;
  for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
    ElementSet candidate;
    for (int a = 0; a < count; ++a) {
      if (mask & (1u << a)) {
        candidate = set_union(candidate, atoms[static_cast<std::size_t>(a)]);
      }
    }
    if (static_cast<int>(candidate.size()) >= oracle.ground_size()) continue;
    if (!family.member(candidate)) continue;
    if (!best || lex_less(candidate, *best)) best = std::move(candidate);
  }
  return best;
}

}  // namespace

MinimizationResult queyranne_min(const SubmodularOracle& oracle, PendantTrace* trace) {
  const int n = oracle.ground_size();
  if (n < 2) throw InputError("minimization needs a ground set of at least two elements");
  const std::uint64_t calls_before = oracle.call_count();
  if (trace) trace->rounds.clear();

  std::vector<ElementSet> supernodes;
  supernodes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) supernodes.push_back({i});

  bool have_best = false;
  double best_value = 0.0;
  ElementSet best_set;

  while (supernodes.size() >= 2) {
    const int p = static_cast<int>(supernodes.size());
    const ContractedOracle merged = contract(oracle, supernodes);

    std::vector<double> singleton(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) singleton[static_cast<std::size_t>(i)] = merged({i});

    // maximum-adjacency-style ordering from the lowest supernode, key
    // f(W ∪ {u}) - f({u}), ties to the lowest id
    std::vector<int> order{0};
    std::vector<char> used(static_cast<std::size_t>(p), 0);
    used[0] = 1;
    ElementSet head{0};
    for (int step = 1; step < p; ++step) {
      int best_u = -1;
      double best_key = kInfiniteCost;
      for (int u = 0; u < p; ++u) {
        if (used[static_cast<std::size_t>(u)]) continue;
        ElementSet probe = head;
        probe.insert(std::lower_bound(probe.begin(), probe.end(), u), u);
        const double key = merged(probe) - singleton[static_cast<std::size_t>(u)];
        if (key < best_key) {
          best_key = key;
          best_u = u;
        }
      }
      order.push_back(best_u);
      used[static_cast<std::size_t>(best_u)] = 1;
      head.insert(std::lower_bound(head.begin(), head.end(), best_u), best_u);
    }

    const int last = order[static_cast<std::size_t>(p - 1)];
    const int prev = order[static_cast<std::size_t>(p - 2)];
    const double candidate_value = singleton[static_cast<std::size_t>(last)];
    const ElementSet& expanded = supernodes[static_cast<std::size_t>(last)];
    const ElementSet comp = complement_of(expanded, n);
    const ElementSet canonical = lex_less(comp, expanded) ? comp : expanded;

    if (trace) {
      PendantRound round;
      round.ordering.reserve(order.size());
      for (int id : order) {
        round.ordering.push_back(supernodes[static_cast<std::size_t>(id)].front());
      }
      round.candidate = canonical;
      round.value = candidate_value;
      trace->rounds.push_back(std::move(round));
    }

    if (better_candidate(candidate_value, canonical, have_best, best_value, best_set)) {
      have_best = true;
      best_value = candidate_value;
      best_set = canonical;
    }

    ElementSet fused = set_union(supernodes[static_cast<std::size_t>(prev)],
                                 supernodes[static_cast<std::size_t>(last)]);
    supernodes.erase(supernodes.begin() + std::max(prev, last));
    supernodes.erase(supernodes.begin() + std::min(prev, last));
    supernodes.push_back(std::move(fused));
    std::sort(supernodes.begin(), supernodes.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  }

  return {best_set, best_value, oracle.call_count() - calls_before};
}

MinimizationResult constrained_min(const SubmodularOracle& oracle, const GroupCapFamily& family,
                                   const ConstrainedMinImpl& alternative) {
  if (oracle.ground_size() != family.ground_size()) {
    throw InputError("oracle and family ground sets differ");
  }
  if (!family.has_nonempty_proper_member()) {
    throw InfeasibleError("family admits no nonempty proper subset of the ground set");
  }
  if (alternative) return alternative(oracle, family);
  if (family.admits_every_subset()) return queyranne_min(oracle);

  const std::uint64_t calls_before = oracle.call_count();
  if (auto zero = best_zero_cost_member(oracle, family)) {
    // nonnegative function, so a zero-cost member is globally optimal
    const double value = oracle(*zero);
    return {std::move(*zero), value, oracle.call_count() - calls_before};
  }

  const int n = oracle.ground_size();
  if (n > kEnumerationGuard) {
    throw SizeGuardError("constrained enumeration refuses ground sets larger than " +
                         std::to_string(kEnumerationGuard) + " (got " + std::to_string(n) + ")");
  }
  bool have_best = false;
  double best_value = 0.0;
  ElementSet best_set;
  MemberEnumerator enumerator(n, &family);
  enumerator.run([&](const ElementSet& s) {
    const double value = oracle(s);
    if (better_candidate(value, s, have_best, best_value, best_set)) {
      have_best = true;
      best_value = value;
      best_set = s;
    }
  });
  if (!have_best) throw InfeasibleError("family admits no nonempty proper member");
  return {best_set, best_value, oracle.call_count() - calls_before};
}

std::vector<ElementSet> minimal_optimal_solutions(const SubmodularOracle& oracle,
                                                  const GroupCapFamily& family) {
  if (oracle.ground_size() != family.ground_size()) {
    throw InputError("oracle and family ground sets differ");
  }
  if (!family.has_nonempty_proper_member()) {
    throw InfeasibleError("family admits no nonempty proper subset of the ground set");
  }
  const int n = oracle.ground_size();
  if (n > kEnumerationGuard) {
    throw SizeGuardError("minimal-solution enumeration refuses ground sets larger than " +
                         std::to_string(kEnumerationGuard));
  }

  bool have_best = false;
  double best_value = 0.0;
  {
    MemberEnumerator pass(n, &family);
    pass.run([&](const ElementSet& s) {
      const double value = oracle(s);
      if (!have_best || value < best_value) {
        have_best = true;
        best_value = value;
      }
    });
  }
  if (!have_best) throw InfeasibleError("family admits no nonempty proper member");

  std::vector<ElementSet> achievers;
  {
    MemberEnumerator pass(n, &family);
    pass.run([&](const ElementSet& s) {
      if (std::abs(oracle(s) - best_value) <= kCostTolerance) {
        if (achievers.size() >= kAchieverGuard) {
          throw SizeGuardError("too many optimal solutions to enumerate");
        }
        achievers.push_back(s);
      }
    });
  }

  std::sort(achievers.begin(), achievers.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  std::vector<ElementSet> minimal;
  for (const auto& s : achievers) {
    bool dominated = false;
    for (const auto& kept : minimal) {
      if (kept.size() < s.size() && is_subset(kept, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), lex_less);

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (!sets_disjoint(minimal[i], minimal[j])) {
        throw std::logic_error(
            "minimal optimal solutions are not pairwise disjoint; the oracle is not "
            "symmetric submodular");
      }
    }
  }
  return minimal;
}

MinimizationResult brute_force_min(const SubmodularOracle& oracle, const GroupCapFamily* family) {
  const int n = oracle.ground_size();
  if (n > kEnumerationGuard) {
    throw SizeGuardError("brute-force minimization refuses ground sets larger than " +
                         std::to_string(kEnumerationGuard) + " (got " + std::to_string(n) + ")");
  }
  if (family && oracle.ground_size() != family->ground_size()) {
    throw InputError("oracle and family ground sets differ");
  }
  if (n < 2) throw InputError("minimization needs a ground set of at least two elements");
  const std::uint64_t calls_before = oracle.call_count();

  bool have_best = false;
  double best_value = 0.0;
  ElementSet best_set;
  MemberEnumerator enumerator(n, family);
  enumerator.run([&](const ElementSet& s) {
    const double value = oracle(s);
    if (better_candidate(value, s, have_best, best_value, best_set)) {
      have_best = true;
      best_value = value;
      best_set = s;
    }
  });
  if (!have_best) throw InfeasibleError("no nonempty proper candidate exists");
  return {best_set, best_value, oracle.call_count() - calls_before};
}

namespace {

bool blocks_less(const std::vector<ElementSet>& a, const std::vector<ElementSet>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

}  // namespace

BestPartitionResult brute_force_best_partition(const SubmodularOracle& oracle, int k,
                                               const Grouping& grouping, double t) {
  const int n = oracle.ground_size();
  if (grouping.ground_size() != n) throw InputError("oracle and grouping ground sets differ");
  if (n > kPartitionGuard) {
    throw SizeGuardError("partition enumeration refuses ground sets larger than " +
                         std::to_string(kPartitionGuard) + " (got " + std::to_string(n) + ")");
  }
  if (k < 1 || k > n) throw InputError("cluster count must lie in 1..N");
  const std::uint64_t calls_before = oracle.call_count();

  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  bool have_best = false;
  double best_cost = 0.0;
  std::vector<ElementSet> best_blocks;

  auto consider = [&]() {
    std::vector<ElementSet> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) {
      blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i);
    }
    const Partition partition(n, blocks);
    if (!is_feasible(partition, grouping, t)) return;
    double cost = 0.0;
    for (const auto& block : blocks) cost += oracle(block);
    if (!have_best || cost < best_cost ||
        (cost == best_cost && blocks_less(blocks, best_blocks))) {
      have_best = true;
      best_cost = cost;
      best_blocks = std::move(blocks);
    }
  };

  // restricted growth strings with exactly k values
  auto recurse = [&](auto&& self, int i, int used) -> void {
    if (used + (n - i) < k) return;  // cannot reach k blocks any more
    if (i == n) {
      if (used == k) consider();
      return;
    }
    const int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      assign[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  recurse(recurse, 0, 0);

  if (!have_best) {
    throw InfeasibleError("no feasible partition into " + std::to_string(k) + " blocks exists");
  }
  return {Partition(n, best_blocks), best_cost, oracle.call_count() - calls_before};
}

}  // namespace subcluster
