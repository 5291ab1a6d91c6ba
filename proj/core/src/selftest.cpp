#include "subcluster/selftest.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "subcluster/cluster.hpp"
#include "subcluster/io.hpp"
#include "subcluster/minimize.hpp"

namespace subcluster::selftest {

namespace {

constexpr double kTol = kCostTolerance;

void record(SuiteResult& suite, bool ok, const std::function<std::string()>& message) {
  ++suite.checks;
  if (!ok) {
    ++suite.failures;
    suite.messages.push_back(message());
  }
}

std::string replay_blob(std::uint64_t seed, const Instance& instance) {
  return "seed=" + std::to_string(seed) +
         " replay-instance: " + instance_to_json(instance).dump();
}

double t_cycle(std::uint64_t seed, std::initializer_list<double> values) {
  return *(values.begin() + static_cast<std::ptrdiff_t>(seed % values.size()));
}

double density_cycle(std::uint64_t seed) {
  constexpr double kDensities[] = {0.3, 0.6, 1.0};
  return kDensities[seed % 3];
}

ElementSet set_from_mask(std::uint32_t mask, int n) {
  ElementSet s;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) s.push_back(i);
  }
  return s;
}

/// Mask-based reference for minimal constrained optima, independent of the
/// enumeration used by the library.
std::vector<ElementSet> minimal_optima_by_masks(const SubmodularOracle& oracle,
                                                const GroupCapFamily& family) {
  const int n = oracle.ground_size();
  std::vector<std::pair<std::uint32_t, double>> members;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    const ElementSet s = set_from_mask(mask, n);
    if (family.member(s)) members.push_back({mask, oracle(s)});
  }
  if (members.empty()) return {};
  double best = members.front().second;
  for (const auto& [mask, value] : members) best = std::min(best, value);
  std::vector<std::uint32_t> achievers;
  for (const auto& [mask, value] : members) {
    if (std::abs(value - best) <= kTol) achievers.push_back(mask);
  }
  std::vector<ElementSet> minimal;
  for (std::uint32_t mask : achievers) {
    bool dominated = false;
    for (std::uint32_t other : achievers) {
      if (other != mask && (other & mask) == other) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(set_from_mask(mask, n));
  }
  std::sort(minimal.begin(), minimal.end(), lex_less);
  return minimal;
}

GaussianModel random_spd_model(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = coef(gen);
  }
  return GaussianModel(a.transpose() * a + 0.5 * Eigen::MatrixXd::Identity(n, n));
}

}  // namespace

void Options::validate() const {
  if (n_max < 4 || n_max > 12) {
    throw InputError("n-max must lie in 4..12: the battery cross-checks against exhaustive "
                     "enumeration, which is intractable beyond 12 elements");
  }
  if (seeds < 1) throw InputError("need at least one seed");
  if (k_max < 2 || k_max > 6) throw InputError("k-max must lie in 2..6");
}

Instance battery_instance(std::uint64_t seed, int n, int groups, double t, double density) {
  RandomInstanceParams params;
  params.seed = seed;
  params.n = n;
  params.density = density;
  params.weight_min = 1;
  params.weight_max = 9;
  params.groups = groups;
  params.t = t;
  return random_instance(params);
}

SuiteResult k2_optimality(const Options& options) {
  SuiteResult suite{"k2-optimality"};
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(options.seeds); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(options.n_max - 3));
    const int m = 1 + static_cast<int>(seed % 2);
    const double t = t_cycle(seed, {0.4, 0.51, 0.75});
    const Instance instance = battery_instance(seed, n, m, t, density_cycle(seed));
    const auto oracle = instance.make_oracle();
    try {
      const ClusteringRun run = optimal_two_clustering(*oracle, instance.grouping(), t);
      const auto reference = brute_force_best_partition(*oracle, 2, instance.grouping(), t);
      record(suite, std::abs(run.cost - reference.cost) <= kTol, [&] {
        return "two-way optimum " + std::to_string(run.cost) + " != brute force " +
               std::to_string(reference.cost) + "; " + replay_blob(seed, instance);
      });
      record(suite, std::abs(run.cost - 2.0 * (*oracle)(run.partition.block(0))) <= kTol, [&] {
        return "two-way cost is not twice the split value; " + replay_blob(seed, instance);
      });
      const ClusteringRun greedy =
          actionable_greedy_splitting_any_group(*oracle, instance.grouping(), t, 2);
      record(suite, std::abs(greedy.cost - reference.cost) <= kTol, [&] {
        return "constrained splitting at k=2 misses the optimum; " + replay_blob(seed, instance);
      });
    } catch (const InfeasibleError&) {
      bool brute_infeasible = false;
      try {
        brute_force_best_partition(*oracle, 2, instance.grouping(), t);
      } catch (const InfeasibleError&) {
        brute_infeasible = true;
      }
      record(suite, brute_infeasible, [&] {
        return "two-way solver reported infeasible but brute force found a partition; " +
               replay_blob(seed, instance);
      });
    }
  }
  return suite;
}

SuiteResult gsa_bound(const Options& options) {
  SuiteResult suite{"gsa-bound"};
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(options.seeds); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(options.n_max - 3));
    const Instance instance = battery_instance(seed, n, 1, 0.0, density_cycle(seed));
    const auto oracle = instance.make_oracle();
    for (int k = 2; k <= std::min({4, options.k_max, n}); ++k) {
      const ClusteringRun run = greedy_splitting(*oracle, k);
      const auto reference = brute_force_best_partition(*oracle, k, instance.grouping(), 0.0);
      const auto check = approximation_ratio_check(run.cost, reference.cost, k);
      record(suite, check.holds, [&] {
        return "gsa k=" + std::to_string(k) + " cost " + std::to_string(run.cost) +
               " exceeds bound " + std::to_string(check.bound) + " * OPT " +
               std::to_string(reference.cost) + "; " + replay_blob(seed, instance);
      });
      for (const auto& step : run.trace) {
        record(suite, step.chosen.increment >= -kTol, [&] {
          return "negative split increment in gsa; " + replay_blob(seed, instance);
        });
      }
    }
  }
  return suite;
}

SuiteResult queyranne_equivalence(const Options& options) {
  SuiteResult suite{"queyranne-equivalence"};
  const int n_cap = 12;  // subset enumeration stays cheap up to here
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(options.seeds); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(n_cap - 3));
    const Instance instance = battery_instance(seed, n, 1, 0.0, density_cycle(seed));
    const auto oracle = instance.make_oracle();
    PendantTrace trace;
    const MinimizationResult fast = queyranne_min(*oracle, &trace);
    const MinimizationResult reference = brute_force_min(*oracle);
    record(suite, std::abs(fast.value - reference.value) <= kTol, [&] {
      return "pendant-pair value " + std::to_string(fast.value) + " != brute force " +
             std::to_string(reference.value) + "; " + replay_blob(seed, instance);
    });
    record(suite, !fast.minimizer.empty() &&
                      static_cast<int>(fast.minimizer.size()) < oracle->ground_size(),
           [&] { return "minimizer not a nonempty proper subset; " + replay_blob(seed, instance); });
    record(suite, static_cast<int>(trace.rounds.size()) == n - 1, [&] {
      return "expected " + std::to_string(n - 1) + " pendant rounds, saw " +
             std::to_string(trace.rounds.size()) + "; " + replay_blob(seed, instance);
    });
    bool shrinking = true;
    double recorded_best = kInfiniteCost;
    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
      shrinking = shrinking && trace.rounds[r].ordering.size() ==
                                   static_cast<std::size_t>(n) - r;
      recorded_best = std::min(recorded_best, trace.rounds[r].value);
    }
    record(suite, shrinking, [&] {
      return "pendant rounds do not shrink by one supernode each; " + replay_blob(seed, instance);
    });
    record(suite, recorded_best == fast.value, [&] {
      return "returned optimum differs from the best recorded candidate; " +
             replay_blob(seed, instance);
    });
  }
  return suite;
}

SuiteResult queyranne_budget(const Options& options) {
  SuiteResult suite{"queyranne-budget"};
  (void)options;
  for (int n = 4; n <= 64; ++n) {
    RandomInstanceParams params;
    params.seed = static_cast<std::uint64_t>(1000 + n);
    params.n = n;
    params.density = n % 3 == 0 ? 0.9 : (n % 3 == 1 ? 0.5 : 0.25);
    const Instance instance = random_instance(params);
    const auto oracle = instance.make_oracle();
    const MinimizationResult result = queyranne_min(*oracle);
    const auto budget = 5ull * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                        static_cast<std::uint64_t>(n);
    record(suite, result.oracle_calls <= budget, [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(result.oracle_calls) +
             " oracle calls exceed the 5N^3 budget of " + std::to_string(budget);
    });
  }
  return suite;
}

SuiteResult counterexample_reproduction(const Options& options) {
  SuiteResult suite{"counterexample"};
  (void)options;

  auto ratio_at = [&suite](double eps) {
    CounterexampleSpec spec;
    spec.epsilon = eps;
    const auto built = make_counterexample(spec);
    const Instance& instance = built.instance;
    const auto oracle = instance.make_oracle();

    record(suite, max_k(instance.grouping(), instance.t()) == 50,
           [&] { return "default counterexample should admit at most 50 clusters"; });

    const ClusteringRun run =
        actionable_greedy_splitting(*oracle, instance.grouping(), 0, instance.t(), spec.k);
    record(suite, run.feasible(), [&] { return "sequential-splitting run must stay feasible"; });
    record(suite, !run.trace.empty() && run.trace.front().chosen.split == built.landmarks.clique,
           [&] { return "first split should peel off the heavy component"; });
    record(suite, !run.trace.empty() && run.trace.front().chosen.increment == 0.0,
           [&] { return "first split should be free"; });
    bool later_splits_in_clique = true;
    for (std::size_t i = 1; i < run.trace.size(); ++i) {
      later_splits_in_clique =
          later_splits_in_clique && is_subset(run.trace[i].chosen.block, built.landmarks.clique);
    }
    record(suite, later_splits_in_clique,
           [&] { return "every later split should happen inside the heavy component"; });
    record(suite, std::abs(run.cost - 712.0 / eps) <= kTol / eps, [&] {
      return "sequential cost " + std::to_string(run.cost) + " != 712/eps at eps=" +
             std::to_string(eps);
    });

    const Partition alternative = make_alternative_partition(built.landmarks, spec.k);
    const auto certificate = is_feasible(alternative, instance.grouping(), instance.t());
    record(suite, certificate.has_value(),
           [&] { return "alternative partition must be feasible"; });
    const double alt_cost = partition_cost(*oracle, alternative);
    record(suite, std::abs(alt_cost - 20.0 * eps) <= kTol / eps, [&] {
      return "alternative cost " + std::to_string(alt_cost) + " != 20*eps at eps=" +
             std::to_string(eps);
    });
    return run.cost / alt_cost;
  };

  const double ratio_coarse = ratio_at(1e-2);
  record(suite, ratio_coarse >= 1e4, [&] {
    return "cost ratio " + std::to_string(ratio_coarse) + " below 1e4 at eps=1e-2";
  });
  const double ratio_fine = ratio_at(1e-3);
  record(suite, ratio_fine >= 50.0 * ratio_coarse, [&] {
    return "shrinking eps tenfold should scale the ratio by at least 50x (got " +
           std::to_string(ratio_fine / ratio_coarse) + "x)";
  });

  // at k=2 sequential splitting is optimal: the free component split
  {
    CounterexampleSpec spec;
    const auto built = make_counterexample(spec);
    const auto oracle = built.instance.make_oracle();
    const ClusteringRun two =
        actionable_greedy_splitting(*oracle, built.instance.grouping(), 0, spec.t, 2);
    record(suite, two.cost == 0.0, [&] { return "k=2 split of the counterexample should be free"; });
    const ClusteringRun reference =
        optimal_two_clustering(*oracle, built.instance.grouping(), spec.t);
    record(suite, std::abs(two.cost - reference.cost) <= kTol,
           [&] { return "k=2 sequential run should match the exact two-way optimum"; });
  }
  return suite;
}

SuiteResult parallel_split_bound(const Options& options) {
  SuiteResult suite{"parallel-split-bound"};
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(options.seeds); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(
                                           std::min(options.n_max, 9) - 3));
    const double t = t_cycle(seed, {0.4, 0.5, 0.51});
    const Instance instance = battery_instance(seed, n, 1, t, density_cycle(seed));
    const auto oracle = instance.make_oracle();
    for (int k = 2; k <= std::min(3, options.k_max); ++k) {
      if (k > max_k(instance.grouping(), t)) continue;
      ClusteringRun run;
      try {
        run = parallel_split(*oracle, instance.grouping(), t, k);
      } catch (const InfeasibleError&) {
        continue;
      }
      if (run.degraded || run.partition.block_count() != k) continue;  // bound binds at full k

      const auto reference = brute_force_best_partition(*oracle, k, instance.grouping(), t);
      const auto check = approximation_ratio_check(run.cost, reference.cost, k);
      record(suite, check.holds, [&] {
        return "parallel split k=" + std::to_string(k) + " cost " + std::to_string(run.cost) +
               " exceeds 2(1-1/k) * OPT " + std::to_string(reference.cost) + "; " +
               replay_blob(seed, instance);
      });

      // the inequality chain behind the bound, on this very run
      ElementSet united;
      double picked_sum = 0.0;
      for (int i = 0; i + 1 < k; ++i) {
        united = set_union(united, run.partition.block(i));
        picked_sum += (*oracle)(run.partition.block(i));
      }
      const double united_value = (*oracle)(united);
      const double residual_value = (*oracle)(run.partition.block(k - 1));
      record(suite, std::abs(united_value - residual_value) <= kTol, [&] {
        return "symmetry equality failed on the parallel run; " + replay_blob(seed, instance);
      });
      record(suite, united_value <= picked_sum + kTol, [&] {
        return "submodular union bound failed on the parallel run; " + replay_blob(seed, instance);
      });
      std::vector<double> reference_values;
      for (const auto& block : reference.partition.blocks()) {
        reference_values.push_back((*oracle)(block));
      }
      std::sort(reference_values.begin(), reference_values.end());
      double cheapest_sum = 0.0;
      for (int i = 0; i + 1 < k; ++i) cheapest_sum += reference_values[static_cast<std::size_t>(i)];
      record(suite, picked_sum <= cheapest_sum + kTol, [&] {
        return "selected splits cost more than the cheapest optimal blocks; " +
               replay_blob(seed, instance);
      });
      const double total = std::accumulate(reference_values.begin(), reference_values.end(), 0.0);
      record(suite, reference_values.back() >= total / static_cast<double>(k) - kTol, [&] {
        return "max >= mean failed on the optimal blocks; " + replay_blob(seed, instance);
      });
    }
  }
  return suite;
}

SuiteResult minimal_solution_disjointness(const Options& options) {
  SuiteResult suite{"minimal-solutions"};
  const int seed_count = std::max(options.seeds, 50);
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(seed_count); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(options.n_max - 3));
    const int m = 1 + static_cast<int>(seed % 3);
    const double t = t_cycle(seed, {0.3, 0.5, 0.51, 0.75});
    const Instance instance = battery_instance(seed, n, std::min(m, n), t, density_cycle(seed));
    const auto oracle = instance.make_oracle();
    const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), t);

    std::vector<ElementSet> solutions;
    try {
      solutions = minimal_optimal_solutions(*oracle, family);
    } catch (const InfeasibleError&) {
      record(suite, !family.has_nonempty_proper_member(), [&] {
        return "solver claimed infeasible on a usable family; " + replay_blob(seed, instance);
      });
      continue;
    } catch (const std::logic_error& err) {
      record(suite, false, [&] {
        return std::string("disjointness assertion tripped: ") + err.what() + "; " +
               replay_blob(seed, instance);
      });
      continue;
    }

    const auto reference = minimal_optima_by_masks(*oracle, family);
    record(suite, solutions == reference, [&] {
      return "minimal solutions differ from the mask-enumeration reference; " +
             replay_blob(seed, instance);
    });

    const double optimum = brute_force_min(*oracle, &family).value;
    for (const auto& solution : solutions) {
      record(suite, std::abs((*oracle)(solution) - optimum) <= kTol, [&] {
        return "a minimal solution misses the optimal value; " + replay_blob(seed, instance);
      });
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      for (std::size_t j = i + 1; j < solutions.size(); ++j) {
        disjoint = disjoint && sets_disjoint(solutions[i], solutions[j]);
      }
    }
    record(suite, disjoint,
           [&] { return "minimal solutions overlap; " + replay_blob(seed, instance); });
  }

  // fixed instance: scaled two-component construction; both components reach
  // cost zero inside the cap, so exactly the two of them come back
  {
    CounterexampleSpec spec;
    spec.total_vertices = 12;
    spec.t = 0.5;
    spec.k = 4;
    const auto built = make_counterexample(spec);
    const auto oracle = built.instance.make_oracle();
    const GroupCapFamily family = GroupCapFamily::global(built.instance.grouping(), spec.t);
    const auto solutions = minimal_optimal_solutions(*oracle, family);
    const std::vector<ElementSet> expected{built.landmarks.clique, built.landmarks.tree};
    record(suite, solutions == expected, [&] {
      return "scaled two-component instance should yield exactly the two components";
    });
  }
  return suite;
}

SuiteResult multigroup_reduction(const Options& options) {
  SuiteResult suite{"multigroup-reduction"};
  const int seed_count = std::max(options.seeds, 50);
  for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(seed_count); ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(
                                           std::min(options.n_max, 9) - 3));
    const int m = 2 + static_cast<int>(seed % 2);
    if (m > n) continue;
    const double t = t_cycle(seed, {0.4, 0.51, 0.6});
    const Instance instance = battery_instance(seed, n, m, t, density_cycle(seed));
    const auto oracle = instance.make_oracle();

    bool any_group = false;
    double best_over_groups = kInfiniteCost;
    for (int j = 0; j < instance.grouping().group_count(); ++j) {
      try {
        const MinimizationResult r =
            constrained_min(*oracle, GroupCapFamily::for_group(instance.grouping(), j, t));
        best_over_groups = std::min(best_over_groups, 2.0 * r.value);
        any_group = true;
      } catch (const InfeasibleError&) {
      }
    }

    try {
      const auto reference = brute_force_best_partition(*oracle, 2, instance.grouping(), t);
      record(suite, any_group && std::abs(best_over_groups - reference.cost) <= kTol, [&] {
        return "per-group reduction " + std::to_string(best_over_groups) +
               " != multi-group brute force " + std::to_string(reference.cost) + "; " +
               replay_blob(seed, instance);
      });
      const ClusteringRun multi =
          actionable_greedy_splitting_any_group(*oracle, instance.grouping(), t, 2);
      record(suite, std::abs(multi.cost - reference.cost) <= kTol, [&] {
        return "any-group split at k=2 misses the brute-force optimum; " +
               replay_blob(seed, instance);
      });
    } catch (const InfeasibleError&) {
      record(suite, !any_group, [&] {
        return "brute force infeasible but some group admitted a split; " +
               replay_blob(seed, instance);
      });
    }
  }
  return suite;
}

SuiteResult family_properties(const Options& options) {
  SuiteResult suite{"family-properties"};

  // downward closure, exhaustively
  const int closure_n = std::min(options.n_max, 10);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % static_cast<std::uint64_t>(closure_n - 3));
    const int m = 1 + static_cast<int>(seed % 3);
    const double t = t_cycle(seed, {0.0, 0.3, 0.5, 0.51, 0.75, 1.0});
    const Instance instance = battery_instance(seed, n, std::min(m, n), t, 1.0);
    const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), t);
    bool closed = true;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!family.member(set_from_mask(mask, n))) continue;
      // every subset of a member must be a member
      for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
        if (!family.member(set_from_mask(sub, n))) {
          closed = false;
          break;
        }
        if (sub == 0) break;
      }
      if (!closed) break;
    }
    record(suite, closed, [&] {
      return "family is not downward closed; " + replay_blob(seed, instance);
    });
  }

  // integer cap form vs the real-valued fraction form, on a hundredths grid
  for (long long size = 1; size <= 30; ++size) {
    for (int hundredths = 0; hundredths <= 100; ++hundredths) {
      const double t = static_cast<double>(hundredths) / 100.0;
      const long long cap = size - ceil_fraction(t, size);
      bool agree = true;
      for (long long c = 0; c <= size; ++c) {
        const bool real_form = 100 * c <= (100 - hundredths) * size;  // c <= (1-t)|g|, exactly
        const bool integer_form = c <= cap;
        agree = agree && real_form == integer_form;
      }
      record(suite, agree, [&] {
        return "cap forms disagree at |g|=" + std::to_string(size) +
               ", t=" + std::to_string(t);
      });
    }
  }
  return suite;
}

SuiteResult oracle_contracts(const Options& options) {
  SuiteResult suite{"oracle-contracts"};
  const int samples = 10000;

  auto scan = [&](const SubmodularOracle& oracle, double tolerance, const std::string& label) {
    const auto report = check_symmetric_submodular(oracle, samples, 99);
    record(suite, report.symmetry_exhaustive || oracle.ground_size() > 12,
           [&] { return label + ": symmetry scan should be exhaustive for N <= 12"; });
    record(suite, report.passes(tolerance), [&] {
      std::ostringstream msg;
      msg << label << ": contract violation (symmetry " << report.max_symmetry_violation
          << ", submodularity " << report.max_submodularity_violation << ", empty "
          << report.value_at_empty << ", full " << report.value_at_full << ")";
      return msg.str();
    });
  };

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance instance = battery_instance(seed, 12, 1, 0.5, density_cycle(seed));
    scan(CutOracle(instance.graph()), kCostTolerance, "cut seed " + std::to_string(seed));
  }
  {
    CounterexampleSpec spec;
    spec.total_vertices = 12;
    spec.t = 0.5;
    const auto built = make_counterexample(spec);
    scan(CutOracle(built.instance.graph()), kCostTolerance, "cut two-component");
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    scan(GaussianMiOracle(random_spd_model(12, seed)), kMiTolerance,
         "mutual-information seed " + std::to_string(seed));
  }
  {
    // equicorrelated model, a hand-checkable case
    Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(3, 3, 0.5);
    cov.diagonal().setOnes();
    scan(GaussianMiOracle(GaussianModel(cov)), kMiTolerance, "mutual-information 3x3");
  }

  // a deliberately broken function must be flagged
  {
    const LambdaOracle broken(6, [](const ElementSet& s) { return static_cast<double>(s.size()); });
    const auto report = check_symmetric_submodular(broken, 100, 7);
    record(suite, report.max_symmetry_violation > 1.0,
           [&] { return "cardinality function should fail the symmetry scan"; });
  }
  (void)options;
  return suite;
}

SuiteResult determinism_and_io(const Options& options) {
  SuiteResult suite{"determinism-io"};
  const std::vector<std::string> algorithms{"two-opt", "gsa", "agsa", "agsa-multi", "parallel",
                                            "brute"};
  for (std::uint64_t seed = 1; seed <= std::min<std::uint64_t>(3, options.seeds); ++seed) {
    const Instance instance = battery_instance(seed, 8, 2, 0.5, 0.6);

    // identical seeds reproduce the instance bit for bit
    const Instance again = battery_instance(seed, 8, 2, 0.5, 0.6);
    record(suite, instance == again,
           [&] { return "same-seed generation is not deterministic; seed=" + std::to_string(seed); });

    // lossless round trip through the file format
    const Instance reloaded = parse_instance(instance_to_json(instance));
    record(suite, reloaded == instance, [&] {
      return "instance round-trip changed the instance; " + replay_blob(seed, instance);
    });
    record(suite, instance_to_json(reloaded).dump() == instance_to_json(instance).dump(), [&] {
      return "instance round-trip changed the serialized bytes; " + replay_blob(seed, instance);
    });

    for (const auto& algorithm : algorithms) {
      const std::optional<std::string> group =
          algorithm == "agsa" ? std::make_optional(instance.grouping().name(0)) : std::nullopt;
      const ClusteringRun first = run_algorithm(instance, algorithm, 3, group);
      const ClusteringRun second = run_algorithm(instance, algorithm, 3, group);
      record(suite, report_string(first) == report_string(second), [&] {
        return algorithm + ": two identical runs produced different reports; " +
               replay_blob(seed, instance);
      });
      const auto verdict = verify_report(instance, run_to_json(first));
      record(suite, verdict.ok, [&] {
        std::string diff = verdict.diffs.empty() ? "" : verdict.diffs.front();
        return algorithm + ": verification failed on its own report (" + diff + "); " +
               replay_blob(seed, instance);
      });
    }
  }

  // counterexample report carries the full-ground certificate
  {
    CounterexampleSpec spec;
    const auto built = make_counterexample(spec);
    const auto oracle = built.instance.make_oracle();
    const ClusteringRun run =
        actionable_greedy_splitting(*oracle, built.instance.grouping(), 0, spec.t, spec.k);
    const nlohmann::json doc = run_to_json(run);
    record(suite, doc["certificate"]["group"] == "all" &&
                      std::abs(doc["certificate"]["fraction"].get<double>() - 0.51) <= 1e-12,
           [&] { return "counterexample report should certify group 'all' at fraction 0.51"; });
    const auto verdict = verify_report(built.instance, doc);
    record(suite, verdict.ok,
           [&] { return "counterexample report failed its own verification"; });
  }
  return suite;
}

std::vector<SuiteResult> run_all(const Options& options) {
  options.validate();
  return {
      k2_optimality(options),
      gsa_bound(options),
      queyranne_equivalence(options),
      queyranne_budget(options),
      counterexample_reproduction(options),
      parallel_split_bound(options),
      minimal_solution_disjointness(options),
      multigroup_reduction(options),
      family_properties(options),
      oracle_contracts(options),
      determinism_and_io(options),
  };
}

}  // namespace subcluster::selftest
