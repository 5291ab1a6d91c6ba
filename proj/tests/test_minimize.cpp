#include "doctest.h"
#include "subcluster/instance.hpp"
#include "subcluster/minimize.hpp"

using namespace subcluster;

namespace {

WeightedGraph unit_path(int n) {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return WeightedGraph(n, std::move(edges));
}

Instance seeded(std::uint64_t seed, int n, int groups = 1, double t = 0.5) {
  RandomInstanceParams params;
  params.seed = seed;
  params.n = n;
  params.groups = groups;
  params.t = t;
  return random_instance(params);
}

}  // namespace

TEST_CASE("pendant-pair minimization on a unit path") {
  const CutOracle oracle(unit_path(3));
  PendantTrace trace;
  const auto result = queyranne_min(oracle, &trace);
  CHECK(result.value == 1.0);  // leaf cut
  CHECK(result.minimizer == ElementSet{0});  // lexicographic tie-break
  CHECK(trace.rounds.size() == 2);
  CHECK(trace.rounds[0].ordering.size() == 3);
  CHECK(trace.rounds[1].ordering.size() == 2);
  double best = kInfiniteCost;
  for (const auto& round : trace.rounds) best = std::min(best, round.value);
  CHECK(best == result.value);
}

TEST_CASE("pendant-pair minimization finds free component cuts") {
  const WeightedGraph graph(4, {{0, 1, 3.0}, {2, 3, 4.0}});
  const CutOracle oracle(graph);
  const auto result = queyranne_min(oracle);
  CHECK(result.value == 0.0);
  CHECK(result.minimizer == ElementSet{0, 1});
}

TEST_CASE("pendant-pair minimization rejects singleton ground sets") {
  const CutOracle oracle(WeightedGraph(1, {}));
  CHECK_THROWS_AS(queyranne_min(oracle), InputError);
}

TEST_CASE("pendant-pair value matches brute force on seeded instances") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance instance = seeded(seed, 8);
    const CutOracle oracle(instance.graph());
    const auto fast = queyranne_min(oracle);
    const auto reference = brute_force_min(oracle);
    CAPTURE(seed);
    CHECK(fast.value == doctest::Approx(reference.value).epsilon(1e-12));
  }
}

TEST_CASE("pendant-pair call budget at a mid size") {
  const Instance instance = seeded(77, 16);
  const CutOracle oracle(instance.graph());
  const auto result = queyranne_min(oracle);
  CHECK(result.oracle_calls <= 5ull * 16 * 16 * 16);
  CHECK(result.oracle_calls == oracle.call_count());
}

TEST_CASE("constrained minimization") {
  SUBCASE("a vacuous family reduces to the unconstrained optimum") {
    const Instance instance = seeded(9, 8);
    const CutOracle oracle(instance.graph());
    const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), 0.0);
    const auto constrained = constrained_min(oracle, family);
    const auto unconstrained = queyranne_min(oracle);
    CHECK(constrained.value == unconstrained.value);
    CHECK(constrained.minimizer == unconstrained.minimizer);
  }
  SUBCASE("a tight cap forces the cheapest singleton") {
    const CutOracle oracle(unit_path(4));
    const GroupCapFamily family = GroupCapFamily::global(Grouping::single_group(4), 0.75);
    const auto result = constrained_min(oracle, family);
    CHECK(result.value == 1.0);
    CHECK(result.minimizer == ElementSet{0});
  }
  SUBCASE("the two-component instance resolves through its components") {
    CounterexampleSpec spec;
    spec.total_vertices = 12;
    spec.t = 0.5;
    const auto built = make_counterexample(spec);
    const CutOracle oracle(built.instance.graph());
    const GroupCapFamily family = GroupCapFamily::global(built.instance.grouping(), 0.5);
    const auto result = constrained_min(oracle, family);
    CHECK(result.value == 0.0);
    CHECK(result.minimizer == built.landmarks.clique);
  }
  SUBCASE("an empty family is infeasible") {
    const CutOracle oracle(unit_path(4));
    const GroupCapFamily family = GroupCapFamily::global(Grouping::single_group(4), 1.0);
    CHECK_THROWS_AS(constrained_min(oracle, family), InfeasibleError);
  }
  SUBCASE("agreement with brute force under random caps") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const int m = 1 + static_cast<int>(seed % 3);
      const double t = 0.1 * static_cast<double>(seed % 10);
      const Instance instance = seeded(seed, 8, m, t);
      const CutOracle oracle(instance.graph());
      const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), t);
      CAPTURE(seed);
      if (!family.has_nonempty_proper_member()) continue;
      const auto fast = constrained_min(oracle, family);
      const auto reference = brute_force_min(oracle, &family);
      CHECK(fast.value == doctest::Approx(reference.value).epsilon(1e-12));
      CHECK(fast.minimizer == reference.minimizer);
      CHECK(family.member(fast.minimizer));
    }
  }
  SUBCASE("an alternative implementation can fill the slot") {
    const Instance instance = seeded(4, 7, 1, 0.6);
    const CutOracle oracle(instance.graph());
    const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), 0.6);
    const ConstrainedMinImpl slot = [](const SubmodularOracle& f, const GroupCapFamily& fam) {
      return brute_force_min(f, &fam);
    };
    const auto via_slot = constrained_min(oracle, family, slot);
    const auto direct = constrained_min(oracle, family);
    CHECK(via_slot.value == direct.value);
    CHECK(via_slot.minimizer == direct.minimizer);
  }
}

TEST_CASE("minimal optimal solutions") {
  SUBCASE("two free components inside the cap both come back") {
    const WeightedGraph graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    const CutOracle oracle(graph);
    const GroupCapFamily family = GroupCapFamily::global(Grouping::single_group(4), 0.5);
    const auto solutions = minimal_optimal_solutions(oracle, family);
    CHECK(solutions == std::vector<ElementSet>{{0, 1}, {2, 3}});
  }
  SUBCASE("scaled two-component instance yields both components") {
    CounterexampleSpec spec;
    spec.total_vertices = 12;
    spec.t = 0.5;
    const auto built = make_counterexample(spec);
    const CutOracle oracle(built.instance.graph());
    const GroupCapFamily family = GroupCapFamily::global(built.instance.grouping(), 0.5);
    const auto solutions = minimal_optimal_solutions(oracle, family);
    REQUIRE(solutions.size() == 2);
    CHECK(solutions[0] == built.landmarks.clique);
    CHECK(solutions[1] == built.landmarks.tree);
  }
  SUBCASE("solutions are disjoint optima with no smaller achiever inside") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Instance instance = seeded(seed, 9, 2, 0.4);
      const CutOracle oracle(instance.graph());
      const GroupCapFamily family = GroupCapFamily::global(instance.grouping(), 0.4);
      const auto solutions = minimal_optimal_solutions(oracle, family);
      const double optimum = brute_force_min(oracle, &family).value;
      CAPTURE(seed);
      for (std::size_t i = 0; i < solutions.size(); ++i) {
        CHECK(oracle(solutions[i]) == doctest::Approx(optimum).epsilon(1e-12));
        for (std::size_t j = i + 1; j < solutions.size(); ++j) {
          CHECK(sets_disjoint(solutions[i], solutions[j]));
        }
        // removing any single element must lose optimality or membership
        const auto& s = solutions[i];
        if (s.size() == 1) continue;
        for (ElementId x : s) {
          ElementSet without = set_difference(s, {x});
          const bool still_optimal =
              family.member(without) && std::abs(oracle(without) - optimum) <= kCostTolerance;
          CHECK_FALSE(still_optimal);
        }
      }
    }
  }
}

TEST_CASE("brute-force minimizer guards") {
  const CutOracle big(WeightedGraph(25, {}));
  CHECK_THROWS_AS(brute_force_min(big), SizeGuardError);
  const CutOracle oracle(unit_path(3));
  const auto result = brute_force_min(oracle);
  CHECK(result.value == 1.0);
  CHECK(result.minimizer == ElementSet{0});
}

TEST_CASE("brute-force best partition") {
  SUBCASE("k = 1 returns the trivial free partition") {
    const Instance instance = seeded(3, 6);
    const CutOracle oracle(instance.graph());
    const auto best = brute_force_best_partition(oracle, 1, instance.grouping(), 0.3);
    CHECK(best.cost == 0.0);
    CHECK(best.partition.block_count() == 1);
  }
  SUBCASE("two components split for free") {
    const WeightedGraph graph(5, {{0, 1, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
    const CutOracle oracle(graph);
    const auto best = brute_force_best_partition(oracle, 2, Grouping::single_group(5), 0.4);
    CHECK(best.cost == 0.0);
    CHECK(best.partition.blocks() == std::vector<ElementSet>{{0, 1}, {2, 3, 4}});
  }
  SUBCASE("infeasible request throws") {
    const CutOracle oracle(unit_path(4));
    // one group of four at t = 1: every block would need all four elements
    CHECK_THROWS_AS(brute_force_best_partition(oracle, 2, Grouping::single_group(4), 1.0),
                    InfeasibleError);
  }
  SUBCASE("size guard") {
    const CutOracle oracle(WeightedGraph(13, {}));
    CHECK_THROWS_AS(brute_force_best_partition(oracle, 3, Grouping::single_group(13), 0.0),
                    SizeGuardError);
  }
}
