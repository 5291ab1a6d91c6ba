#include <random>

#include "doctest.h"
#include "subcluster/grouping.hpp"
#include "subcluster/instance.hpp"
#include "subcluster/oracle.hpp"
#include "subcluster/partition.hpp"

using namespace subcluster;

namespace {

WeightedGraph unit_path(int n) {
  std::vector<WeightedEdge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return WeightedGraph(n, std::move(edges));
}

// 3x3 determinant by cofactor expansion, independent of the library's
// Cholesky route
double det3(const Eigen::MatrixXd& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("ceil_fraction matches exact rational arithmetic") {
  CHECK(ceil_fraction(0.51, 100) == 51);
  CHECK(ceil_fraction(0.07, 100) == 7);  // the classic t*q-just-above-integer trap
  CHECK(ceil_fraction(0.513, 100) == 52);
  CHECK(ceil_fraction(0.0, 17) == 0);
  CHECK(ceil_fraction(1.0, 5) == 5);
  CHECK(ceil_fraction(0.5, 3) == 2);
}

TEST_CASE("cut_value on a unit path") {
  const WeightedGraph graph = unit_path(3);
  CHECK(cut_value(graph, {1}) == 2.0);  // both incident edges cross
  CHECK(cut_value(graph, {}) == 0.0);
  CHECK(cut_value(graph, {0, 1, 2}) == 0.0);
  CHECK(cut_value(graph, {0}) == 1.0);
  CHECK_THROWS_AS(cut_value(graph, {7}), InputError);
}

TEST_CASE("graph canonicalization merges parallel edges and rejects bad input") {
  const WeightedGraph graph(3, {{1, 0, 2.0}, {0, 1, 3.0}, {1, 2, 1.0}});
  REQUIRE(graph.edges().size() == 2);
  CHECK(graph.edges()[0].u == 0);
  CHECK(graph.edges()[0].v == 1);
  CHECK(graph.edges()[0].w == 5.0);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 0, 1.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, -1.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 5, 1.0}}), InputError);
}

TEST_CASE("components ignore zero-weight edges") {
  const WeightedGraph graph(4, {{0, 1, 1.0}, {1, 2, 0.0}, {2, 3, 2.0}});
  const auto comps = graph.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == ElementSet{0, 1});
  CHECK(comps[1] == ElementSet{2, 3});
}

TEST_CASE("gaussian mutual information") {
  SUBCASE("independent variables share nothing") {
    const GaussianModel model(Eigen::MatrixXd::Identity(4, 4));
    CHECK(gaussian_mi_value(model, {0, 2}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gaussian_mi_value(model, {}) == 0.0);
  }
  SUBCASE("equicorrelated 3x3 model matches cofactor expansion") {
    Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(3, 3, 0.5);
    cov.diagonal().setOnes();
    const GaussianModel model(cov);
    const double expected =
        0.5 * (std::log(cov(0, 0)) +
               std::log(cov(1, 1) * cov(2, 2) - cov(1, 2) * cov(2, 1)) - std::log(det3(cov)));
    CHECK(gaussian_mi_value(model, {0}) == doctest::Approx(expected).epsilon(1e-10));
  }
  SUBCASE("non-positive-definite model is rejected") {
    Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(2, 2, 1.0);
    CHECK_THROWS_AS(GaussianModel{cov}, InputError);
  }
}

TEST_CASE("oracle counting") {
  const CutOracle oracle(unit_path(3));
  CHECK(oracle.call_count() == 0);
  (void)oracle({0});
  (void)oracle({0, 1});
  CHECK(oracle.call_count() == 2);
  oracle.reset_call_count();
  CHECK(oracle.call_count() == 0);
}

TEST_CASE("oracle evaluation is shareable across threads with an exact counter") {
  const CutOracle oracle(unit_path(8));
  constexpr int kThreads = 4;
  constexpr int kCallsPerThread = 2000;
  std::vector<std::thread> workers;
  workers.reserve(kThreads);
  for (int w = 0; w < kThreads; ++w) {
    workers.emplace_back([&oracle, w] {
      const ElementSet probe{w, w + 1};
      for (int i = 0; i < kCallsPerThread; ++i) (void)oracle(probe);
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(oracle.call_count() == kThreads * kCallsPerThread);
}

TEST_CASE("contract expands supernodes against the base oracle") {
  const CutOracle base(unit_path(3));

  SUBCASE("identity supernodes reproduce base values exactly") {
    const auto merged = contract(base, {{0}, {1}, {2}});
    CHECK(merged({1}) == base({1}));
    CHECK(merged({0, 2}) == base({0, 2}));
  }
  SUBCASE("the whole ground set is one free supernode") {
    const auto merged = contract(base, {{0, 1, 2}});
    CHECK(merged({0}) == 0.0);
  }
  SUBCASE("merging the path endpoints") {
    const auto merged = contract(base, {{0, 2}, {1}});
    CHECK(merged({0}) == base({0, 2}));
    CHECK(merged({0}) == 2.0);
  }
  SUBCASE("counter is shared") {
    const auto merged = contract(base, {{0, 2}, {1}});
    const auto before = base.call_count();
    (void)merged({0});
    CHECK(base.call_count() == before + 1);
    CHECK(merged.call_count() == base.call_count());
  }
  SUBCASE("supernodes must partition the ground set") {
    CHECK_THROWS_AS(contract(base, {{0}, {1}}), InputError);
    CHECK_THROWS_AS(contract(base, {{0, 1}, {1, 2}}), InputError);
  }
}

TEST_CASE("contract then expand reproduces base values on random subsets") {
  std::mt19937_64 gen(3);
  RandomInstanceParams params;
  params.seed = 11;
  params.n = 9;
  const Instance instance = random_instance(params);
  const CutOracle base(instance.graph());
  const std::vector<ElementSet> supernodes{{0, 4}, {1}, {2, 7, 8}, {3, 5}, {6}};
  const auto merged = contract(base, supernodes);
  for (int trial = 0; trial < 50; ++trial) {
    ElementSet s;
    ElementSet expanded;
    for (int i = 0; i < merged.ground_size(); ++i) {
      if (gen() & 1u) {
        s.push_back(i);
        expanded = set_union(expanded, supernodes[static_cast<std::size_t>(i)]);
      }
    }
    CHECK(merged(s) == base(expanded));  // exact, same evaluation path
  }
}

TEST_CASE("oracle contract checker") {
  SUBCASE("cut functions pass clean") {
    const CutOracle oracle(unit_path(6));
    const auto report = check_symmetric_submodular(oracle, 500, 42);
    CHECK(report.symmetry_exhaustive);
    CHECK(report.passes(kCostTolerance));
  }
  SUBCASE("cardinality is not symmetric") {
    const LambdaOracle broken(5, [](const ElementSet& s) { return double(s.size()); });
    const auto report = check_symmetric_submodular(broken, 200, 42);
    CHECK(report.max_symmetry_violation > 0.5);
    CHECK_FALSE(report.passes(kCostTolerance));
  }
}

TEST_CASE("family membership") {
  SUBCASE("empty set belongs whenever some cap is nonnegative") {
    const Grouping grouping = Grouping::single_group(4);
    const GroupCapFamily family = GroupCapFamily::global(grouping, 0.75);
    CHECK(family.member({}));
  }
  SUBCASE("cap 49 of 100 admits the 49-element side") {
    const Grouping grouping = Grouping::single_group(100);
    const GroupCapFamily family = GroupCapFamily::global(grouping, 0.51);
    CHECK(family.caps()[0] == 49);
    CHECK(family.member(make_range_set(49)));
    CHECK_FALSE(family.member(make_range_set(50)));
  }
  SUBCASE("cap 1 of 4 rejects pairs") {
    const Grouping grouping = Grouping::single_group(4);
    const GroupCapFamily family = GroupCapFamily::global(grouping, 0.75);
    CHECK(family.caps()[0] == 1);
    CHECK(family.member({2}));
    CHECK_FALSE(family.member({1, 3}));
  }
  SUBCASE("negative caps empty the family") {
    const GroupCapFamily family(3, {{0, 1, 2}}, {-1});
    CHECK_FALSE(family.member({}));
    CHECK_FALSE(family.member({0}));
    CHECK_FALSE(family.has_nonempty_proper_member());
  }
}

TEST_CASE("localized family") {
  const Grouping grouping = Grouping::single_group(12);

  SUBCASE("over the full ground set it equals the global family") {
    const GroupCapFamily local = localized_family(make_range_set(12), grouping, 0, 0.5);
    const GroupCapFamily global = GroupCapFamily::global(grouping, 0.5);
    CHECK(local.caps() == global.caps());
    CHECK(local.groups() == global.groups());
  }
  SUBCASE("a block at exactly the required size freezes") {
    // block of 6 inside the single 12-element group at t = 0.5: cap 0
    const ElementSet block{6, 7, 8, 9, 10, 11};
    const GroupCapFamily local = localized_family(block, grouping, 0, 0.5);
    CHECK(local.caps()[0] == 0);
    CHECK_FALSE(local.has_nonempty_proper_member());
  }
  SUBCASE("t = 0 admits everything") {
    const ElementSet block{1, 3, 5, 7};
    const GroupCapFamily local = localized_family(block, grouping, 0, 0.0);
    CHECK(local.admits_every_subset());
  }
}

TEST_CASE("partition validation names the offending element") {
  CHECK_NOTHROW(Partition(3, {{0, 2}, {1}}));
  CHECK_THROWS_WITH_AS(Partition(3, {{0, 1}, {1, 2}}),
                       doctest::Contains("element 1"), InputError);
  CHECK_THROWS_WITH_AS(Partition(3, {{0, 1}}), doctest::Contains("element 2"), InputError);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InputError);
}

TEST_CASE("grouping validation") {
  CHECK_THROWS_WITH_AS(Grouping(4, {"a", "b"}, {{0, 1, 2}, {2, 3}}),
                       doctest::Contains("element 2"), InputError);
  CHECK_THROWS_AS(Grouping(4, {"a"}, {{0, 1, 2}}), InputError);  // 3 uncovered
  CHECK_THROWS_AS(Grouping(4, {"a", "b"}, {{0, 1, 2, 3}, {}}), InputError);
}

TEST_CASE("feasibility certificates") {
  SUBCASE("the trivial partition is always feasible") {
    const Grouping grouping(4, {"a", "b"}, {{0, 1}, {2, 3}});
    const auto cert = is_feasible(Partition(4, {make_range_set(4)}), grouping, 1.0);
    REQUIRE(cert.has_value());
    CHECK(cert->group_index == 0);
    CHECK(cert->block_index == 0);
    CHECK(cert->fraction == 1.0);
  }
  SUBCASE("singletons cannot hold two of three") {
    const Grouping grouping = Grouping::single_group(3);
    const auto cert = is_feasible(Partition(3, {{0}, {1}, {2}}), grouping, 0.5);
    CHECK_FALSE(cert.has_value());
  }
  SUBCASE("ties break on the smallest group then block index") {
    const Grouping grouping(4, {"a", "b"}, {{0, 1}, {2, 3}});
    const auto cert = is_feasible(Partition(4, {{0, 1}, {2, 3}}), grouping, 0.5);
    REQUIRE(cert.has_value());
    CHECK(cert->group_index == 0);
    CHECK(cert->block_index == 0);
    CHECK(cert->group_name == "a");
  }
}

TEST_CASE("max_k") {
  CHECK(max_k(Grouping::single_group(100), 0.51) == 50);
  const Grouping two(10, {"a", "b"}, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}});
  CHECK(max_k(two, 1.0) == 7);  // 10 - 4 + 1
  CHECK(max_k(Grouping::single_group(10), 0.0) == 10);  // clamped
}

TEST_CASE("partition cost is order-invariant") {
  RandomInstanceParams params;
  params.seed = 5;
  params.n = 8;
  const Instance instance = random_instance(params);
  const CutOracle oracle(instance.graph());
  const Partition a(8, {{0, 3}, {1, 2, 7}, {4, 5, 6}});
  const Partition b(8, {{4, 5, 6}, {0, 3}, {1, 2, 7}});
  CHECK(partition_cost(oracle, a) == doctest::Approx(partition_cost(oracle, b)).epsilon(1e-12));

  const Partition trivial(8, {make_range_set(8)});
  CHECK(partition_cost(oracle, trivial) == 0.0);
}

TEST_CASE("splitting a graph at a component boundary is free") {
  const WeightedGraph graph(5, {{0, 1, 2.0}, {1, 2, 1.0}, {3, 4, 5.0}});
  const CutOracle oracle(graph);
  CHECK(partition_cost(oracle, Partition(5, {{0, 1, 2}, {3, 4}})) == 0.0);
}
