#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subcluster/gaussian_model.hpp"
#include "subcluster/grouping.hpp"
#include "subcluster/oracle.hpp"
#include "subcluster/partition.hpp"
#include "subcluster/weighted_graph.hpp"

namespace subcluster {

/// Dense ground set 0..N-1, optionally labelled.
class GroundSet {
 public:
  explicit GroundSet(int size, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_ = 1;
  std::vector<std::string> labels_;
};

/// A complete clustering problem: ground set, cost structure (graph cut, or
/// mutual information when a covariance is present), grouping, and threshold.
class Instance {
 public:
  Instance(GroundSet ground, WeightedGraph graph, std::optional<GaussianModel> covariance,
           Grouping grouping, double t);

  int size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  const WeightedGraph& graph() const { return graph_; }
  const std::optional<GaussianModel>& covariance() const { return covariance_; }
  const Grouping& grouping() const { return grouping_; }
  double t() const { return t_; }

  bool uses_mutual_information() const { return covariance_.has_value(); }
  std::unique_ptr<SubmodularOracle> make_oracle() const;
  double cost_tolerance() const { return uses_mutual_information() ? kMiTolerance : kCostTolerance; }

  Instance with_threshold(double t) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  GroundSet ground_;
  WeightedGraph graph_;
  std::optional<GaussianModel> covariance_;
  Grouping grouping_;
  double t_ = 0.0;
};

/// Parameters of the hard instance for sequential constrained splitting: a
/// complete graph on floor((1-t)|V|) vertices with edge weight 1/eps,
/// disjoint from a path on ceil(t|V|) vertices with edge weight eps, one
/// group covering everything.
struct CounterexampleSpec {
  int total_vertices = 100;
  double t = 0.51;
  double epsilon = 0.01;
  int k = 10;
  std::string tree_shape = "path";

  void validate() const;
  int clique_size() const;
  int tree_size() const;
};

struct CounterexampleLandmarks {
  ElementSet clique;       // the heavy complete component
  ElementSet tree;         // the light path component
  ElementId tree_end_a = -1;  // degree-1 path endpoints
  ElementId tree_end_b = -1;
};

struct CounterexampleInstance {
  Instance instance;
  CounterexampleLandmarks landmarks;
};

CounterexampleInstance make_counterexample(const CounterexampleSpec& spec);

/// The cheap feasible alternative: club the clique with both path endpoints
/// (just large enough to be actionable), then cut the remaining path into
/// k-1 near-equal contiguous segments, longest first.
Partition make_alternative_partition(const CounterexampleLandmarks& landmarks, int k);

struct RandomInstanceParams {
  std::uint64_t seed = 1;
  int n = 8;
  double density = 0.5;     // per-pair edge probability, (0, 1]
  int weight_min = 1;
  int weight_max = 9;
  int groups = 1;
  double t = 0.5;
};

/// Seeded deterministic generator: same params, same instance, bit for bit.
Instance random_instance(const RandomInstanceParams& params);

}  // namespace subcluster
