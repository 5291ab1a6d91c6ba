#pragma once

#include <vector>

#include "subcluster/common.hpp"

namespace subcluster {

struct WeightedEdge {
  ElementId u = 0;
  ElementId v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected graph with nonnegative edge weights. Construction canonicalizes:
/// endpoints ordered u < v, edges sorted, parallel edges merged by weight sum.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  double total_weight() const;

  /// Connected components under edges of strictly positive weight,
  /// each sorted, listed by smallest member.
  std::vector<ElementSet> components() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
};

/// Total weight of edges with exactly one endpoint in s. Pure; never counts
/// as an oracle call (counting lives in CutOracle).
double cut_value(const WeightedGraph& graph, const ElementSet& s);

}  // namespace subcluster
