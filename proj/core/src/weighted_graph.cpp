#include "subcluster/weighted_graph.hpp"

#include <numeric>
#include <utility>

namespace subcluster {

WeightedGraph::WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges)
    : n_(vertex_count) {
  if (n_ < 1) throw InputError("graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") with n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
    if (!(e.w >= 0.0)) throw InputError("negative or NaN edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(e);
    }
  }
}

double WeightedGraph::total_weight() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double acc, const WeightedEdge& e) { return acc + e.w; });
}

std::vector<ElementSet> WeightedGraph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges_) {
    if (e.w <= 0.0) continue;  // zero-weight edges do not connect
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<ElementSet> comps;
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (int v = 0; v < n_; ++v) {
    const int root = find(v);
    if (index[static_cast<std::size_t>(root)] < 0) {
      index[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])].push_back(v);
  }
  return comps;
}

double cut_value(const WeightedGraph& graph, const ElementSet& s) {
  const int n = graph.vertex_count();
  if (!is_sorted_unique(s)) throw InputError("element set must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= n)) {
    throw InputError("element id out of range for cut evaluation");
  }
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (ElementId x : s) in_s[static_cast<std::size_t>(x)] = 1;
  double total = 0.0;
  for (const auto& e : graph.edges()) {
    if (in_s[static_cast<std::size_t>(e.u)] != in_s[static_cast<std::size_t>(e.v)]) {
      total += e.w;
    }
  }
  return total;
}

}  // namespace subcluster
