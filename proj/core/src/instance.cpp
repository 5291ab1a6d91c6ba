#include "subcluster/instance.hpp"

#include <random>

namespace subcluster {

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : n_(size), labels_(std::move(labels)) {
  if (n_ < 1) throw InputError("ground set must have at least one element");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_)) {
    throw InputError("labels must be empty or one per element");
  }
}

Instance::Instance(GroundSet ground, WeightedGraph graph, std::optional<GaussianModel> covariance,
                   Grouping grouping, double t)
    : ground_(std::move(ground)),
      graph_(std::move(graph)),
      covariance_(std::move(covariance)),
      grouping_(std::move(grouping)),
      t_(t) {
  if (graph_.vertex_count() != ground_.size()) {
    throw InputError("graph vertex count must equal the ground set size");
  }
  if (grouping_.ground_size() != ground_.size()) {
    throw InputError("grouping must cover the ground set");
  }
  if (covariance_ && covariance_->dimension() != ground_.size()) {
    throw InputError("covariance dimension must equal the ground set size");
  }
  if (!(t_ >= 0.0 && t_ <= 1.0)) throw InputError("threshold t must lie in [0,1]");
}

std::unique_ptr<SubmodularOracle> Instance::make_oracle() const {
  if (covariance_) return std::make_unique<GaussianMiOracle>(*covariance_);
  return std::make_unique<CutOracle>(graph_);
}

Instance Instance::with_threshold(double t) const {
  return Instance(ground_, graph_, covariance_, grouping_, t);
}

void CounterexampleSpec::validate() const {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("threshold t must lie in [0,1]");
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (tree_shape != "path") {
    throw InputError("unsupported tree shape '" + tree_shape + "'; only 'path' is available");
  }
  if (clique_size() < 2) {
    throw InputError("spec needs floor((1-t)|V|) >= 2 clique vertices");
  }
  if (tree_size() < 3) {
    throw InputError("spec needs ceil(t|V|) >= 3 path vertices");
  }
}

int CounterexampleSpec::tree_size() const {
  return static_cast<int>(ceil_fraction(t, total_vertices));
}

int CounterexampleSpec::clique_size() const { return total_vertices - tree_size(); }

CounterexampleInstance make_counterexample(const CounterexampleSpec& spec) {
  spec.validate();
  const int n1 = spec.clique_size();
  const int n2 = spec.tree_size();
  const int n = spec.total_vertices;
  const double heavy = 1.0 / spec.epsilon;

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * (n1 - 1) / 2 + n2 - 1);
  for (int u = 0; u < n1; ++u) {
    for (int v = u + 1; v < n1; ++v) edges.push_back({u, v, heavy});
  }
  for (int v = n1; v + 1 < n; ++v) edges.push_back({v, v + 1, spec.epsilon});

  CounterexampleLandmarks landmarks;
  for (int v = 0; v < n1; ++v) landmarks.clique.push_back(v);
  for (int v = n1; v < n; ++v) landmarks.tree.push_back(v);
  landmarks.tree_end_a = n1;
  landmarks.tree_end_b = n - 1;

  Instance instance(GroundSet(n), WeightedGraph(n, std::move(edges)), std::nullopt,
                    Grouping::single_group(n), spec.t);
  return {std::move(instance), std::move(landmarks)};
}

Partition make_alternative_partition(const CounterexampleLandmarks& landmarks, int k) {
  if (landmarks.tree.size() < 3 || landmarks.tree_end_a != landmarks.tree.front() ||
      landmarks.tree_end_b != landmarks.tree.back()) {
    throw InputError("landmarks do not describe a path component; only 'path' is supported");
  }
  if (k < 2) throw InputError("alternative partition needs k >= 2");
  const int n = static_cast<int>(landmarks.clique.size() + landmarks.tree.size());
  const int interior = static_cast<int>(landmarks.tree.size()) - 2;
  if (k - 1 > interior) {
    throw InputError("path too short: cannot cut " + std::to_string(interior) +
                     " interior vertices into " + std::to_string(k - 1) + " segments");
  }

  std::vector<ElementSet> blocks;
  ElementSet clubbed = landmarks.clique;
  clubbed.push_back(landmarks.tree_end_a);
  clubbed.push_back(landmarks.tree_end_b);
  blocks.push_back(normalized_set(std::move(clubbed)));

  // near-equal contiguous segments of the path interior, longest first
  const int segments = k - 1;
  const int base = interior / segments;
  const int extra = interior % segments;
  int cursor = landmarks.tree_end_a + 1;
  for (int s = 0; s < segments; ++s) {
    const int len = base + (s < extra ? 1 : 0);
    ElementSet segment;
    for (int i = 0; i < len; ++i) segment.push_back(cursor++);
    blocks.push_back(std::move(segment));
  }
  return Partition(n, std::move(blocks));
}

Instance random_instance(const RandomInstanceParams& params) {
  if (params.n < 2) throw InputError("random instance needs at least two elements");
  if (params.groups < 1 || params.groups > params.n) {
    throw InputError("group count must lie in 1..n");
  }
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    throw InputError("density must lie in (0,1]");
  }
  if (params.weight_min < 0 || params.weight_min > params.weight_max) {
    throw InputError("weight range must satisfy 0 <= min <= max");
  }
  if (!(params.t >= 0.0 && params.t <= 1.0)) throw InputError("threshold t must lie in [0,1]");

  std::mt19937_64 gen(params.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(params.weight_min, params.weight_max);

  std::vector<WeightedEdge> edges;
  for (int u = 0; u < params.n; ++u) {
    for (int v = u + 1; v < params.n; ++v) {
      const bool present = params.density >= 1.0 || coin(gen) < params.density;
      if (present) edges.push_back({u, v, static_cast<double>(weight(gen))});
    }
  }

  // round-robin group assignment, then a seeded shuffle
  std::vector<int> assignment(static_cast<std::size_t>(params.n));
  for (int i = 0; i < params.n; ++i) assignment[static_cast<std::size_t>(i)] = i % params.groups;
  std::shuffle(assignment.begin(), assignment.end(), gen);

  std::vector<ElementSet> groups(static_cast<std::size_t>(params.groups));
  for (int i = 0; i < params.n; ++i) {
    groups[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])].push_back(i);
  }
  const int width = static_cast<int>(std::to_string(params.groups - 1).size());
  std::vector<std::string> names;
  names.reserve(groups.size());
  for (int j = 0; j < params.groups; ++j) {
    std::string id = std::to_string(j);
    names.push_back("g" + std::string(static_cast<std::size_t>(width) - id.size(), '0') + id);
  }

  return Instance(GroundSet(params.n), WeightedGraph(params.n, std::move(edges)), std::nullopt,
                  Grouping(params.n, std::move(names), std::move(groups)), params.t);
}

}  // namespace subcluster
