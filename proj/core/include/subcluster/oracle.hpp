#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "subcluster/common.hpp"
#include "subcluster/gaussian_model.hpp"
#include "subcluster/weighted_graph.hpp"

namespace subcluster {

/// Value-query access to a normalized symmetric submodular function over a
/// dense ground set {0, ..., N-1}. Algorithms touch the function only through
/// operator(), so complexity is measured in calls. The counter is atomic;
/// read-only evaluation is safe to share across threads.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  SubmodularOracle(const SubmodularOracle&) = delete;
  SubmodularOracle& operator=(const SubmodularOracle&) = delete;

  int ground_size() const { return n_; }
  ElementSet ground() const { return make_range_set(n_); }

  double operator()(const ElementSet& s) const {
    check_subset(s);
    return dispatch(s);
  }

  virtual std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
  virtual void reset_call_count() const { calls_.store(0, std::memory_order_relaxed); }

  /// Disjoint sets certifying that the function is nonnegative and evaluates
  /// to exactly zero on any union of them (e.g. graph components for a cut).
  /// Empty when no such certificate is available.
  virtual std::vector<ElementSet> zero_cost_atoms() const { return {}; }

 protected:
  explicit SubmodularOracle(int ground_size) : n_(ground_size) {
    if (n_ < 1) throw InputError("oracle ground set must be nonempty");
  }

  virtual double dispatch(const ElementSet& s) const = 0;

  void bump_call() const { calls_.fetch_add(1, std::memory_order_relaxed); }

  void check_subset(const ElementSet& s) const {
    if (!is_sorted_unique(s)) throw InputError("element set must be sorted and duplicate-free");
    if (!s.empty() && (s.front() < 0 || s.back() >= n_)) {
      throw InputError("element id out of range for oracle of size " + std::to_string(n_));
    }
  }

 private:
  int n_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/// Base for concrete cost functions: every evaluation bumps the counter by
/// exactly one.
class CountingOracle : public SubmodularOracle {
 protected:
  using SubmodularOracle::SubmodularOracle;

  double dispatch(const ElementSet& s) const final {
    bump_call();
    return evaluate(s);
  }

  virtual double evaluate(const ElementSet& s) const = 0;
};

/// Graph-cut cost function.
class CutOracle final : public CountingOracle {
 public:
  explicit CutOracle(WeightedGraph graph)
      : CountingOracle(graph.vertex_count()), graph_(std::move(graph)) {}

  const WeightedGraph& graph() const { return graph_; }

  std::vector<ElementSet> zero_cost_atoms() const override { return graph_.components(); }

 protected:
  double evaluate(const ElementSet& s) const override { return cut_value(graph_, s); }

 private:
  WeightedGraph graph_;
};

/// Gaussian mutual information between a set and its complement.
class GaussianMiOracle final : public CountingOracle {
 public:
  explicit GaussianMiOracle(GaussianModel model)
      : CountingOracle(model.dimension()),
        model_(std::move(model)),
        full_log_det_(model_.log_det_submatrix(make_range_set(model_.dimension()))) {}

  const GaussianModel& model() const { return model_; }

 protected:
  double evaluate(const ElementSet& s) const override {
    const ElementSet rest = complement_of(s, ground_size());
    return 0.5 * (model_.log_det_submatrix(s) + model_.log_det_submatrix(rest) - full_log_det_);
  }

 private:
  GaussianModel model_;
  double full_log_det_;
};

/// Arbitrary set function for tests and diagnostics.
class LambdaOracle final : public CountingOracle {
 public:
  LambdaOracle(int ground_size, std::function<double(const ElementSet&)> fn)
      : CountingOracle(ground_size), fn_(std::move(fn)) {}

 protected:
  double evaluate(const ElementSet& s) const override { return fn_(s); }

 private:
  std::function<double(const ElementSet&)> fn_;
};

/// View of a base oracle with the ground set coarsened to supernodes.
/// Ground ids are positions in the supernode list; evaluation expands a
/// subset of supernodes to the union of their members and queries the base,
/// so the call counter is the base counter.
class ContractedOracle final : public SubmodularOracle {
 public:
  ContractedOracle(const SubmodularOracle& base, std::vector<ElementSet> supernodes);

  const std::vector<ElementSet>& supernodes() const { return supernodes_; }
  ElementSet expand(const ElementSet& s) const;

  std::uint64_t call_count() const override { return base_.call_count(); }
  void reset_call_count() const override { base_.reset_call_count(); }

 protected:
  double dispatch(const ElementSet& s) const override { return base_(expand(s)); }

 private:
  const SubmodularOracle& base_;
  std::vector<ElementSet> supernodes_;
};

/// Merge supernodes of a base oracle; `supernodes` must partition its ground set.
ContractedOracle contract(const SubmodularOracle& base, std::vector<ElementSet> supernodes);

/// Splitting objective for a block W of a larger system:
///   h(S) = f(S) + f(W \ S)   for S subset of W,
/// in W-local ids (positions in the sorted block). h is symmetric submodular
/// on W whenever f is on D. Each evaluation makes two base calls; the counter
/// is the base counter.
class SplitObjectiveOracle final : public SubmodularOracle {
 public:
  SplitObjectiveOracle(const SubmodularOracle& base, ElementSet block);

  const ElementSet& block() const { return block_; }
  ElementSet to_base_ids(const ElementSet& local) const;

  std::uint64_t call_count() const override { return base_.call_count(); }
  void reset_call_count() const override { base_.reset_call_count(); }

  std::vector<ElementSet> zero_cost_atoms() const override;

 protected:
  double dispatch(const ElementSet& local) const override;

 private:
  const SubmodularOracle& base_;
  ElementSet block_;
};

/// Diagnostic scan of the oracle contracts: symmetry (exhaustive for N <= 12,
/// sampled otherwise), normalization at the empty and full sets, and the
/// submodular inequality on sampled pairs. Violations are reported, not thrown.
struct OracleCheckReport {
  double value_at_empty = 0.0;
  double value_at_full = 0.0;
  double max_symmetry_violation = 0.0;
  double max_submodularity_violation = 0.0;  // positive means violated by that much
  bool symmetry_exhaustive = false;
  long long symmetry_checks = 0;
  long long submodularity_checks = 0;
  ElementSet worst_symmetry_set;
  std::pair<ElementSet, ElementSet> worst_submodularity_pair;

  bool passes(double tolerance) const {
    return std::abs(value_at_empty) <= tolerance && std::abs(value_at_full) <= tolerance &&
           max_symmetry_violation <= tolerance && max_submodularity_violation <= tolerance;
  }
};

OracleCheckReport check_symmetric_submodular(const SubmodularOracle& oracle, int sample_count,
                                             std::uint64_t seed);

}  // namespace subcluster
