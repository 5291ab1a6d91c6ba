// Command-line front end: run clustering algorithms on instance files,
// reproduce the hard instance for sequential constrained splitting, verify
// reports, and run the self-test battery.
//
// Exit codes are the machine contract: 0 success, 1 input error,
// 2 infeasible, 3 verification mismatch, 4 self-test failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subcluster/cluster.hpp"
#include "subcluster/io.hpp"
#include "subcluster/selftest.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitSelfTest = 4;

fs::path default_out(const char* filename) {
  const char* dir = std::getenv("SUBCLUSTER_OUT_DIR");
  return fs::path(dir != nullptr ? dir : ".") / filename;
}

subcluster::Instance load_any_instance(const fs::path& path, const std::optional<double>& t) {
  if (path.extension() == ".tsv") {
    if (!t) {
      throw subcluster::InputError("edge-list instances carry no threshold; pass --t");
    }
    return subcluster::load_edge_list_tsv(path, *t);
  }
  subcluster::Instance instance = subcluster::load_instance(path);
  if (t) return instance.with_threshold(*t);
  return instance;
}

json infeasible_report(const std::string& algorithm, int k, double t, const std::string& group,
                       const std::optional<std::uint64_t>& seed, const std::string& error) {
  return json{{"algorithm", algorithm},
              {"params",
               json{{"k", k}, {"t", t}, {"group", group}, {"seed", seed ? json(*seed) : json()}}},
              {"clusters", json::array()},
              {"cost", nullptr},
              {"oracle_calls", 0},
              {"feasible", false},
              {"certificate", nullptr},
              {"degraded", false},
              {"trace", json::array()},
              {"error", error}};
}

void print_run_summary(const subcluster::ClusteringRun& run, const fs::path& report_path) {
  std::cout << "algorithm:    " << run.algorithm << "\n";
  std::cout << "clusters:     " << run.partition.block_count()
            << (run.degraded ? " (degraded)" : "") << "\n";
  std::cout << "cost:         " << run.cost << "\n";
  std::cout << "oracle calls: " << run.oracle_calls << "\n";
  if (run.certificate) {
    std::cout << "feasible:     yes (group '" << run.certificate->group_name << "', cluster "
              << run.certificate->block_index << ", fraction " << run.certificate->fraction
              << ")\n";
  } else {
    std::cout << "feasible:     no\n";
  }
  std::cout << "report:       " << report_path.string() << "\n";
}

int cmd_cluster(const fs::path& instance_path, const std::string& algorithm, int k,
                const std::optional<double>& t, const std::optional<std::string>& group,
                const std::optional<std::uint64_t>& seed, const fs::path& out) {
  const subcluster::Instance instance = load_any_instance(instance_path, t);
  try {
    subcluster::ClusteringRun run = subcluster::run_algorithm(instance, algorithm, k, group);
    run.seed = seed;
    subcluster::save_report(run, out);
    print_run_summary(run, out);
    return run.feasible() ? kExitOk : kExitInfeasible;
  } catch (const subcluster::InfeasibleError& err) {
    subcluster::save_json(infeasible_report(algorithm, k, t.value_or(instance.t()),
                                            group.value_or("any"), seed, err.what()),
                          out);
    std::cout << "infeasible: " << err.what() << "\n";
    std::cout << "report:     " << out.string() << "\n";
    return kExitInfeasible;
  }
}

int cmd_counterexample(const subcluster::CounterexampleSpec& spec, double threshold,
                       const fs::path& out, const std::optional<fs::path>& save_instance_path) {
  const auto built = subcluster::make_counterexample(spec);
  if (save_instance_path) subcluster::save_instance(built.instance, *save_instance_path);

  const auto oracle = built.instance.make_oracle();
  const subcluster::ClusteringRun run = subcluster::actionable_greedy_splitting(
      *oracle, built.instance.grouping(), 0, spec.t, spec.k);

  const subcluster::Partition alternative =
      subcluster::make_alternative_partition(built.landmarks, spec.k);
  const double alternative_cost = subcluster::partition_cost(*oracle, alternative);
  const auto alternative_cert =
      subcluster::is_feasible(alternative, built.instance.grouping(), spec.t);

  const double ratio = alternative_cost > 0.0
                           ? run.cost / alternative_cost
                           : (run.cost > 0.0 ? subcluster::kInfiniteCost : 1.0);
  const bool passed = ratio > threshold;

  json alternative_doc;
  {
    json clusters = json::array();
    for (const auto& block : alternative.blocks()) clusters.push_back(block);
    alternative_doc = json{{"clusters", std::move(clusters)},
                           {"cost", alternative_cost},
                           {"feasible", alternative_cert.has_value()},
                           {"certificate",
                            alternative_cert
                                ? json{{"group", alternative_cert->group_name},
                                       {"cluster", alternative_cert->block_index},
                                       {"fraction", alternative_cert->fraction}}
                                : json()}};
  }
  json doc{{"spec", json{{"n", spec.total_vertices},
                         {"t", spec.t},
                         {"eps", spec.epsilon},
                         {"k", spec.k},
                         {"tree", spec.tree_shape},
                         {"threshold", threshold}}},
           {"sequential", subcluster::run_to_json(run)},
           {"alternative", std::move(alternative_doc)},
           {"ratio", ratio},
           {"passed", passed}};
  subcluster::save_json(doc, out);

  std::cout << "sequential splitting cost: " << run.cost << "\n";
  std::cout << "alternative cost:          " << alternative_cost << "\n";
  std::cout << "ratio:                     " << ratio << "\n";
  std::cout << "threshold:                 " << threshold << (passed ? "  (exceeded)" : "  (NOT exceeded)")
            << "\n";
  std::cout << "report:                    " << out.string() << "\n";
  return passed ? kExitOk : kExitMismatch;
}

int cmd_verify(const fs::path& instance_path, const fs::path& report_path) {
  const subcluster::Instance instance = load_any_instance(instance_path, std::nullopt);
  const json report = subcluster::load_json(report_path);
  const auto verdict = subcluster::verify_report(instance, report);
  if (verdict.ok) {
    std::cout << "ok: report matches the instance\n";
    return kExitOk;
  }
  std::cout << "mismatch:\n";
  for (const auto& diff : verdict.diffs) std::cout << "  - " << diff << "\n";
  return kExitMismatch;
}

int cmd_selftest(const subcluster::selftest::Options& options) {
  options.validate();
  std::vector<std::string> failure_log;
  bool all_passed = true;
  for (const auto make_suite : {
           subcluster::selftest::k2_optimality,
           subcluster::selftest::gsa_bound,
           subcluster::selftest::queyranne_equivalence,
           subcluster::selftest::queyranne_budget,
           subcluster::selftest::counterexample_reproduction,
           subcluster::selftest::parallel_split_bound,
           subcluster::selftest::minimal_solution_disjointness,
           subcluster::selftest::multigroup_reduction,
           subcluster::selftest::family_properties,
           subcluster::selftest::oracle_contracts,
           subcluster::selftest::determinism_and_io,
       }) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = make_suite(options);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cout << (result.passed() ? "ok   " : "FAIL ") << result.name;
    for (std::size_t pad = result.name.size(); pad < 24; ++pad) std::cout << ' ';
    std::cout << "checks=" << result.checks << " failures=" << result.failures << "\n";
    std::cerr << result.name << ": " << elapsed.count() << "s\n";
    all_passed = all_passed && result.passed();
    for (const auto& message : result.messages) {
      failure_log.push_back(result.name + ": " + message);
    }
  }
  if (!failure_log.empty()) {
    const fs::path log_path = default_out("selftest_failures.txt");
    std::ofstream log(log_path);
    for (const auto& line : failure_log) log << line << "\n";
    std::cout << "failure details (with replay instances): " << log_path.string() << "\n";
  }
  std::cout << (all_passed ? "all suites passed" : "SELF-TEST FAILED") << "\n";
  return all_passed ? kExitOk : kExitSelfTest;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.precision(12);

  CLI::App app{"actionable clustering under symmetric submodular costs"};
  app.require_subcommand(1);

  // cluster
  auto* cluster = app.add_subcommand("cluster", "run one algorithm on an instance file");
  std::string instance_path;
  std::string algorithm;
  int k = 2;
  std::optional<double> t_override;
  std::optional<std::string> group;
  std::optional<std::uint64_t> seed;
  std::string cluster_out = default_out("report.json").string();
  cluster->add_option("--instance", instance_path, "instance file (.json, or .tsv edge list)")
      ->required();
  cluster->add_option("--algo", algorithm, "gsa | agsa | agsa-multi | two-opt | parallel | brute")
      ->required();
  cluster->add_option("--k", k, "number of clusters (default 2; ignored by two-opt)");
  cluster->add_option("--t", t_override, "override the instance threshold");
  cluster->add_option("--group", group, "designated group name (agsa)");
  cluster->add_option("--seed", seed, "seed echoed into the report");
  cluster->add_option("--out", cluster_out, "report path (default $SUBCLUSTER_OUT_DIR/report.json)");

  // counterexample
  auto* counter = app.add_subcommand(
      "counterexample", "build the two-component hard instance and compare sequential "
                        "splitting against the cheap alternative partition");
  subcluster::CounterexampleSpec spec;
  double threshold = 1e4;
  std::string counter_out = default_out("counterexample.json").string();
  std::optional<std::string> save_instance_path;
  counter->add_option("--n", spec.total_vertices, "total vertices (default 100)");
  counter->add_option("--t", spec.t, "threshold (default 0.51)");
  counter->add_option("--eps", spec.epsilon, "light edge weight; heavy edges are 1/eps");
  counter->add_option("--k", spec.k, "number of clusters (default 10)");
  counter->add_option("--tree", spec.tree_shape, "light component shape (only 'path')");
  counter->add_option("--threshold", threshold, "required cost ratio (default 1e4)");
  counter->add_option("--out", counter_out, "report path");
  counter->add_option("--save-instance", save_instance_path, "also write the instance file");

  // verify
  auto* verify = app.add_subcommand("verify", "recompute a report's cost and feasibility");
  std::string verify_instance;
  std::string verify_report_path;
  verify->add_option("--instance", verify_instance, "instance file")->required();
  verify->add_option("--report", verify_report_path, "report file")->required();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the full property battery");
  subcluster::selftest::Options options;
  selftest->add_option("--n-max", options.n_max, "largest ground set for enumeration-backed suites (<= 12)");
  selftest->add_option("--seeds", options.seeds, "seeds per suite (default 100)");
  selftest->add_option("--k-max", options.k_max, "largest cluster count in bound suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (cluster->parsed()) {
      return cmd_cluster(instance_path, algorithm, k, t_override, group, seed, cluster_out);
    }
    if (counter->parsed()) {
      std::optional<fs::path> save_path;
      if (save_instance_path) save_path = fs::path(*save_instance_path);
      return cmd_counterexample(spec, threshold, counter_out, save_path);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_instance, verify_report_path);
    }
    if (selftest->parsed()) {
      return cmd_selftest(options);
    }
  } catch (const subcluster::InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << "\n";
    return kExitInfeasible;
  } catch (const subcluster::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const subcluster::SizeGuardError& err) {
    std::cerr << "refused: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
