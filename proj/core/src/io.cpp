#include "subcluster/io.hpp"

#include <fstream>
#include <sstream>

namespace subcluster {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

double as_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw InputError(where + ": expected a number");
  return value.get<double>();
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw InputError(where + ": expected an integer");
  return value.get<int>();
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  const int n = as_int(require_field(doc, "n"), "n");
  const double t = as_number(require_field(doc, "t"), "t");

  std::vector<WeightedEdge> edges;
  const json& edge_list = require_field(doc, "edges");
  if (!edge_list.is_array()) throw InputError("edges: expected an array");
  edges.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const json& e = edge_list[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) throw InputError(where + ": expected [u, v, w]");
    edges.push_back({as_int(e[0], where + "[0]"), as_int(e[1], where + "[1]"),
                     as_number(e[2], where + "[2]")});
  }

  const json& group_doc = require_field(doc, "groups");
  if (!group_doc.is_object() || group_doc.empty()) {
    throw InputError("groups: expected a nonempty object of name -> id list");
  }
  std::vector<std::string> names;
  std::vector<ElementSet> groups;
  for (const auto& [name, ids] : group_doc.items()) {  // object iteration is name-sorted
    if (!ids.is_array()) throw InputError("groups." + name + ": expected an id array");
    ElementSet g;
    g.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      g.push_back(as_int(ids[i], "groups." + name + "[" + std::to_string(i) + "]"));
    }
    ElementSet normalized = normalized_set(g);
    if (normalized.size() != g.size()) {
      // duplicates inside one group; the Grouping constructor names cross-group ones
      throw InputError("groups." + name + ": duplicate element ids");
    }
    names.push_back(name);
    groups.push_back(std::move(normalized));
  }

  std::optional<GaussianModel> covariance;
  if (const auto it = doc.find("covariance"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw InputError("covariance: expected a matrix");
    const auto rows = static_cast<Eigen::Index>(it->size());
    Eigen::MatrixXd cov(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const json& row = (*it)[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
        throw InputError("covariance: row " + std::to_string(r) + " has the wrong length");
      }
      for (Eigen::Index c = 0; c < rows; ++c) {
        cov(r, c) = as_number(row[static_cast<std::size_t>(c)],
                              "covariance[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    covariance.emplace(std::move(cov));
  }

  return Instance(GroundSet(n), WeightedGraph(n, std::move(edges)), std::move(covariance),
                  Grouping(n, std::move(names), std::move(groups)), t);
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(load_json(path));
}

json instance_to_json(const Instance& instance) {
  json doc;
  doc["n"] = instance.size();
  json edges = json::array();
  for (const auto& e : instance.graph().edges()) edges.push_back(json::array({e.u, e.v, e.w}));
  doc["edges"] = std::move(edges);
  json groups = json::object();
  for (int j = 0; j < instance.grouping().group_count(); ++j) {
    groups[instance.grouping().name(j)] = instance.grouping().group(j);
  }
  doc["groups"] = std::move(groups);
  doc["t"] = instance.t();
  if (instance.covariance()) {
    const auto& cov = instance.covariance()->covariance();
    json matrix = json::array();
    for (Eigen::Index r = 0; r < cov.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < cov.cols(); ++c) row.push_back(cov(r, c));
      matrix.push_back(std::move(row));
    }
    doc["covariance"] = std::move(matrix);
  }
  return doc;
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  save_json(instance_to_json(instance), path);
}

Instance load_edge_list_tsv(const std::filesystem::path& path, double t) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::vector<WeightedEdge> edges;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    int u = 0;
    int v = 0;
    double w = 0.0;
    if (!(row >> u)) continue;  // blank or comment line
    if (!(row >> v >> w)) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'u v w' per line");
    }
    edges.push_back({u, v, w});
    max_id = std::max({max_id, u, v});
  }
  if (max_id < 0) throw InputError(path.string() + ": no edges found");
  const int n = max_id + 1;
  return Instance(GroundSet(n), WeightedGraph(n, std::move(edges)), std::nullopt,
                  Grouping::single_group(n), t);
}

namespace {

json increment_to_json(double c) {
  if (c >= kInfiniteCost) return json("inf");
  return json(c);
}

json certificate_to_json(const std::optional<FeasibilityCertificate>& certificate) {
  if (!certificate) return json();
  return json{{"group", certificate->group_name},
              {"cluster", certificate->block_index},
              {"fraction", certificate->fraction}};
}

}  // namespace

json run_to_json(const ClusteringRun& run) {
  json doc;
  doc["algorithm"] = run.algorithm;
  doc["params"] =
      json{{"k", run.k},
           {"t", run.t},
           {"group", run.group_selector},
           {"seed", run.seed ? json(*run.seed) : json()}};
  json clusters = json::array();
  for (const auto& block : run.partition.blocks()) clusters.push_back(block);
  doc["clusters"] = std::move(clusters);
  doc["cost"] = run.cost;
  doc["oracle_calls"] = run.oracle_calls;
  doc["feasible"] = run.feasible();
  doc["certificate"] = certificate_to_json(run.certificate);
  doc["degraded"] = run.degraded;
  json trace = json::array();
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    const auto& it = run.trace[i];
    json costs = json::array();
    for (double c : it.candidate_increments) costs.push_back(increment_to_json(c));
    trace.push_back(json{{"iteration", i + 1},
                         {"block_index", it.chosen_block},
                         {"block", it.chosen.block},
                         {"split", it.chosen.split},
                         {"increment", increment_to_json(it.chosen.increment)},
                         {"constrained", it.chosen.constrained},
                         {"candidates", std::move(costs)},
                         {"constrained_after", it.constrained_after}});
  }
  doc["trace"] = std::move(trace);
  return doc;
}

std::string report_string(const ClusteringRun& run) { return run_to_json(run).dump(2) + "\n"; }

void save_report(const ClusteringRun& run, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << report_string(run);
}

json to_json(const PendantTrace& trace) {
  json rounds = json::array();
  for (const auto& round : trace.rounds) {
    rounds.push_back(json{{"ordering", round.ordering},
                          {"candidate", round.candidate},
                          {"value", round.value}});
  }
  return json{{"rounds", std::move(rounds)}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

void save_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

ClusteringRun run_algorithm(const Instance& instance, const std::string& algorithm, int k,
                            const std::optional<std::string>& group_name) {
  const auto oracle = instance.make_oracle();
  const Grouping& grouping = instance.grouping();
  const ActionabilityParams request(
      instance.t(),
      group_name ? std::make_optional(grouping.index_of(*group_name)) : std::nullopt);
  const double t = request.t;

  if (algorithm == "gsa") {
    ClusteringRun run = greedy_splitting(*oracle, k);
    run.t = t;
    attach_feasibility(run, grouping, t);
    return run;
  }
  if (algorithm == "agsa") {
    if (!request.group_index && grouping.group_count() > 1) {
      throw InputError("algorithm 'agsa' needs --group on multi-group instances");
    }
    return actionable_greedy_splitting(*oracle, grouping, request.group_index.value_or(0), t, k);
  }
  if (algorithm == "agsa-multi") {
    return actionable_greedy_splitting_any_group(*oracle, grouping, t, k);
  }
  if (algorithm == "two-opt") {
    return optimal_two_clustering(*oracle, grouping, t);
  }
  if (algorithm == "parallel") {
    return parallel_split(*oracle, grouping, t, k);
  }
  if (algorithm == "brute") {
    const std::uint64_t calls_before = oracle->call_count();
    BestPartitionResult best = brute_force_best_partition(*oracle, k, grouping, t);
    ClusteringRun run;
    run.algorithm = "brute";
    run.k = k;
    run.t = t;
    run.group_selector = "any";
    run.partition = std::move(best.partition);
    run.cost = best.cost;
    run.oracle_calls = oracle->call_count() - calls_before;
    attach_feasibility(run, grouping, t);
    return run;
  }
  throw InputError("unknown algorithm '" + algorithm +
                   "'; expected gsa, agsa, agsa-multi, two-opt, parallel, or brute");
}

VerifyResult verify_report(const Instance& instance, const json& report) {
  VerifyResult result;
  auto fail = [&result](std::string message) {
    result.ok = false;
    result.diffs.push_back(std::move(message));
  };

  if (!report.is_object()) {
    fail("report is not a JSON object");
    return result;
  }
  const auto clusters_it = report.find("clusters");
  if (clusters_it == report.end() || !clusters_it->is_array()) {
    fail("report has no cluster list");
    return result;
  }
  if (clusters_it->empty()) {
    fail("report carries no partition (infeasible run?); nothing to verify");
    return result;
  }

  std::vector<ElementSet> blocks;
  for (const auto& cluster : *clusters_it) {
    if (!cluster.is_array()) {
      fail("cluster entries must be id arrays");
      return result;
    }
    blocks.push_back(normalized_set(cluster.get<ElementSet>()));
  }
  Partition partition;
  try {
    partition = Partition(instance.size(), std::move(blocks));
  } catch (const InputError& err) {
    fail(std::string("clusters do not partition the ground set: ") + err.what());
    return result;
  }

  const auto oracle = instance.make_oracle();
  const double cost = partition_cost(*oracle, partition);
  const double tolerance = instance.cost_tolerance();
  if (const auto it = report.find("cost"); it == report.end() || !it->is_number()) {
    fail("report has no numeric cost");
  } else if (std::abs(it->get<double>() - cost) > tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "cost mismatch: report says " << it->get<double>() << ", recomputed " << cost;
    fail(msg.str());
  }

  const auto certificate = is_feasible(partition, instance.grouping(), instance.t());
  const bool feasible_now = certificate.has_value();
  if (const auto it = report.find("feasible"); it == report.end() || !it->is_boolean()) {
    fail("report has no feasible flag");
  } else if (it->get<bool>() != feasible_now) {
    fail(std::string("feasibility mismatch: report says ") +
         (it->get<bool>() ? "true" : "false") + ", recomputed " +
         (feasible_now ? "true" : "false"));
  }

  const auto cert_it = report.find("certificate");
  if (feasible_now) {
    if (cert_it == report.end() || cert_it->is_null() || !cert_it->is_object()) {
      fail("feasible run must carry a certificate");
    } else {
      const auto& cert = *cert_it;
      if (cert.value("group", std::string()) != certificate->group_name) {
        fail("certificate group mismatch: report says '" + cert.value("group", std::string()) +
             "', recomputed '" + certificate->group_name + "'");
      }
      if (cert.value("cluster", -1) != certificate->block_index) {
        fail("certificate cluster mismatch");
      }
      if (std::abs(cert.value("fraction", -1.0) - certificate->fraction) > 1e-12) {
        fail("certificate fraction mismatch");
      }
    }
  } else if (cert_it != report.end() && !cert_it->is_null()) {
    fail("infeasible partition cannot carry a certificate");
  }

  return result;
}

}  // namespace subcluster
