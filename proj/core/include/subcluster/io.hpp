#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subcluster/cluster.hpp"
#include "subcluster/instance.hpp"
#include "subcluster/minimize.hpp"

namespace subcluster {

/// Instance file schema (JSON, UTF-8):
///   { "n": int, "edges": [[u, v, w], ...], "groups": {"name": [ids], ...},
///     "t": real, "covariance": [[...], ...]? }
/// Groups must partition 0..n-1. A covariance selects the mutual-information
/// objective instead of the graph cut. Groups are ordered by name.
Instance parse_instance(const nlohmann::json& doc);
Instance load_instance(const std::filesystem::path& path);
nlohmann::json instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Plain importer: one "u <tab> v <tab> w" edge per line, '#' comments,
/// a single group over all mentioned vertices.
Instance load_edge_list_tsv(const std::filesystem::path& path, double t);

/// Report schema (JSON, UTF-8):
///   { "algorithm", "params": {"k", "t", "group", "seed"},
///     "clusters": [[sorted ids], ...], "cost", "oracle_calls", "feasible",
///     "certificate": {"group", "cluster", "fraction"} | null,
///     "degraded": bool, "trace": [...] }
/// Infinite increments serialize as the string "inf".
nlohmann::json run_to_json(const ClusteringRun& run);
std::string report_string(const ClusteringRun& run);
void save_report(const ClusteringRun& run, const std::filesystem::path& path);

nlohmann::json to_json(const PendantTrace& trace);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const nlohmann::json& doc, const std::filesystem::path& path);

/// Dispatch by algorithm name ("gsa", "agsa", "agsa-multi", "two-opt",
/// "parallel", "brute") on a fresh oracle built from the instance. "agsa"
/// needs a group name unless the instance has a single group; "two-opt"
/// ignores k.
ClusteringRun run_algorithm(const Instance& instance, const std::string& algorithm, int k,
                            const std::optional<std::string>& group_name);

/// Independent re-check of a report against its instance: clusters must
/// partition the ground set, and the recomputed cost and feasibility must
/// match the reported ones within the instance's tolerance.
struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diffs;
};

VerifyResult verify_report(const Instance& instance, const nlohmann::json& report);

}  // namespace subcluster
