#pragma once

#include "toricgraph/graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricgraph {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
  bool verify = false;
  std::optional<int> omega_max_degree;  // default n + 2
  bool canonical = true;                // slice enumeration for omega
};

/// Top-level report sections, in output order.
inline constexpr const char* kReportSections[] = {
    "graph", "normality", "primes", "class_group", "canonical_class",
    "gorenstein", "pseudo_gorenstein", "omega_generators", "verification"};

/// Sections that are null when R_G is not normal.
bool section_requires_normality(const std::string& section);

/// Full analysis pipeline. Keys appear in a fixed order and every value is
/// a deterministic function of the graph and options; sections that cannot
/// be computed are null and explained under "null_reasons".
Json analyze(const Graph& g, const AnalysisOptions& opts = {});

/// Indented key/value rendering of a report; carries exactly the JSON values.
std::string render_text(const Json& report);

/// Named families: "cycle" {k}, "path" {k}, "complete_bipartite" {m, n},
/// "whiskered" {a_1, ..., a_k}. Throws std::invalid_argument on bad input.
Graph make_family(const std::string& name, const std::vector<int>& params);
std::string family_instance_name(const std::string& name, const std::vector<int>& params);

/// All whisker sequences of length k with sum <= max_total, one per class
/// under rotation and reflection (the lexicographically least member).
std::vector<std::vector<int>> whisker_sequences(int k, int max_total);

struct SweepInstance {
  std::string name;
  Graph graph;
};

/// One CSV/JSON row per instance, in input order.
struct SweepTable {
  std::vector<Json> rows;
};

inline constexpr const char* kSweepColumns[] = {
    "instance", "n", "num_edges", "connected", "bipartite", "unicyclic", "whiskered", "normal",
    "num_primes", "num_t_primes", "cover_primes", "zero_primes", "exceptional_primes", "unmixed",
    "gorenstein", "a", "pseudo_gorenstein", "initial_degree", "dominated_odd_cycle_condition",
    "prediction_tag", "prime_set_equals_prediction"};

Json sweep_row(const std::string& name, const Json& report);
SweepTable sweep(const std::vector<SweepInstance>& instances, const AnalysisOptions& opts, int jobs = 1);
std::string sweep_csv(const SweepTable& table);
Json sweep_json(const SweepTable& table);

}  // namespace toricgraph
