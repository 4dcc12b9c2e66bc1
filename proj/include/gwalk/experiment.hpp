#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gwalk/graph.hpp"
#include "gwalk/report.hpp"
#include "gwalk/samplers.hpp"

namespace gwalk {

enum class Property { degree_distribution, ratio_average, order, mutual_proportion };

std::string_view to_string(Property p) noexcept;
/// Accepts a comma-separated list, or "all".
std::vector<Property> parse_properties(std::string_view list);

/// Everything one experiment run needs. Settable by key through set(), which
/// is what the config file and the command line both feed.
struct ExperimentConfig {
    std::string graph_path;
    std::string gen;  // GenSpec text; used when graph_path is empty
    std::vector<Method> methods{Method::mhrw, Method::rwwj};
    std::optional<std::uint64_t> budget;
    double budget_fraction = 0.15;
    double walk_prob = 0.85;
    double jump_weight = 10.0;
    std::uint64_t replications = 1;
    std::uint64_t master_seed = 1;
    std::optional<ExternalId> seed_node;
    std::vector<Property> properties{Property::degree_distribution, Property::ratio_average, Property::order,
                                     Property::mutual_proportion};
    std::filesystem::path out_dir = "gwalk-out";
    std::vector<std::filesystem::path> traces;  // explicit inputs for `estimate`
    unsigned threads = 1;
    double kl_epsilon = 1e-10;

    /// Keys: graph, gen, method, budget, budget-frac, walk-prob, jump-weight,
    /// reps, seed, seed-node, props, out, threads, kl-epsilon.
    void set(std::string_view key, std::string_view value);
    void validate() const;

    /// Absolute budget if given, else floor(fraction * N), at least 1.
    std::uint64_t resolve_budget(std::size_t node_count) const;
};

/// Seed of the walk for (method, replication): derive_seed(master, 2r + m)
/// with m = 0 for MHRW and 1 for RWwJ.
std::uint64_t walk_seed(std::uint64_t master, Method method, std::uint64_t replication);
/// Seed of the capture-recapture split for a walk.
std::uint64_t split_seed(std::uint64_t walk_seed);

DirectedGraph load_experiment_graph(const ExperimentConfig& cfg);

/// Ground truth of every property. Writes truth.json and per-direction
/// degree CSVs into out_dir; returns the truth document.
nlohmann::json cmd_stats(const ExperimentConfig& cfg, const DirectedGraph& g);
nlohmann::json ground_truth_json(const DirectedGraph& g, const std::string& source);

/// One trace file per (method, replication) under out_dir/traces. Returns
/// the written paths in (replication, method) order.
std::vector<std::filesystem::path> cmd_sample(const ExperimentConfig& cfg, const DirectedGraph& g);

/// Estimates every requested property from the traces (cfg.traces, or the
/// files in out_dir/traces). Writes reports.json and CDF CSVs.
std::vector<EstimateReport> cmd_estimate(const ExperimentConfig& cfg, const DirectedGraph& g);

/// Fills error metrics from out_dir/reports.json against out_dir/truth.json
/// and writes evaluation.csv plus evaluated_reports.json.
std::vector<EstimateReport> cmd_evaluate(const ExperimentConfig& cfg);

/// stats, sample, estimate and evaluate in sequence.
void cmd_run(const ExperimentConfig& cfg);

/// Fills `errors` of each report from its ground truth.
void attach_metrics(EstimateReport& r, double kl_epsilon);

/// Evaluation table in CSV form, one row per (property, method).
std::string evaluation_csv(const std::vector<EstimateReport>& reports);

}  // namespace gwalk
