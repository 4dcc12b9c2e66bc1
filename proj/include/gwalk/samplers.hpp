#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gwalk/graph.hpp"

namespace gwalk {

enum class Method { mhrw, rwwj };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view s);

struct SamplerConfig {
    std::uint64_t budget = 1;
    /// MHRW: probability of proposing a neighbor rather than a uniform node.
    double walk_prob = 0.85;
    /// RWwJ: weight of the virtual node that links to every node.
    double jump_weight = 10.0;
    std::uint64_t rng_seed = 0;
    /// Starting node; drawn uniformly from the graph when empty.
    std::optional<NodeId> seed_node;

    void validate() const;
};

enum class StepKind : std::uint8_t { walk, jump, rejection };

std::string_view to_string(StepKind k) noexcept;
StepKind parse_step_kind(std::string_view s);

struct Step {
    StepKind kind;
    NodeId from;
    friend bool operator==(const Step&, const Step&) = default;
};

/// A walk of exactly `budget` steps. The start node is the state before the
/// first step and is not itself part of the trace.
struct WalkSample {
    Method method = Method::mhrw;
    SamplerConfig config;
    NodeId start = 0;
    std::vector<NodeId> trace;
    std::vector<Step> steps;
    /// Edges traversed by walk steps, sorted and unique.
    std::vector<Edge> collected_edges;

    /// Visited nodes as a sorted set.
    std::vector<NodeId> distinct_nodes() const;
    std::size_t distinct_count() const { return distinct_nodes().size(); }
};

/// One-step transition probability i -> j (i != j) of the MHRW chain with
/// walk probability d: proposal mass times acceptance.
double mhrw_transition(const DirectedGraph& g, double walk_prob, NodeId i, NodeId j);

/// MHRW acceptance probability for moving from i to the proposed node j.
double mhrw_acceptance(const DirectedGraph& g, double walk_prob, NodeId i, NodeId j);

/// One-step transition probability i -> j of the RWwJ chain (j may equal i).
double rwwj_transition(const DirectedGraph& g, double jump_weight, NodeId i, NodeId j);

/// Metropolis-Hastings random walk with uniform jump proposals.
WalkSample mhrw_sample(const DirectedGraph& g, const SamplerConfig& cfg);

/// Random walk with jumps through a virtual node of weight jump_weight.
WalkSample rwwj_sample(const DirectedGraph& g, const SamplerConfig& cfg);

WalkSample run_sampler(const DirectedGraph& g, Method method, const SamplerConfig& cfg);

/// Randomly partitions the trace into two halves (sizes differ by at most
/// one) and deduplicates each. Both returned sets are sorted.
std::pair<std::vector<NodeId>, std::vector<NodeId>> split_halves(const WalkSample& s, std::uint64_t rng_seed);

}  // namespace gwalk
