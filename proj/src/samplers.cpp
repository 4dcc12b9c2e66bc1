#include "gwalk/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gwalk/error.hpp"
#include "gwalk/rng.hpp"

namespace gwalk {

std::string_view to_string(Method m) noexcept { return m == Method::mhrw ? "mhrw" : "rwwj"; }

Method parse_method(std::string_view s) {
    if (s == "mhrw") return Method::mhrw;
    if (s == "rwwj") return Method::rwwj;
    fail(ErrorCode::invalid_argument, "unknown sampling method '" + std::string(s) + "'");
}

std::string_view to_string(StepKind k) noexcept {
    switch (k) {
    case StepKind::walk: return "walk";
    case StepKind::jump: return "jump";
    case StepKind::rejection: return "rejection";
    }
    return "?";
}

StepKind parse_step_kind(std::string_view s) {
    if (s == "walk") return StepKind::walk;
    if (s == "jump") return StepKind::jump;
    if (s == "rejection") return StepKind::rejection;
    fail(ErrorCode::parse, "unknown step kind '" + std::string(s) + "'");
}

void SamplerConfig::validate() const {
    if (budget < 1) fail(ErrorCode::invalid_argument, "budget must be at least 1");
    if (!(walk_prob > 0.0 && walk_prob <= 1.0)) fail(ErrorCode::invalid_argument, "walk probability must lie in (0, 1]");
    if (!(jump_weight >= 0.0) || !std::isfinite(jump_weight))
        fail(ErrorCode::invalid_argument, "jump weight must be a finite non-negative number");
}

std::vector<NodeId> WalkSample::distinct_nodes() const {
    std::vector<NodeId> nodes(trace);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

namespace {

/// Probability that the MHRW proposal from x lands on one particular
/// out-neighbor of x. A node without out-edges proposes neighbors with zero
/// mass; its walk branch stays put.
double neighbor_proposal_mass(const DirectedGraph& g, double walk_prob, NodeId x) {
    const double jump = (1.0 - walk_prob) / static_cast<double>(g.node_count());
    const auto out = g.out_degree(x);
    return out == 0 ? jump : jump + walk_prob / static_cast<double>(out);
}

NodeId choose_start(const DirectedGraph& g, const SamplerConfig& cfg, Rng& rng) {
    if (cfg.seed_node) {
        if (*cfg.seed_node >= g.node_count()) fail(ErrorCode::out_of_range, "seed node outside the graph");
        return *cfg.seed_node;
    }
    return static_cast<NodeId>(rng.below(g.node_count()));
}

WalkSample begin_sample(const DirectedGraph& g, Method method, const SamplerConfig& cfg, Rng& rng) {
    if (g.empty()) fail(ErrorCode::invalid_argument, "cannot sample an empty graph");
    cfg.validate();
    WalkSample s;
    s.method = method;
    s.config = cfg;
    s.start = choose_start(g, cfg, rng);
    s.trace.reserve(cfg.budget);
    s.steps.reserve(cfg.budget);
    return s;
}

void finish_edges(WalkSample& s) {
    std::sort(s.collected_edges.begin(), s.collected_edges.end());
    s.collected_edges.erase(std::unique(s.collected_edges.begin(), s.collected_edges.end()), s.collected_edges.end());
}

}  // namespace

double mhrw_acceptance(const DirectedGraph& g, double walk_prob, NodeId i, NodeId j) {
    if (i != j && g.has_edge(i, j)) {
        return std::min(neighbor_proposal_mass(g, walk_prob, j) / neighbor_proposal_mass(g, walk_prob, i), 1.0);
    }
    return 1.0 - walk_prob;
}

double mhrw_transition(const DirectedGraph& g, double walk_prob, NodeId i, NodeId j) {
    if (i == j) fail(ErrorCode::invalid_argument, "mhrw_transition is defined for i != j");
    const double n = static_cast<double>(g.node_count());
    double proposal = (1.0 - walk_prob) / n;
    if (g.has_edge(i, j)) proposal += walk_prob / static_cast<double>(g.out_degree(i));
    return proposal * mhrw_acceptance(g, walk_prob, i, j);
}

double rwwj_transition(const DirectedGraph& g, double jump_weight, NodeId i, NodeId j) {
    const double out = static_cast<double>(g.out_degree(i));
    const double uniform = jump_weight / static_cast<double>(g.node_count());
    if (out + jump_weight == 0.0) fail(ErrorCode::invalid_argument, "RWwJ kernel undefined at a dangling node with zero jump weight");
    const double link = (i != j && g.has_edge(i, j)) ? 1.0 : 0.0;
    return (link + uniform) / (out + jump_weight);
}

WalkSample mhrw_sample(const DirectedGraph& g, const SamplerConfig& cfg) {
    Rng rng(cfg.rng_seed);
    WalkSample s = begin_sample(g, Method::mhrw, cfg, rng);
    const double d = cfg.walk_prob;
    const auto n = g.node_count();

    NodeId current = s.start;
    for (std::uint64_t step = 0; step < cfg.budget; ++step) {
        std::optional<NodeId> proposal;
        if (rng.uniform() < d) {
            const auto nbrs = g.out_neighbors(current);
            if (!nbrs.empty()) proposal = nbrs[rng.below(nbrs.size())];
        } else {
            proposal = static_cast<NodeId>(rng.below(n));
        }

        bool accepted = false;
        bool along_edge = false;
        if (proposal) {
            along_edge = *proposal != current && g.has_edge(current, *proposal);
            const double a = mhrw_acceptance(g, d, current, *proposal);
            accepted = a >= 1.0 || rng.uniform() < a;
        }

        const NodeId from = current;
        if (accepted) {
            current = *proposal;
            s.steps.push_back({along_edge ? StepKind::walk : StepKind::jump, from});
            if (along_edge) s.collected_edges.push_back({from, current});
        } else {
            s.steps.push_back({StepKind::rejection, from});
        }
        s.trace.push_back(current);
    }
    finish_edges(s);
    return s;
}

WalkSample rwwj_sample(const DirectedGraph& g, const SamplerConfig& cfg) {
    if (cfg.jump_weight == 0.0 && !g.empty()) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.out_degree(v) == 0)
                fail(ErrorCode::invalid_argument,
                     "RWwJ with jump weight 0 deadlocks at node " + std::to_string(g.external_id(v)) + " (no out-edges)");
        }
    }
    Rng rng(cfg.rng_seed);
    WalkSample s = begin_sample(g, Method::rwwj, cfg, rng);
    const double alpha = cfg.jump_weight;
    const auto n = g.node_count();

    NodeId current = s.start;
    for (std::uint64_t step = 0; step < cfg.budget; ++step) {
        const auto nbrs = g.out_neighbors(current);
        const double out = static_cast<double>(nbrs.size());
        const NodeId from = current;
        if (rng.uniform() * (out + alpha) < out) {
            current = nbrs[rng.below(nbrs.size())];
            s.steps.push_back({StepKind::walk, from});
            s.collected_edges.push_back({from, current});
        } else {
            current = static_cast<NodeId>(rng.below(n));
            s.steps.push_back({StepKind::jump, from});
        }
        s.trace.push_back(current);
    }
    finish_edges(s);
    return s;
}

WalkSample run_sampler(const DirectedGraph& g, Method method, const SamplerConfig& cfg) {
    return method == Method::mhrw ? mhrw_sample(g, cfg) : rwwj_sample(g, cfg);
}

std::pair<std::vector<NodeId>, std::vector<NodeId>> split_halves(const WalkSample& s, std::uint64_t rng_seed) {
    if (s.trace.size() < 2) fail(ErrorCode::invalid_argument, "split_halves needs at least two trace entries");
    std::vector<NodeId> shuffled(s.trace);
    Rng rng(rng_seed);
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);

    const auto half = static_cast<std::ptrdiff_t>(shuffled.size() / 2);
    std::vector<NodeId> first(shuffled.begin(), shuffled.begin() + half);
    std::vector<NodeId> second(shuffled.begin() + half, shuffled.end());
    for (auto* part : {&first, &second}) {
        std::sort(part->begin(), part->end());
        part->erase(std::unique(part->begin(), part->end()), part->end());
    }
    return {std::move(first), std::move(second)};
}

}  // namespace gwalk
