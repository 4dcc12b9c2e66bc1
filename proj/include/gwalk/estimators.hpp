#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwalk/distribution.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/samplers.hpp"

namespace gwalk {

/// Per-node quantity averaged by the estimators. Evaluation may be undefined
/// (follower ratio of a node without out-edges); such nodes are skipped.
class NodalFunction {
public:
    enum class Kind { degree_indicator, ratio_indicator, ratio_value, constant_one, custom };
    using Custom = std::function<std::optional<double>(const DirectedGraph&, NodeId)>;

    static NodalFunction degree_indicator(Distribution::Key k, Direction dir);
    static NodalFunction ratio_indicator(double k);
    static NodalFunction ratio_value();
    static NodalFunction constant_one();
    static NodalFunction custom(std::string description, Custom fn);

    std::optional<double> operator()(const DirectedGraph& g, NodeId v) const;

    Kind kind() const noexcept { return kind_; }
    const std::string& description() const noexcept { return description_; }

private:
    Kind kind_ = Kind::constant_one;
    Direction direction_ = Direction::in;
    double k_ = 0.0;
    Custom fn_;
    std::string description_;
};

struct ScalarEstimate {
    double value = 0.0;
    std::size_t used = 0;     // trace entries with a defined evaluation
    std::size_t skipped = 0;  // trace entries where f was undefined
};

/// Sample mean of f over the raw MHRW trace, repetitions included.
ScalarEstimate mh_mean(const WalkSample& s, const DirectedGraph& g, const NodalFunction& f);

/// Fraction of MHRW trace entries with each degree.
Distribution mh_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir);

/// Ratio estimator for RWwJ samples: each trace entry v is weighted by
/// 1 / (in_degree(v) + jump_weight), which undoes the walk's stationary bias.
/// Returns sum(w * f) / sum(w).
ScalarEstimate rw_ratio_estimate(const WalkSample& s, const DirectedGraph& g, const NodalFunction& f);

/// Reweighted degree histogram of an RWwJ trace.
Distribution rw_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir);

/// Dispatches on the sample's method.
Distribution estimate_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir);

/// Mean follower ratio, dispatching on the sample's method.
ScalarEstimate ratio_average_estimate(const WalkSample& s, const DirectedGraph& g);

/// Lincoln-Petersen estimate |S1| |S2| / |S1 n S2|. Inputs are treated as
/// sets (duplicates ignored).
double capture_recapture_order(std::span<const NodeId> first, std::span<const NodeId> second);

/// Number of pairs (a, b), a in the uniform set, b in the trace, with a == b.
std::size_t cross_collisions(std::span<const NodeId> uniform_set, std::span<const NodeId> trace);

/// |S1| |S2| / collisions, where S1 is a uniform node set (deduplicated
/// here) and S2 an arbitrary trace with repetitions.
double cross_collision_order(std::span<const NodeId> uniform_set, std::span<const NodeId> trace);

/// Weighted share of reciprocated edges among the collected edges. The weight
/// of edge (i -> j) is pi_i P(i,j) + pi_j P(j,i), with P the sampler's
/// one-step transition probability restricted to real edges. MHRW uses
/// pi = 1/N; RWwJ uses pi_i proportional to 1 / (in_degree(i) + jump_weight).
double mutual_proportion_mhrw(const WalkSample& s, const DirectedGraph& g);
double mutual_proportion_rwwj(const WalkSample& s, const DirectedGraph& g);
double mutual_proportion_estimate(const WalkSample& s, const DirectedGraph& g);

}  // namespace gwalk
