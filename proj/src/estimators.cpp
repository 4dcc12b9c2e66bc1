#include "gwalk/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gwalk/error.hpp"

namespace gwalk {

NodalFunction NodalFunction::degree_indicator(Distribution::Key k, Direction dir) {
    NodalFunction f;
    f.kind_ = Kind::degree_indicator;
    f.direction_ = dir;
    f.k_ = static_cast<double>(k);
    f.description_ = std::string(dir == Direction::in ? "in" : "out") + "-degree == " + std::to_string(k);
    return f;
}

NodalFunction NodalFunction::ratio_indicator(double k) {
    NodalFunction f;
    f.kind_ = Kind::ratio_indicator;
    f.k_ = k;
    f.description_ = "follower ratio == " + std::to_string(k);
    return f;
}

NodalFunction NodalFunction::ratio_value() {
    NodalFunction f;
    f.kind_ = Kind::ratio_value;
    f.description_ = "follower ratio";
    return f;
}

NodalFunction NodalFunction::constant_one() {
    NodalFunction f;
    f.description_ = "1";
    return f;
}

NodalFunction NodalFunction::custom(std::string description, Custom fn) {
    if (!fn) fail(ErrorCode::invalid_argument, "custom nodal function is empty");
    NodalFunction f;
    f.kind_ = Kind::custom;
    f.fn_ = std::move(fn);
    f.description_ = std::move(description);
    return f;
}

std::optional<double> NodalFunction::operator()(const DirectedGraph& g, NodeId v) const {
    switch (kind_) {
    case Kind::degree_indicator:
        return static_cast<double>(g.degree(v, direction_)) == k_ ? 1.0 : 0.0;
    case Kind::ratio_indicator: {
        const auto r = follower_ratio(g, v);
        if (!r) return std::nullopt;
        return *r == k_ ? 1.0 : 0.0;
    }
    case Kind::ratio_value:
        return follower_ratio(g, v);
    case Kind::constant_one:
        return 1.0;
    case Kind::custom:
        return fn_(g, v);
    }
    return std::nullopt;
}

namespace {

void require_method(const WalkSample& s, Method m, const char* what) {
    if (s.method != m)
        fail(ErrorCode::invalid_argument,
             std::string(what) + " needs a " + std::string(to_string(m)) + " sample, got " + std::string(to_string(s.method)));
}

double rwwj_weight(const DirectedGraph& g, double jump_weight, NodeId v) {
    const double denom = static_cast<double>(g.in_degree(v)) + jump_weight;
    if (denom == 0.0) fail(ErrorCode::undefined_estimate, "RWwJ weight undefined for a node with in-degree 0 and jump weight 0");
    return 1.0 / denom;
}

std::vector<NodeId> as_set(std::span<const NodeId> nodes) {
    std::vector<NodeId> set(nodes.begin(), nodes.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

/// Reciprocated weight over total weight, for edge weights
/// pi_i P(i,j) + pi_j P(j,i).
template <typename Pi, typename Transition>
double weighted_reciprocity(const WalkSample& s, const DirectedGraph& g, Pi pi, Transition transition) {
    if (s.collected_edges.empty()) fail(ErrorCode::undefined_estimate, "no edges were collected by the walk");
    double reciprocated = 0.0;
    double total = 0.0;
    for (const Edge& e : s.collected_edges) {
        const bool mutual = g.has_edge(e.dst, e.src);
        double w = pi(e.src) * transition(e.src, e.dst);
        if (mutual) w += pi(e.dst) * transition(e.dst, e.src);
        total += w;
        if (mutual) reciprocated += w;
    }
    if (!(total > 0.0)) fail(ErrorCode::undefined_estimate, "collected edges carry no transition weight");
    return reciprocated / total;
}

}  // namespace

ScalarEstimate mh_mean(const WalkSample& s, const DirectedGraph& g, const NodalFunction& f) {
    require_method(s, Method::mhrw, "mh_mean");
    ScalarEstimate est;
    double sum = 0.0;
    for (NodeId v : s.trace) {
        if (auto value = f(g, v)) {
            sum += *value;
            ++est.used;
        } else {
            ++est.skipped;
        }
    }
    if (est.used == 0) fail(ErrorCode::undefined_estimate, "'" + f.description() + "' is undefined on every sampled node");
    est.value = sum / static_cast<double>(est.used);
    return est;
}

Distribution mh_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir) {
    require_method(s, Method::mhrw, "mh_degree_distribution");
    std::vector<Distribution::Key> degrees;
    degrees.reserve(s.trace.size());
    for (NodeId v : s.trace) degrees.push_back(g.degree(v, dir));
    return Distribution::from_counts(degrees);
}

ScalarEstimate rw_ratio_estimate(const WalkSample& s, const DirectedGraph& g, const NodalFunction& f) {
    require_method(s, Method::rwwj, "rw_ratio_estimate");
    if (s.trace.empty()) fail(ErrorCode::undefined_estimate, "empty sample");
    const double alpha = s.config.jump_weight;
    ScalarEstimate est;
    double numerator = 0.0;
    double normalizer = 0.0;
    for (NodeId v : s.trace) {
        auto value = f(g, v);
        if (!value) {
            ++est.skipped;
            continue;
        }
        const double w = rwwj_weight(g, alpha, v);
        numerator += *value * w;
        normalizer += w;
        ++est.used;
    }
    if (est.used == 0) fail(ErrorCode::undefined_estimate, "'" + f.description() + "' is undefined on every sampled node");
    est.value = numerator / normalizer;
    return est;
}

Distribution rw_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir) {
    require_method(s, Method::rwwj, "rw_degree_distribution");
    std::map<Distribution::Key, double> weights;
    for (NodeId v : s.trace) weights[g.degree(v, dir)] += rwwj_weight(g, s.config.jump_weight, v);
    return Distribution::from_weights(weights);
}

Distribution estimate_degree_distribution(const WalkSample& s, const DirectedGraph& g, Direction dir) {
    return s.method == Method::mhrw ? mh_degree_distribution(s, g, dir) : rw_degree_distribution(s, g, dir);
}

ScalarEstimate ratio_average_estimate(const WalkSample& s, const DirectedGraph& g) {
    const auto f = NodalFunction::ratio_value();
    return s.method == Method::mhrw ? mh_mean(s, g, f) : rw_ratio_estimate(s, g, f);
}

double capture_recapture_order(std::span<const NodeId> first, std::span<const NodeId> second) {
    const auto a = as_set(first);
    const auto b = as_set(second);
    if (a.empty() || b.empty()) fail(ErrorCode::invalid_argument, "capture-recapture needs two non-empty samples");
    std::vector<NodeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) fail(ErrorCode::undefined_estimate, "capture-recapture samples do not overlap; increase the budget");
    return static_cast<double>(a.size()) * static_cast<double>(b.size()) / static_cast<double>(common.size());
}

std::size_t cross_collisions(std::span<const NodeId> uniform_set, std::span<const NodeId> trace) {
    const auto set = as_set(uniform_set);
    std::size_t hits = 0;
    for (NodeId v : trace) {
        if (std::binary_search(set.begin(), set.end(), v)) ++hits;
    }
    return hits;
}

double cross_collision_order(std::span<const NodeId> uniform_set, std::span<const NodeId> trace) {
    const auto set = as_set(uniform_set);
    if (set.empty() || trace.empty()) fail(ErrorCode::invalid_argument, "cross-collision estimate needs two non-empty samples");
    const auto hits = cross_collisions(set, trace);
    if (hits == 0) fail(ErrorCode::undefined_estimate, "no cross-collisions between the samples; increase the budget");
    return static_cast<double>(set.size()) * static_cast<double>(trace.size()) / static_cast<double>(hits);
}

double mutual_proportion_mhrw(const WalkSample& s, const DirectedGraph& g) {
    require_method(s, Method::mhrw, "mutual_proportion_mhrw");
    const double pi = 1.0 / static_cast<double>(g.node_count());
    const double d = s.config.walk_prob;
    return weighted_reciprocity(
        s, g, [pi](NodeId) { return pi; }, [&](NodeId i, NodeId j) { return mhrw_transition(g, d, i, j); });
}

double mutual_proportion_rwwj(const WalkSample& s, const DirectedGraph& g) {
    require_method(s, Method::rwwj, "mutual_proportion_rwwj");
    const double alpha = s.config.jump_weight;
    double z = 0.0;
    for (NodeId v : s.distinct_nodes()) z += rwwj_weight(g, alpha, v);
    return weighted_reciprocity(
        s, g, [&](NodeId v) { return rwwj_weight(g, alpha, v) / z; },
        [&](NodeId i, NodeId j) { return rwwj_transition(g, alpha, i, j); });
}

double mutual_proportion_estimate(const WalkSample& s, const DirectedGraph& g) {
    return s.method == Method::mhrw ? mutual_proportion_mhrw(s, g) : mutual_proportion_rwwj(s, g);
}

}  // namespace gwalk
