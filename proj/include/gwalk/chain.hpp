#pragma once

#include <span>
#include <vector>

#include "gwalk/graph.hpp"
#include "gwalk/samplers.hpp"

namespace gwalk {

/// Dense row-stochastic transition matrix of a sampler's Markov chain.
/// Meant for small graphs, to check samplers and estimators exactly.
class ChainMatrix {
public:
    static constexpr std::size_t default_node_cap = 2000;

    /// `param` is the walk probability for MHRW and the jump weight for RWwJ.
    static ChainMatrix build(const DirectedGraph& g, Method method, double param,
                             std::size_t node_cap = default_node_cap);

    std::size_t size() const noexcept { return n_; }
    Method method() const noexcept { return method_; }
    double param() const noexcept { return param_; }

    double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

    /// Row vector times matrix.
    std::vector<double> left_multiply(std::span<const double> v) const;

private:
    std::size_t n_ = 0;
    Method method_ = Method::mhrw;
    double param_ = 0.0;
    std::vector<double> entries_;
};

struct StationaryResult {
    std::vector<double> pi;
    std::size_t iterations = 0;
    double residual = 0.0;  // L1 norm of pi*M - pi
};

/// Power iteration from the uniform vector until ||pi*M - pi||_1 < tol.
/// Throws no_convergence, with the last residual, after max_iterations.
StationaryResult stationary_distribution(const ChainMatrix& m, double tol, std::size_t max_iterations = 1'000'000);

}  // namespace gwalk
