#include "gwalk/chain.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gwalk/error.hpp"

namespace gwalk {

ChainMatrix ChainMatrix::build(const DirectedGraph& g, Method method, double param, std::size_t node_cap) {
    const auto n = g.node_count();
    if (n == 0) fail(ErrorCode::invalid_argument, "chain matrix of an empty graph");
    if (n > node_cap)
        fail(ErrorCode::invalid_argument,
             "chain matrix needs N <= " + std::to_string(node_cap) + ", graph has N=" + std::to_string(n));

    SamplerConfig cfg;
    if (method == Method::mhrw)
        cfg.walk_prob = param;
    else
        cfg.jump_weight = param;
    cfg.validate();

    ChainMatrix m;
    m.n_ = n;
    m.method_ = method;
    m.param_ = param;
    m.entries_.assign(n * n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        double* row = m.entries_.data() + static_cast<std::size_t>(i) * n;
        if (method == Method::mhrw) {
            double off_diagonal = 0.0;
            for (NodeId j = 0; j < n; ++j) {
                if (j == i) continue;
                row[j] = mhrw_transition(g, param, i, j);
                off_diagonal += row[j];
            }
            row[i] = 1.0 - off_diagonal;
        } else {
            for (NodeId j = 0; j < n; ++j) row[j] = rwwj_transition(g, param, i, j);
        }
    }
    return m;
}

std::vector<double> ChainMatrix::left_multiply(std::span<const double> v) const {
    if (v.size() != n_) fail(ErrorCode::invalid_argument, "vector length does not match chain size");
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        const double vi = v[i];
        if (vi == 0.0) continue;
        const double* r = entries_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) out[j] += vi * r[j];
    }
    return out;
}

StationaryResult stationary_distribution(const ChainMatrix& m, double tol, std::size_t max_iterations) {
    if (!(tol > 0.0)) fail(ErrorCode::invalid_argument, "tolerance must be positive");
    const auto n = m.size();
    StationaryResult result;
    result.pi.assign(n, 1.0 / static_cast<double>(n));
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        auto next = m.left_multiply(result.pi);
        double total = 0.0;
        for (double x : next) total += x;
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= total;
            residual += std::abs(next[i] - result.pi[i]);
        }
        result.pi = std::move(next);
        result.iterations = it;
        result.residual = residual;
        if (residual < tol) return result;
    }
    std::ostringstream msg;
    msg << "power iteration did not converge in " << max_iterations << " iterations (residual " << result.residual
        << ", tolerance " << tol << ")";
    fail(ErrorCode::no_convergence, msg.str());
}

}  // namespace gwalk
