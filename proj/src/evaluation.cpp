#include "gwalk/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gwalk/error.hpp"

namespace gwalk {

namespace {

std::set<Distribution::Key> union_support(const Distribution& p, const Distribution& q) {
    std::set<Distribution::Key> keys;
    for (const auto& [k, m] : p.masses()) keys.insert(k);
    for (const auto& [k, m] : q.masses()) keys.insert(k);
    return keys;
}

}  // namespace

double ks_d_statistic(const Distribution& p, const Distribution& q) {
    double cp = 0.0;
    double cq = 0.0;
    double d = 0.0;
    for (auto k : union_support(p, q)) {
        cp += p.mass(k);
        cq += q.mass(k);
        d = std::max(d, std::abs(cp - cq));
    }
    return std::min(d, 1.0);
}

double kl_divergence(const Distribution& p, const Distribution& q, double epsilon) {
    if (!(epsilon > 0.0)) fail(ErrorCode::invalid_argument, "KL smoothing epsilon must be positive");
    const auto keys = union_support(p, q);
    const double normalizer = 1.0 + epsilon * static_cast<double>(keys.size());
    double kl = 0.0;
    for (auto k : keys) {
        const double pk = p.mass(k);
        if (pk == 0.0) continue;
        const double qk = (q.mass(k) + epsilon) / normalizer;
        kl += pk * std::log(pk / qk);
    }
    return std::max(kl, 0.0);
}

double rrmse(std::span<const double> estimates, double truth) {
    if (estimates.empty()) fail(ErrorCode::invalid_argument, "rrmse needs at least one estimate");
    if (truth == 0.0) fail(ErrorCode::invalid_argument, "rrmse is undefined for a zero true value");
    double sq = 0.0;
    for (double x : estimates) sq += (x - truth) * (x - truth);
    return std::sqrt(sq / static_cast<double>(estimates.size())) / std::abs(truth);
}

double total_variation(const Distribution& p, const Distribution& q) {
    double l1 = 0.0;
    for (auto k : union_support(p, q)) l1 += std::abs(p.mass(k) - q.mass(k));
    return 0.5 * l1;
}

}  // namespace gwalk
