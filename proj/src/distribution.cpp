#include "gwalk/distribution.hpp"

#include "gwalk/error.hpp"

namespace gwalk {

Distribution Distribution::from_weights(const std::map<Key, double>& weights) {
    double total = 0.0;
    for (const auto& [k, w] : weights) {
        if (!(w >= 0.0)) fail(ErrorCode::invalid_argument, "distribution weight must be non-negative");
        total += w;
    }
    if (!(total > 0.0)) fail(ErrorCode::invalid_argument, "distribution has no positive weight");
    Distribution d;
    for (const auto& [k, w] : weights) {
        if (w > 0.0) d.mass_.emplace(k, w / total);
    }
    return d;
}

Distribution Distribution::from_counts(const std::vector<Key>& keys) {
    std::map<Key, double> counts;
    for (Key k : keys) counts[k] += 1.0;
    return from_weights(counts);
}

double Distribution::mass(Key k) const {
    auto it = mass_.find(k);
    return it == mass_.end() ? 0.0 : it->second;
}

Distribution::Key Distribution::support_max() const {
    if (mass_.empty()) fail(ErrorCode::invalid_argument, "empty distribution has no support");
    return mass_.rbegin()->first;
}

double Distribution::cdf(Key k) const {
    double acc = 0.0;
    for (auto it = mass_.begin(); it != mass_.end() && it->first <= k; ++it) acc += it->second;
    return acc;
}

std::vector<Distribution::Row> Distribution::cdf_rows() const {
    std::vector<Row> rows;
    rows.reserve(mass_.size());
    double acc = 0.0;
    for (const auto& [k, m] : mass_) {
        acc += m;
        rows.push_back({k, m, acc});
    }
    return rows;
}

double Distribution::total() const {
    double acc = 0.0;
    for (const auto& [k, m] : mass_) acc += m;
    return acc;
}

}  // namespace gwalk
