#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace gwalk {

/// Probability mass function over non-negative integer keys.
class Distribution {
public:
    using Key = std::uint64_t;

    Distribution() = default;

    /// Normalizes non-negative weights into a distribution. Zero-weight keys
    /// are dropped. Throws if the total weight is not positive.
    static Distribution from_weights(const std::map<Key, double>& weights);

    /// Empirical distribution of a list of keys.
    static Distribution from_counts(const std::vector<Key>& keys);

    static Distribution point(Key k) { return from_weights({{k, 1.0}}); }

    double mass(Key k) const;
    const std::map<Key, double>& masses() const noexcept { return mass_; }
    bool empty() const noexcept { return mass_.empty(); }
    Key support_max() const;

    /// Step CDF: P(X <= k).
    double cdf(Key k) const;

    /// (k, mass, cumulative) rows in key order.
    struct Row {
        Key key;
        double mass;
        double cumulative;
    };
    std::vector<Row> cdf_rows() const;

    double total() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::map<Key, double> mass_;
};

}  // namespace gwalk
