#pragma once

#include <span>

#include "gwalk/distribution.hpp"

namespace gwalk {

/// Kolmogorov-Smirnov distance: max |CDF_p(k) - CDF_q(k)| over the union
/// support, using step CDFs.
double ks_d_statistic(const Distribution& p, const Distribution& q);

inline constexpr double default_kl_epsilon = 1e-10;

/// KL(p || q') in nats, where q' adds epsilon to q on every key of the
/// union support and renormalizes. Keys with p(k) = 0 contribute nothing.
double kl_divergence(const Distribution& p, const Distribution& q, double epsilon = default_kl_epsilon);

/// sqrt(mean((x - truth)^2)) / |truth|.
double rrmse(std::span<const double> estimates, double truth);

/// Total variation distance, half the L1 distance between mass functions.
double total_variation(const Distribution& p, const Distribution& q);

}  // namespace gwalk
