#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "gwalk/distribution.hpp"
#include "gwalk/samplers.hpp"

namespace gwalk {

using EstimateValue = std::variant<double, Distribution>;

struct ReportSeeds {
    std::uint64_t master = 0;
    std::uint64_t walk = 0;
    std::optional<std::uint64_t> split;   // capture-recapture half split
    std::optional<std::uint64_t> paired;  // walk seed of the MHRW trace paired for cross-collision
};

/// One estimate of one property from one replication.
struct EstimateReport {
    std::string property;
    Method method = Method::mhrw;
    std::string estimator;
    std::size_t replication = 0;
    EstimateValue estimate = 0.0;
    std::optional<EstimateValue> ground_truth;
    std::map<std::string, double> errors;   // d_statistic, kl_divergence, rrmse
    std::map<std::string, double> details;  // skipped counts, sample sizes
    SamplerConfig config;
    ReportSeeds seeds;

    bool is_distribution() const { return std::holds_alternative<Distribution>(estimate); }
};

nlohmann::json to_json(const Distribution& d);
Distribution distribution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EstimateReport& r);
EstimateReport report_from_json(const nlohmann::json& j);

/// Checks a report document against the schema described in the README.
/// Throws Error(parse) naming the first violation.
void validate_report_json(const nlohmann::json& j);

}  // namespace gwalk
