#include "gwalk/report.hpp"

#include <charconv>
#include <cmath>

#include "gwalk/error.hpp"

namespace gwalk {

using nlohmann::json;

namespace {

json value_to_json(const EstimateValue& v) {
    if (const auto* x = std::get_if<double>(&v)) return *x;
    return to_json(std::get<Distribution>(v));
}

EstimateValue value_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    return distribution_from_json(j);
}

[[noreturn]] void schema_error(const std::string& what) { fail(ErrorCode::parse, "report schema: " + what); }

void require(const char* key, bool ok, const char* type) {
    if (!ok) schema_error(std::string("field '") + key + "' must be " + type);
}

void check_value(const json& v, const char* key, bool is_dist) {
    if (is_dist) {
        require(key, v.is_object() && !v.empty(), "a non-empty distribution object");
        double total = 0.0;
        for (const auto& [k, m] : v.items()) {
            Distribution::Key parsed{};
            auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), parsed);
            if (ec != std::errc{} || ptr != k.data() + k.size())
                schema_error(std::string("distribution key '") + k + "' in '" + key + "' is not a non-negative integer");
            if (!m.is_number() || m.get<double>() < 0.0 || m.get<double>() > 1.0)
                schema_error(std::string("mass for key ") + k + " in '" + key + "' must be a number in [0,1]");
            total += m.get<double>();
        }
        if (std::abs(total - 1.0) > 1e-9) schema_error(std::string("masses in '") + key + "' do not sum to 1");
    } else {
        require(key, v.is_number(), "a number");
    }
}

}  // namespace

json to_json(const Distribution& d) {
    json j = json::object();
    for (const auto& [k, m] : d.masses()) j[std::to_string(k)] = m;
    return j;
}

Distribution distribution_from_json(const json& j) {
    if (!j.is_object()) schema_error("distribution must be an object");
    std::map<Distribution::Key, double> weights;
    for (const auto& [k, m] : j.items()) weights[std::stoull(k)] = m.get<double>();
    return Distribution::from_weights(weights);
}

json to_json(const EstimateReport& r) {
    json j;
    j["property"] = r.property;
    j["method"] = std::string(to_string(r.method));
    j["estimator"] = r.estimator;
    j["replication"] = r.replication;
    j["kind"] = r.is_distribution() ? "distribution" : "scalar";
    j["estimate"] = value_to_json(r.estimate);
    j["ground_truth"] = r.ground_truth ? value_to_json(*r.ground_truth) : json(nullptr);
    j["errors"] = json::object();
    for (const auto& [k, v] : r.errors) j["errors"][k] = v;
    j["details"] = json::object();
    for (const auto& [k, v] : r.details) j["details"][k] = v;
    j["config"] = {{"budget", r.config.budget},
                   {"walk_prob", r.config.walk_prob},
                   {"jump_weight", r.config.jump_weight},
                   {"rng_seed", r.config.rng_seed},
                   {"seed_node", r.config.seed_node ? json(*r.config.seed_node) : json("uniform-random")}};
    j["seeds"] = {{"master", r.seeds.master}, {"walk", r.seeds.walk}};
    if (r.seeds.split) j["seeds"]["split"] = *r.seeds.split;
    if (r.seeds.paired) j["seeds"]["paired"] = *r.seeds.paired;
    return j;
}

EstimateReport report_from_json(const json& j) {
    validate_report_json(j);
    EstimateReport r;
    r.property = j["property"].get<std::string>();
    r.method = parse_method(j["method"].get<std::string>());
    r.estimator = j["estimator"].get<std::string>();
    r.replication = j["replication"].get<std::size_t>();
    r.estimate = value_from_json(j["estimate"]);
    if (!j["ground_truth"].is_null()) r.ground_truth = value_from_json(j["ground_truth"]);
    for (const auto& [k, v] : j["errors"].items()) r.errors[k] = v.get<double>();
    for (const auto& [k, v] : j["details"].items()) r.details[k] = v.get<double>();
    const auto& c = j["config"];
    r.config.budget = c["budget"].get<std::uint64_t>();
    r.config.walk_prob = c["walk_prob"].get<double>();
    r.config.jump_weight = c["jump_weight"].get<double>();
    r.config.rng_seed = c["rng_seed"].get<std::uint64_t>();
    if (c["seed_node"].is_number()) r.config.seed_node = c["seed_node"].get<NodeId>();
    const auto& s = j["seeds"];
    r.seeds.master = s["master"].get<std::uint64_t>();
    r.seeds.walk = s["walk"].get<std::uint64_t>();
    if (s.contains("split")) r.seeds.split = s["split"].get<std::uint64_t>();
    if (s.contains("paired")) r.seeds.paired = s["paired"].get<std::uint64_t>();
    return r;
}

void validate_report_json(const json& j) {
    if (!j.is_object()) schema_error("report must be an object");
    for (const char* key : {"property", "method", "estimator", "replication", "kind", "estimate", "ground_truth",
                            "errors", "details", "config", "seeds"}) {
        if (!j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    }
    require("property", j["property"].is_string(), "a string");
    require("method", j["method"].is_string() && (j["method"] == "mhrw" || j["method"] == "rwwj"),
            "\"mhrw\" or \"rwwj\"");
    require("estimator", j["estimator"].is_string(), "a string");
    require("replication", j["replication"].is_number_unsigned(), "a non-negative integer");
    require("kind", j["kind"] == "scalar" || j["kind"] == "distribution", "\"scalar\" or \"distribution\"");
    const bool is_dist = j["kind"] == "distribution";
    check_value(j["estimate"], "estimate", is_dist);
    if (!j["ground_truth"].is_null()) check_value(j["ground_truth"], "ground_truth", is_dist);

    require("errors", j["errors"].is_object(), "an object");
    for (const auto& [k, v] : j["errors"].items()) {
        if (k != "d_statistic" && k != "kl_divergence" && k != "rrmse") schema_error("unknown error metric '" + k + "'");
        if (!v.is_number() || v.get<double>() < 0.0) schema_error("error metric '" + k + "' must be a non-negative number");
        if (k == "d_statistic" && v.get<double>() > 1.0) schema_error("d_statistic must lie in [0,1]");
    }
    require("details", j["details"].is_object(), "an object");
    for (const auto& [k, v] : j["details"].items()) {
        if (!v.is_number()) schema_error("detail '" + k + "' must be a number");
    }

    const auto& c = j["config"];
    require("config", c.is_object(), "an object");
    for (const char* key : {"budget", "walk_prob", "jump_weight", "rng_seed", "seed_node"}) {
        if (!c.contains(key)) schema_error(std::string("config lacks '") + key + "'");
    }
    require("config.budget", c["budget"].is_number_unsigned() && c["budget"].get<std::uint64_t>() >= 1,
            "a positive integer");
    require("config.walk_prob", c["walk_prob"].is_number(), "a number");
    require("config.jump_weight", c["jump_weight"].is_number(), "a number");
    require("config.rng_seed", c["rng_seed"].is_number_unsigned(), "an unsigned integer");
    require("config.seed_node", c["seed_node"].is_number_unsigned() || c["seed_node"] == "uniform-random",
            "a node index or \"uniform-random\"");

    const auto& s = j["seeds"];
    require("seeds", s.is_object() && s.contains("master") && s.contains("walk"), "an object with master and walk");
    for (const auto& [k, v] : s.items()) {
        if (!v.is_number_unsigned()) schema_error("seed '" + k + "' must be an unsigned integer");
    }
}

}  // namespace gwalk
