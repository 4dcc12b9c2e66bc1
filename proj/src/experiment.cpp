#include "gwalk/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include "gwalk/error.hpp"
#include "gwalk/estimators.hpp"
#include "gwalk/evaluation.hpp"
#include "gwalk/generators.hpp"
#include "gwalk/rng.hpp"
#include "gwalk/trace_io.hpp"

namespace gwalk {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorCode::invalid_argument, "bad value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

std::vector<std::string_view> split_list(std::string_view list) {
    std::vector<std::string_view> parts;
    while (!list.empty()) {
        const auto comma = list.find(',');
        auto part = list.substr(0, comma);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        if (!part.empty()) parts.push_back(part);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return parts;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::io, "error writing " + path.string());
}

json read_json(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, path.string() + ": " + e.what());
    }
}

std::string cdf_csv(const Distribution& d) {
    std::string out = "k,mass,cumulative\n";
    for (const auto& row : d.cdf_rows())
        out += std::to_string(row.key) + "," + format_real(row.mass) + "," + format_real(row.cumulative) + "\n";
    return out;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string replication_tag(Method m, std::size_t r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s_r%03zu", std::string(to_string(m)).c_str(), r);
    return buf;
}

std::string degree_property(Direction dir) {
    return dir == Direction::in ? "in_degree_distribution" : "out_degree_distribution";
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled by exactly one worker, so results stored by index are ordered.
template <typename Fn>
void for_each_index(std::size_t count, unsigned threads, Fn fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::optional<EstimateValue> truth_for(const json& truth, const std::string& property) {
    if (!truth.contains(property) || truth[property].is_null()) return std::nullopt;
    const auto& v = truth[property];
    if (v.is_number()) return EstimateValue{v.get<double>()};
    return EstimateValue{distribution_from_json(v)};
}

}  // namespace

std::string_view to_string(Property p) noexcept {
    switch (p) {
    case Property::degree_distribution: return "degree_distribution";
    case Property::ratio_average: return "ratio_average";
    case Property::order: return "order";
    case Property::mutual_proportion: return "mutual_proportion";
    }
    return "?";
}

std::vector<Property> parse_properties(std::string_view list) {
    std::vector<Property> props;
    for (auto name : split_list(list)) {
        if (name == "all") return {Property::degree_distribution, Property::ratio_average, Property::order,
                                   Property::mutual_proportion};
        if (name == "degree_distribution" || name == "degree")
            props.push_back(Property::degree_distribution);
        else if (name == "ratio_average" || name == "ratio")
            props.push_back(Property::ratio_average);
        else if (name == "order")
            props.push_back(Property::order);
        else if (name == "mutual_proportion" || name == "mutual")
            props.push_back(Property::mutual_proportion);
        else
            fail(ErrorCode::invalid_argument, "unknown property '" + std::string(name) + "'");
    }
    if (props.empty()) fail(ErrorCode::invalid_argument, "no properties requested");
    return props;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    if (key == "graph") {
        graph_path = value;
    } else if (key == "gen") {
        gen = value;
    } else if (key == "method") {
        std::vector<Method> parsed;
        for (auto m : split_list(value)) {
            if (m == "both" || m == "all") {
                parsed = {Method::mhrw, Method::rwwj};
                break;
            }
            parsed.push_back(parse_method(m));
        }
        if (parsed.empty()) fail(ErrorCode::invalid_argument, "no sampling method given");
        methods = std::move(parsed);
    } else if (key == "budget") {
        budget = parse_value<std::uint64_t>(key, value);
    } else if (key == "budget-frac") {
        budget_fraction = parse_value<double>(key, value);
        budget.reset();
    } else if (key == "walk-prob") {
        walk_prob = parse_value<double>(key, value);
    } else if (key == "jump-weight") {
        jump_weight = parse_value<double>(key, value);
    } else if (key == "reps") {
        replications = parse_value<std::uint64_t>(key, value);
    } else if (key == "seed") {
        master_seed = parse_value<std::uint64_t>(key, value);
    } else if (key == "seed-node") {
        if (value == "uniform-random")
            seed_node.reset();
        else
            seed_node = parse_value<ExternalId>(key, value);
    } else if (key == "props") {
        properties = parse_properties(value);
    } else if (key == "out") {
        out_dir = std::string(value);
    } else if (key == "trace") {
        traces.emplace_back(std::string(value));
    } else if (key == "threads") {
        threads = parse_value<unsigned>(key, value);
    } else if (key == "kl-epsilon") {
        kl_epsilon = parse_value<double>(key, value);
    } else {
        fail(ErrorCode::invalid_argument, "unknown experiment setting '" + std::string(key) + "'");
    }
}

void ExperimentConfig::validate() const {
    if (graph_path.empty() && gen.empty()) fail(ErrorCode::invalid_argument, "no graph given (set graph or gen)");
    if (methods.empty()) fail(ErrorCode::invalid_argument, "no sampling method given");
    if (budget && *budget < 1) fail(ErrorCode::invalid_argument, "budget must be at least 1");
    if (!(budget_fraction > 0.0 && budget_fraction <= 1.0))
        fail(ErrorCode::invalid_argument, "budget fraction must lie in (0, 1]");
    if (replications < 1) fail(ErrorCode::invalid_argument, "replication count must be at least 1");
    if (!(kl_epsilon > 0.0)) fail(ErrorCode::invalid_argument, "kl-epsilon must be positive");
    SamplerConfig sc;
    sc.walk_prob = walk_prob;
    sc.jump_weight = jump_weight;
    sc.validate();
}

std::uint64_t ExperimentConfig::resolve_budget(std::size_t node_count) const {
    if (budget) return *budget;
    const auto b = static_cast<std::uint64_t>(std::floor(budget_fraction * static_cast<double>(node_count)));
    return std::max<std::uint64_t>(b, 1);
}

std::uint64_t walk_seed(std::uint64_t master, Method method, std::uint64_t replication) {
    return derive_seed(master, 2 * replication + (method == Method::mhrw ? 0 : 1));
}

std::uint64_t split_seed(std::uint64_t walk) { return derive_seed(walk, 0x5eed); }

DirectedGraph load_experiment_graph(const ExperimentConfig& cfg) {
    if (!cfg.graph_path.empty()) return load_edge_list_file(cfg.graph_path);
    if (!cfg.gen.empty()) return generate(parse_gen_spec(cfg.gen));
    fail(ErrorCode::invalid_argument, "no graph given (set graph or gen)");
}

json ground_truth_json(const DirectedGraph& g, const std::string& source) {
    json t;
    t["source"] = source;
    t["node_count"] = g.node_count();
    t["edge_count"] = g.edge_count();
    t["graph_hash"] = hex64(g.content_hash());
    t["self_loops"] = g.build_stats().self_loops;
    t["duplicate_edges"] = g.build_stats().duplicate_edges;
    t["order"] = static_cast<double>(g.node_count());
    t["in_degree_distribution"] = to_json(degree_distribution(g, Direction::in));
    t["out_degree_distribution"] = to_json(degree_distribution(g, Direction::out));
    try {
        const auto avg = ratio_average(g);
        t["ratio_average"] = avg.value;
        t["ratio_excluded"] = avg.excluded;
    } catch (const Error&) {
        t["ratio_average"] = nullptr;
        t["ratio_excluded"] = g.node_count();
    }
    t["mutual_proportion"] = g.edge_count() > 0 ? json(mutual_proportion(g)) : json(nullptr);
    return t;
}

json cmd_stats(const ExperimentConfig& cfg, const DirectedGraph& g) {
    fs::create_directories(cfg.out_dir);
    const auto truth = ground_truth_json(g, cfg.graph_path.empty() ? cfg.gen : cfg.graph_path);
    write_text(cfg.out_dir / "truth.json", truth.dump(2) + "\n");
    write_text(cfg.out_dir / "truth_in_degree.csv", cdf_csv(degree_distribution(g, Direction::in)));
    write_text(cfg.out_dir / "truth_out_degree.csv", cdf_csv(degree_distribution(g, Direction::out)));
    return truth;
}

std::vector<fs::path> cmd_sample(const ExperimentConfig& cfg, const DirectedGraph& g) {
    cfg.validate();
    const auto dir = cfg.out_dir / "traces";
    fs::create_directories(dir);

    SamplerConfig base;
    base.budget = cfg.resolve_budget(g.node_count());
    base.walk_prob = cfg.walk_prob;
    base.jump_weight = cfg.jump_weight;
    if (cfg.seed_node) {
        auto v = g.index_of(*cfg.seed_node);
        if (!v) fail(ErrorCode::out_of_range, "seed node " + std::to_string(*cfg.seed_node) + " is not in the graph");
        base.seed_node = *v;
    }

    struct Job {
        Method method;
        std::size_t replication;
    };
    std::vector<Job> jobs;
    for (std::size_t r = 0; r < cfg.replications; ++r) {
        for (Method m : cfg.methods) jobs.push_back({m, r});
    }
    std::vector<fs::path> paths(jobs.size());
    for_each_index(jobs.size(), cfg.threads, [&](std::size_t i) {
        SamplerConfig sc = base;
        sc.rng_seed = walk_seed(cfg.master_seed, jobs[i].method, jobs[i].replication);
        const auto sample = run_sampler(g, jobs[i].method, sc);
        paths[i] = dir / (replication_tag(jobs[i].method, jobs[i].replication) + ".trace");
        write_trace_file(paths[i], sample, g);
    });
    return paths;
}

std::vector<EstimateReport> cmd_estimate(const ExperimentConfig& cfg, const DirectedGraph& g) {
    std::vector<fs::path> inputs = cfg.traces;
    if (inputs.empty()) {
        const auto dir = cfg.out_dir / "traces";
        if (!fs::is_directory(dir)) fail(ErrorCode::io, "no traces given and " + dir.string() + " does not exist");
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() == ".trace") inputs.push_back(entry.path());
        }
        // shorter names first keeps r999 ahead of r1000
        std::sort(inputs.begin(), inputs.end(), [](const fs::path& a, const fs::path& b) {
            const auto x = a.filename().string(), y = b.filename().string();
            return std::pair(x.size(), x) < std::pair(y.size(), y);
        });
    }
    if (inputs.empty()) fail(ErrorCode::invalid_argument, "no trace files to estimate from");

    std::vector<WalkSample> mhrw, rwwj;
    for (const auto& path : inputs) {
        auto s = read_trace_file(path, g);
        (s.method == Method::mhrw ? mhrw : rwwj).push_back(std::move(s));
    }

    const auto truth = ground_truth_json(g, cfg.graph_path.empty() ? cfg.gen : cfg.graph_path);
    const auto wants = [&](Property p) {
        return std::find(cfg.properties.begin(), cfg.properties.end(), p) != cfg.properties.end();
    };
    fs::create_directories(cfg.out_dir / "cdf");

    std::vector<EstimateReport> reports;
    auto make = [&](const WalkSample& s, std::size_t r, std::string property, std::string estimator,
                    EstimateValue value) {
        EstimateReport rep;
        rep.ground_truth = truth_for(truth, property);
        rep.property = std::move(property);
        rep.method = s.method;
        rep.estimator = std::move(estimator);
        rep.replication = r;
        rep.estimate = std::move(value);
        rep.config = s.config;
        rep.seeds.master = cfg.master_seed;
        rep.seeds.walk = s.config.rng_seed;
        return rep;
    };
    for (const auto* group : {&mhrw, &rwwj}) {
        for (std::size_t r = 0; r < group->size(); ++r) {
            const auto& s = (*group)[r];
            const bool is_mh = s.method == Method::mhrw;
            const std::string mean_name = is_mh ? "sample_mean" : "ratio_estimator";
            try {
                if (wants(Property::degree_distribution)) {
                    for (Direction dir : {Direction::in, Direction::out}) {
                        auto d = estimate_degree_distribution(s, g, dir);
                        write_text(cfg.out_dir / "cdf" /
                                       (replication_tag(s.method, r) + (dir == Direction::in ? "_in" : "_out") +
                                        "_degree.csv"),
                                   cdf_csv(d));
                        reports.push_back(make(s, r, degree_property(dir), mean_name, std::move(d)));
                    }
                }
                if (wants(Property::ratio_average)) {
                    const auto est = ratio_average_estimate(s, g);
                    auto rep = make(s, r, "ratio_average", mean_name, est.value);
                    rep.details["skipped"] = static_cast<double>(est.skipped);
                    rep.details["used"] = static_cast<double>(est.used);
                    reports.push_back(std::move(rep));
                }
                if (wants(Property::order)) {
                    if (is_mh) {
                        const auto sseed = split_seed(s.config.rng_seed);
                        const auto [first, second] = split_halves(s, sseed);
                        auto rep = make(s, r, "order", "capture_recapture", capture_recapture_order(first, second));
                        rep.seeds.split = sseed;
                        rep.details["first_unique"] = static_cast<double>(first.size());
                        rep.details["second_unique"] = static_cast<double>(second.size());
                        reports.push_back(std::move(rep));
                    } else if (r < mhrw.size()) {
                        const auto uniform = mhrw[r].distinct_nodes();
                        auto rep = make(s, r, "order", "cross_collision", cross_collision_order(uniform, s.trace));
                        rep.seeds.paired = mhrw[r].config.rng_seed;
                        rep.details["collisions"] = static_cast<double>(cross_collisions(uniform, s.trace));
                        rep.details["uniform_set_size"] = static_cast<double>(uniform.size());
                        rep.details["trace_length"] = static_cast<double>(s.trace.size());
                        reports.push_back(std::move(rep));
                    }
                }
                if (wants(Property::mutual_proportion)) {
                    auto rep = make(s, r, "mutual_proportion", "weighted_reciprocity", mutual_proportion_estimate(s, g));
                    rep.details["collected_edges"] = static_cast<double>(s.collected_edges.size());
                    reports.push_back(std::move(rep));
                }
            } catch (const Error& e) {
                fail(e.code(), "estimating from " + std::string(to_string(s.method)) + " replication " +
                                   std::to_string(r) + ": " + e.what());
            }
        }
    }

    json doc;
    doc["reports"] = json::array();
    for (const auto& rep : reports) doc["reports"].push_back(to_json(rep));
    write_text(cfg.out_dir / "reports.json", doc.dump(2) + "\n");
    return reports;
}

void attach_metrics(EstimateReport& r, double kl_epsilon) {
    if (!r.ground_truth) fail(ErrorCode::invalid_argument, "missing ground truth for property '" + r.property + "'");
    r.errors.clear();
    if (r.is_distribution()) {
        const auto* truth = std::get_if<Distribution>(&*r.ground_truth);
        if (!truth) fail(ErrorCode::mismatch, "ground truth of '" + r.property + "' is not a distribution");
        const auto& est = std::get<Distribution>(r.estimate);
        r.errors["d_statistic"] = ks_d_statistic(est, *truth);
        r.errors["kl_divergence"] = kl_divergence(*truth, est, kl_epsilon);
    } else {
        const auto* truth = std::get_if<double>(&*r.ground_truth);
        if (!truth) fail(ErrorCode::mismatch, "ground truth of '" + r.property + "' is not a scalar");
        const double est = std::get<double>(r.estimate);
        r.errors["rrmse"] = rrmse(std::span<const double>(&est, 1), *truth);
    }
}

std::string evaluation_csv(const std::vector<EstimateReport>& reports) {
    struct Group {
        std::string property;
        Method method;
        std::vector<const EstimateReport*> members;
    };
    std::vector<Group> groups;
    for (const auto& r : reports) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return g.property == r.property && g.method == r.method; });
        if (it == groups.end()) {
            groups.push_back({r.property, r.method, {}});
            it = groups.end() - 1;
        }
        it->members.push_back(&r);
    }

    std::string out = "property,method,replications,estimate,truth,d_statistic,kl_divergence,rrmse\n";
    for (const auto& grp : groups) {
        const auto n = static_cast<double>(grp.members.size());
        out += grp.property + "," + std::string(to_string(grp.method)) + "," + std::to_string(grp.members.size()) + ",";
        if (grp.members.front()->is_distribution()) {
            double d = 0.0, kl = 0.0;
            for (const auto* r : grp.members) {
                d += r->errors.at("d_statistic");
                kl += r->errors.at("kl_divergence");
            }
            out += ",," + format_real(d / n) + "," + format_real(kl / n) + ",\n";
        } else {
            std::vector<double> values;
            for (const auto* r : grp.members) values.push_back(std::get<double>(r->estimate));
            const double truth = std::get<double>(*grp.members.front()->ground_truth);
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= n;
            out += format_real(mean) + "," + format_real(truth) + ",,," + format_real(rrmse(values, truth)) + "\n";
        }
    }
    return out;
}

std::vector<EstimateReport> cmd_evaluate(const ExperimentConfig& cfg) {
    const auto truth = read_json(cfg.out_dir / "truth.json");
    const auto doc = read_json(cfg.out_dir / "reports.json");
    if (!doc.contains("reports") || !doc["reports"].is_array())
        fail(ErrorCode::parse, "reports.json lacks a 'reports' array");

    std::vector<EstimateReport> reports;
    for (const auto& j : doc["reports"]) {
        auto r = report_from_json(j);
        r.ground_truth = truth_for(truth, r.property);
        if (!r.ground_truth) fail(ErrorCode::invalid_argument, "truth.json has no value for '" + r.property + "'");
        attach_metrics(r, cfg.kl_epsilon);
        reports.push_back(std::move(r));
    }

    json out;
    out["reports"] = json::array();
    for (const auto& r : reports) out["reports"].push_back(to_json(r));
    write_text(cfg.out_dir / "evaluated_reports.json", out.dump(2) + "\n");
    write_text(cfg.out_dir / "evaluation.csv", evaluation_csv(reports));
    return reports;
}

void cmd_run(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto g = load_experiment_graph(cfg);
    cmd_stats(cfg, g);
    ExperimentConfig run = cfg;
    run.traces = cmd_sample(cfg, g);
    std::sort(run.traces.begin(), run.traces.end());
    cmd_estimate(run, g);
    cmd_evaluate(cfg);
}

}  // namespace gwalk
