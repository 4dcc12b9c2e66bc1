#include "gwalk/gwalk.h"

#include <cstring>
#include <new>
#include <string>

#include "gwalk/chain.hpp"
#include "gwalk/error.hpp"
#include "gwalk/estimators.hpp"
#include "gwalk/evaluation.hpp"
#include "gwalk/experiment.hpp"
#include "gwalk/generators.hpp"
#include "gwalk/trace_io.hpp"

struct gw_graph {
    gwalk::DirectedGraph graph;
};
struct gw_sample {
    gwalk::WalkSample sample;
};
struct gw_chain {
    gwalk::ChainMatrix matrix;
};
struct gw_experiment {
    gwalk::ExperimentConfig config;
    std::string summary = "{}";
};

namespace {

thread_local std::string last_error;

struct BufferTooSmall {};

gw_status to_status(gwalk::ErrorCode code) {
    using gwalk::ErrorCode;
    switch (code) {
    case ErrorCode::invalid_argument: return GW_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return GW_ERR_PARSE;
    case ErrorCode::io: return GW_ERR_IO;
    case ErrorCode::out_of_range: return GW_ERR_OUT_OF_RANGE;
    case ErrorCode::undefined_estimate: return GW_ERR_UNDEFINED;
    case ErrorCode::no_convergence: return GW_ERR_NO_CONVERGENCE;
    case ErrorCode::mismatch: return GW_ERR_MISMATCH;
    }
    return GW_ERR_INTERNAL;
}

gw_status set_error(gw_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Runs fn, translating exceptions into status codes.
template <typename Fn>
gw_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        fn();
        return GW_OK;
    } catch (const BufferTooSmall&) {
        return set_error(GW_ERR_BUFFER_TOO_SMALL, "buffer too small");
    } catch (const gwalk::Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(GW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(GW_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(GW_ERR_INTERNAL, "unknown error");
    }
}

#define GW_REQUIRE(ptr)                                                              \
    do {                                                                             \
        if ((ptr) == nullptr) return set_error(GW_ERR_NULL_POINTER, #ptr " is NULL"); \
    } while (0)

gwalk::Direction to_direction(gw_direction d) { return d == GW_IN ? gwalk::Direction::in : gwalk::Direction::out; }
gwalk::Method to_method(gw_method m) {
    if (m != GW_MHRW && m != GW_RWWJ) gwalk::fail(gwalk::ErrorCode::invalid_argument, "unknown method");
    return m == GW_MHRW ? gwalk::Method::mhrw : gwalk::Method::rwwj;
}

/// Copies a dense vector into a caller buffer.
template <typename T, typename Src>
void copy_out(const Src& src, T* buf, std::size_t capacity, std::size_t* len) {
    if (len) *len = src.size();
    if (src.size() > capacity || (buf == nullptr && !src.empty()))
        throw BufferTooSmall{};
    for (std::size_t i = 0; i < src.size(); ++i) buf[i] = static_cast<T>(src[i]);
}

std::vector<double> dense(const gwalk::Distribution& d) {
    std::vector<double> out(d.empty() ? 0 : d.support_max() + 1, 0.0);
    for (const auto& [k, m] : d.masses()) out[k] = m;
    return out;
}

gwalk::Distribution from_dense(const double* mass, std::size_t len) {
    if (mass == nullptr && len > 0) gwalk::fail(gwalk::ErrorCode::invalid_argument, "mass array is NULL");
    std::map<gwalk::Distribution::Key, double> weights;
    for (std::size_t k = 0; k < len; ++k) weights[k] = mass[k];
    return gwalk::Distribution::from_weights(weights);
}

gwalk::SamplerConfig to_config(const gw_sampler_config& c) {
    gwalk::SamplerConfig cfg;
    cfg.budget = c.budget;
    cfg.walk_prob = c.walk_prob;
    cfg.jump_weight = c.jump_weight;
    cfg.rng_seed = c.rng_seed;
    if (c.has_seed_node) cfg.seed_node = c.seed_node;
    return cfg;
}

template <typename Handle, typename Build>
gw_status make_handle(Handle** out, Build&& build) {
    GW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new Handle{build()}; });
}

}  // namespace

extern "C" {

const char* gw_version(void) { return "1.0.0"; }
const char* gw_last_error(void) { return last_error.c_str(); }

const char* gw_status_name(gw_status status) {
    switch (status) {
    case GW_OK: return "ok";
    case GW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GW_ERR_PARSE: return "parse error";
    case GW_ERR_IO: return "i/o error";
    case GW_ERR_OUT_OF_RANGE: return "out of range";
    case GW_ERR_UNDEFINED: return "estimate undefined";
    case GW_ERR_NO_CONVERGENCE: return "no convergence";
    case GW_ERR_MISMATCH: return "mismatch";
    case GW_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case GW_ERR_NULL_POINTER: return "null pointer";
    case GW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

// graphs

gw_status gw_graph_load_file(const char* path, gw_graph** out) {
    GW_REQUIRE(path);
    return make_handle(out, [&] { return gwalk::load_edge_list_file(path); });
}

gw_status gw_graph_parse(const char* text, size_t len, gw_graph** out) {
    GW_REQUIRE(text);
    return make_handle(out, [&] { return gwalk::parse_edge_list(std::string_view(text, len)); });
}

gw_status gw_graph_generate(const char* spec, gw_graph** out) {
    GW_REQUIRE(spec);
    return make_handle(out, [&] { return gwalk::generate(gwalk::parse_gen_spec(spec)); });
}

gw_status gw_graph_from_edges(size_t node_count, const uint32_t* src, const uint32_t* dst, size_t edge_count,
                              gw_graph** out) {
    if (edge_count > 0) {
        GW_REQUIRE(src);
        GW_REQUIRE(dst);
    }
    return make_handle(out, [&] {
        std::vector<gwalk::Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges[i] = {src[i], dst[i]};
        return gwalk::DirectedGraph::from_edges(node_count, std::move(edges));
    });
}

gw_status gw_graph_symmetrize(const gw_graph* g, gw_graph** out) {
    GW_REQUIRE(g);
    return make_handle(out, [&] { return gwalk::symmetrize(g->graph); });
}

void gw_graph_free(gw_graph* g) { delete g; }

size_t gw_graph_node_count(const gw_graph* g) { return g ? g->graph.node_count() : 0; }
size_t gw_graph_edge_count(const gw_graph* g) { return g ? g->graph.edge_count() : 0; }
uint64_t gw_graph_hash(const gw_graph* g) { return g ? g->graph.content_hash() : 0; }

gw_status gw_graph_build_stats(const gw_graph* g, uint64_t* duplicate_edges, uint64_t* self_loops) {
    GW_REQUIRE(g);
    if (duplicate_edges) *duplicate_edges = g->graph.build_stats().duplicate_edges;
    if (self_loops) *self_loops = g->graph.build_stats().self_loops;
    return GW_OK;
}

gw_status gw_graph_node_id(const gw_graph* g, uint32_t node, uint64_t* id) {
    GW_REQUIRE(g);
    GW_REQUIRE(id);
    return guarded([&] { *id = g->graph.external_id(node); });
}

gw_status gw_graph_node_index(const gw_graph* g, uint64_t id, uint32_t* node) {
    GW_REQUIRE(g);
    GW_REQUIRE(node);
    return guarded([&] {
        auto v = g->graph.index_of(id);
        if (!v) gwalk::fail(gwalk::ErrorCode::out_of_range, "node id " + std::to_string(id) + " not in graph");
        *node = *v;
    });
}

gw_status gw_graph_degree(const gw_graph* g, uint32_t node, gw_direction dir, size_t* degree) {
    GW_REQUIRE(g);
    GW_REQUIRE(degree);
    return guarded([&] { *degree = g->graph.degree(node, to_direction(dir)); });
}

gw_status gw_graph_has_edge(const gw_graph* g, uint32_t src, uint32_t dst, int* exists) {
    GW_REQUIRE(g);
    GW_REQUIRE(exists);
    return guarded([&] { *exists = g->graph.has_edge(src, dst) ? 1 : 0; });
}

gw_status gw_graph_ratio(const gw_graph* g, uint32_t node, double* ratio, int* defined) {
    GW_REQUIRE(g);
    GW_REQUIRE(ratio);
    GW_REQUIRE(defined);
    return guarded([&] {
        auto r = gwalk::follower_ratio(g->graph, node);
        *defined = r ? 1 : 0;
        *ratio = r.value_or(0.0);
    });
}

gw_status gw_graph_ratio_average(const gw_graph* g, double* average, size_t* excluded) {
    GW_REQUIRE(g);
    GW_REQUIRE(average);
    return guarded([&] {
        const auto r = gwalk::ratio_average(g->graph);
        *average = r.value;
        if (excluded) *excluded = r.excluded;
    });
}

gw_status gw_graph_mutual_proportion(const gw_graph* g, double* proportion) {
    GW_REQUIRE(g);
    GW_REQUIRE(proportion);
    return guarded([&] { *proportion = gwalk::mutual_proportion(g->graph); });
}

gw_status gw_graph_degree_distribution(const gw_graph* g, gw_direction dir, double* mass, size_t capacity,
                                       size_t* len) {
    GW_REQUIRE(g);
    return guarded(
        [&] { copy_out(dense(gwalk::degree_distribution(g->graph, to_direction(dir))), mass, capacity, len); });
}

// sampling

void gw_sampler_config_init(gw_sampler_config* cfg) {
    if (cfg == nullptr) return;
    const gwalk::SamplerConfig defaults;
    cfg->budget = defaults.budget;
    cfg->walk_prob = defaults.walk_prob;
    cfg->jump_weight = defaults.jump_weight;
    cfg->rng_seed = defaults.rng_seed;
    cfg->has_seed_node = 0;
    cfg->seed_node = 0;
}

gw_status gw_sample_run(const gw_graph* g, gw_method method, const gw_sampler_config* cfg, gw_sample** out) {
    GW_REQUIRE(g);
    GW_REQUIRE(cfg);
    return make_handle(out, [&] { return gwalk::run_sampler(g->graph, to_method(method), to_config(*cfg)); });
}

gw_status gw_sample_read(const gw_graph* g, const char* path, gw_sample** out) {
    GW_REQUIRE(g);
    GW_REQUIRE(path);
    return make_handle(out, [&] { return gwalk::read_trace_file(path, g->graph); });
}

gw_status gw_sample_write(const gw_sample* s, const gw_graph* g, const char* path) {
    GW_REQUIRE(s);
    GW_REQUIRE(g);
    GW_REQUIRE(path);
    return guarded([&] { gwalk::write_trace_file(path, s->sample, g->graph); });
}

void gw_sample_free(gw_sample* s) { delete s; }

gw_method gw_sample_method(const gw_sample* s) {
    return s && s->sample.method == gwalk::Method::rwwj ? GW_RWWJ : GW_MHRW;
}
size_t gw_sample_length(const gw_sample* s) { return s ? s->sample.trace.size() : 0; }
size_t gw_sample_distinct_count(const gw_sample* s) { return s ? s->sample.distinct_count() : 0; }
uint32_t gw_sample_start(const gw_sample* s) { return s ? s->sample.start : 0; }

gw_status gw_sample_trace(const gw_sample* s, uint32_t* nodes, gw_step_kind* kinds, size_t capacity, size_t* len) {
    GW_REQUIRE(s);
    return guarded([&] {
        copy_out(s->sample.trace, nodes, capacity, len);
        if (kinds) {
            for (std::size_t i = 0; i < s->sample.steps.size(); ++i)
                kinds[i] = static_cast<gw_step_kind>(s->sample.steps[i].kind);
        }
    });
}

gw_status gw_sample_edges(const gw_sample* s, uint32_t* src, uint32_t* dst, size_t capacity, size_t* len) {
    GW_REQUIRE(s);
    return guarded([&] {
        const auto& edges = s->sample.collected_edges;
        if (len) *len = edges.size();
        if (edges.size() > capacity || ((src == nullptr || dst == nullptr) && !edges.empty()))
            throw BufferTooSmall{};
        for (std::size_t i = 0; i < edges.size(); ++i) {
            src[i] = edges[i].src;
            dst[i] = edges[i].dst;
        }
    });
}

gw_status gw_sample_split_halves(const gw_sample* s, uint64_t rng_seed, uint32_t* first, size_t first_capacity,
                                 size_t* first_len, uint32_t* second, size_t second_capacity, size_t* second_len) {
    GW_REQUIRE(s);
    return guarded([&] {
        const auto [a, b] = gwalk::split_halves(s->sample, rng_seed);
        if (first_len) *first_len = a.size();
        if (second_len) *second_len = b.size();
        copy_out(a, first, first_capacity, first_len);
        copy_out(b, second, second_capacity, second_len);
    });
}

// chains

gw_status gw_chain_build(const gw_graph* g, gw_method method, double param, size_t node_cap, gw_chain** out) {
    GW_REQUIRE(g);
    return make_handle(out, [&] {
        return gwalk::ChainMatrix::build(g->graph, to_method(method), param,
                                         node_cap == 0 ? gwalk::ChainMatrix::default_node_cap : node_cap);
    });
}

void gw_chain_free(gw_chain* c) { delete c; }
size_t gw_chain_size(const gw_chain* c) { return c ? c->matrix.size() : 0; }

gw_status gw_chain_entry(const gw_chain* c, size_t i, size_t j, double* p) {
    GW_REQUIRE(c);
    GW_REQUIRE(p);
    if (i >= c->matrix.size() || j >= c->matrix.size()) return set_error(GW_ERR_OUT_OF_RANGE, "chain index out of range");
    *p = c->matrix.at(i, j);
    return GW_OK;
}

gw_status gw_chain_stationary(const gw_chain* c, double tol, double* pi, size_t capacity, size_t* len) {
    GW_REQUIRE(c);
    return guarded([&] {
        if (len) *len = c->matrix.size();
        if (capacity < c->matrix.size() || pi == nullptr)
            throw BufferTooSmall{};
        copy_out(gwalk::stationary_distribution(c->matrix, tol).pi, pi, capacity, len);
    });
}

// estimators

gw_status gw_estimate_nodal_mean(const gw_sample* s, const gw_graph* g, gw_nodal_kind kind, double k,
                                 gw_direction dir, double* value, size_t* skipped) {
    GW_REQUIRE(s);
    GW_REQUIRE(g);
    GW_REQUIRE(value);
    return guarded([&] {
        gwalk::NodalFunction f = gwalk::NodalFunction::constant_one();
        switch (kind) {
        case GW_F_DEGREE_INDICATOR:
            if (k < 0) gwalk::fail(gwalk::ErrorCode::invalid_argument, "degree must be non-negative");
            f = gwalk::NodalFunction::degree_indicator(static_cast<gwalk::Distribution::Key>(k), to_direction(dir));
            break;
        case GW_F_RATIO_INDICATOR: f = gwalk::NodalFunction::ratio_indicator(k); break;
        case GW_F_RATIO_VALUE: f = gwalk::NodalFunction::ratio_value(); break;
        case GW_F_CONSTANT_ONE: break;
        default: gwalk::fail(gwalk::ErrorCode::invalid_argument, "unknown nodal function kind");
        }
        const auto est = s->sample.method == gwalk::Method::mhrw ? gwalk::mh_mean(s->sample, g->graph, f)
                                                                  : gwalk::rw_ratio_estimate(s->sample, g->graph, f);
        *value = est.value;
        if (skipped) *skipped = est.skipped;
    });
}

gw_status gw_estimate_degree_distribution(const gw_sample* s, const gw_graph* g, gw_direction dir, double* mass,
                                          size_t capacity, size_t* len) {
    GW_REQUIRE(s);
    GW_REQUIRE(g);
    return guarded([&] {
        copy_out(dense(gwalk::estimate_degree_distribution(s->sample, g->graph, to_direction(dir))), mass, capacity,
                 len);
    });
}

gw_status gw_estimate_ratio_average(const gw_sample* s, const gw_graph* g, double* value, size_t* skipped) {
    GW_REQUIRE(s);
    GW_REQUIRE(g);
    GW_REQUIRE(value);
    return guarded([&] {
        const auto est = gwalk::ratio_average_estimate(s->sample, g->graph);
        *value = est.value;
        if (skipped) *skipped = est.skipped;
    });
}

gw_status gw_estimate_mutual_proportion(const gw_sample* s, const gw_graph* g, double* value) {
    GW_REQUIRE(s);
    GW_REQUIRE(g);
    GW_REQUIRE(value);
    return guarded([&] { *value = gwalk::mutual_proportion_estimate(s->sample, g->graph); });
}

gw_status gw_capture_recapture_order(const uint32_t* first, size_t first_len, const uint32_t* second,
                                     size_t second_len, double* order) {
    GW_REQUIRE(order);
    if (first_len) GW_REQUIRE(first);
    if (second_len) GW_REQUIRE(second);
    return guarded([&] {
        *order = gwalk::capture_recapture_order({first, first_len}, {second, second_len});
    });
}

gw_status gw_cross_collision_order(const uint32_t* uniform_set, size_t set_len, const uint32_t* trace,
                                   size_t trace_len, double* order) {
    GW_REQUIRE(order);
    if (set_len) GW_REQUIRE(uniform_set);
    if (trace_len) GW_REQUIRE(trace);
    return guarded([&] { *order = gwalk::cross_collision_order({uniform_set, set_len}, {trace, trace_len}); });
}

// metrics

gw_status gw_ks_d_statistic(const double* p, size_t p_len, const double* q, size_t q_len, double* d) {
    GW_REQUIRE(d);
    return guarded([&] { *d = gwalk::ks_d_statistic(from_dense(p, p_len), from_dense(q, q_len)); });
}

gw_status gw_kl_divergence(const double* p, size_t p_len, const double* q, size_t q_len, double epsilon, double* kl) {
    GW_REQUIRE(kl);
    return guarded([&] { *kl = gwalk::kl_divergence(from_dense(p, p_len), from_dense(q, q_len), epsilon); });
}

gw_status gw_rrmse(const double* estimates, size_t len, double truth, double* value) {
    GW_REQUIRE(value);
    if (len) GW_REQUIRE(estimates);
    return guarded([&] { *value = gwalk::rrmse({estimates, len}, truth); });
}

// experiment pipeline

gw_status gw_experiment_create(gw_experiment** out) {
    return make_handle(out, [] { return gwalk::ExperimentConfig{}; });
}

void gw_experiment_free(gw_experiment* e) { delete e; }

gw_status gw_experiment_set(gw_experiment* e, const char* key, const char* value) {
    GW_REQUIRE(e);
    GW_REQUIRE(key);
    GW_REQUIRE(value);
    return guarded([&] { e->config.set(key, value); });
}

gw_status gw_experiment_stats(gw_experiment* e) {
    GW_REQUIRE(e);
    return guarded([&] {
        const auto g = gwalk::load_experiment_graph(e->config);
        e->summary = gwalk::cmd_stats(e->config, g).dump();
    });
}

gw_status gw_experiment_sample(gw_experiment* e) {
    GW_REQUIRE(e);
    return guarded([&] {
        e->config.validate();
        const auto g = gwalk::load_experiment_graph(e->config);
        nlohmann::json files = nlohmann::json::array();
        for (const auto& p : gwalk::cmd_sample(e->config, g)) files.push_back(p.string());
        e->summary = nlohmann::json{{"budget", e->config.resolve_budget(g.node_count())}, {"traces", files}}.dump();
    });
}

gw_status gw_experiment_estimate(gw_experiment* e) {
    GW_REQUIRE(e);
    return guarded([&] {
        const auto g = gwalk::load_experiment_graph(e->config);
        const auto reports = gwalk::cmd_estimate(e->config, g);
        e->summary = nlohmann::json{{"reports", reports.size()}}.dump();
    });
}

gw_status gw_experiment_evaluate(gw_experiment* e) {
    GW_REQUIRE(e);
    return guarded([&] {
        const auto reports = gwalk::cmd_evaluate(e->config);
        e->summary = nlohmann::json{{"reports", reports.size()}, {"table", gwalk::evaluation_csv(reports)}}.dump();
    });
}

gw_status gw_experiment_run(gw_experiment* e) {
    GW_REQUIRE(e);
    return guarded([&] {
        gwalk::cmd_run(e->config);
        e->summary = nlohmann::json{{"out", e->config.out_dir.string()}}.dump();
    });
}

const char* gw_experiment_summary(const gw_experiment* e) { return e ? e->summary.c_str() : ""; }

}  // extern "C"
