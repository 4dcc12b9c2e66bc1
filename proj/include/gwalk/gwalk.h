/*
 * gwalk C API.
 *
 * All functions returning gw_status report failures through the status code;
 * gw_last_error() then holds a message for the calling thread. Handles are
 * opaque and must be released with the matching *_free function. Node
 * arguments are dense indices in [0, node_count); use gw_graph_node_id and
 * gw_graph_node_index to translate from/to the ids in the input file.
 *
 * Functions that fill caller buffers take a capacity and report the needed
 * length through *len. When the buffer is too small they return
 * GW_ERR_BUFFER_TOO_SMALL with *len set, so a NULL/0 call queries the size.
 */
#ifndef GWALK_H
#define GWALK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GWALK_BUILDING)
#    define GWALK_API __declspec(dllexport)
#  else
#    define GWALK_API __declspec(dllimport)
#  endif
#else
#  define GWALK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gw_status {
    GW_OK = 0,
    GW_ERR_INVALID_ARGUMENT = 1,
    GW_ERR_PARSE = 2,
    GW_ERR_IO = 3,
    GW_ERR_OUT_OF_RANGE = 4,
    GW_ERR_UNDEFINED = 5, /* estimate undefined for this input */
    GW_ERR_NO_CONVERGENCE = 6,
    GW_ERR_MISMATCH = 7, /* e.g. trace recorded on another graph */
    GW_ERR_BUFFER_TOO_SMALL = 8,
    GW_ERR_NULL_POINTER = 9,
    GW_ERR_INTERNAL = 10
} gw_status;

typedef enum gw_method { GW_MHRW = 0, GW_RWWJ = 1 } gw_method;
typedef enum gw_direction { GW_IN = 0, GW_OUT = 1 } gw_direction;
typedef enum gw_step_kind { GW_STEP_WALK = 0, GW_STEP_JUMP = 1, GW_STEP_REJECTION = 2 } gw_step_kind;

typedef struct gw_graph gw_graph;
typedef struct gw_sample gw_sample;
typedef struct gw_chain gw_chain;
typedef struct gw_experiment gw_experiment;

GWALK_API const char* gw_version(void);
GWALK_API const char* gw_last_error(void);
GWALK_API const char* gw_status_name(gw_status status);

/* ---- graphs ---------------------------------------------------------- */

/* SNAP-style edge list, plain or gzip-compressed. */
GWALK_API gw_status gw_graph_load_file(const char* path, gw_graph** out);
GWALK_API gw_status gw_graph_parse(const char* text, size_t len, gw_graph** out);
/* Generator spec such as "er(n=100,p=0.05,seed=7)" or
 * "union(complete(n=3),complete(n=3))". */
GWALK_API gw_status gw_graph_generate(const char* spec, gw_graph** out);
/* Graph over nodes [0, node_count) from parallel src/dst arrays. */
GWALK_API gw_status gw_graph_from_edges(size_t node_count, const uint32_t* src, const uint32_t* dst,
                                        size_t edge_count, gw_graph** out);
GWALK_API gw_status gw_graph_symmetrize(const gw_graph* g, gw_graph** out);
GWALK_API void gw_graph_free(gw_graph* g);

GWALK_API size_t gw_graph_node_count(const gw_graph* g);
GWALK_API size_t gw_graph_edge_count(const gw_graph* g);
GWALK_API uint64_t gw_graph_hash(const gw_graph* g);
GWALK_API gw_status gw_graph_build_stats(const gw_graph* g, uint64_t* duplicate_edges, uint64_t* self_loops);
GWALK_API gw_status gw_graph_node_id(const gw_graph* g, uint32_t node, uint64_t* id);
GWALK_API gw_status gw_graph_node_index(const gw_graph* g, uint64_t id, uint32_t* node);

GWALK_API gw_status gw_graph_degree(const gw_graph* g, uint32_t node, gw_direction dir, size_t* degree);
GWALK_API gw_status gw_graph_has_edge(const gw_graph* g, uint32_t src, uint32_t dst, int* exists);
/* *defined is 0 when the node has no out-edges. */
GWALK_API gw_status gw_graph_ratio(const gw_graph* g, uint32_t node, double* ratio, int* defined);
GWALK_API gw_status gw_graph_ratio_average(const gw_graph* g, double* average, size_t* excluded);
GWALK_API gw_status gw_graph_mutual_proportion(const gw_graph* g, double* proportion);
/* mass[k] = fraction of nodes with degree k, for k in [0, *len). */
GWALK_API gw_status gw_graph_degree_distribution(const gw_graph* g, gw_direction dir, double* mass,
                                                 size_t capacity, size_t* len);

/* ---- sampling -------------------------------------------------------- */

typedef struct gw_sampler_config {
    uint64_t budget;
    double walk_prob;   /* MHRW, in (0, 1] */
    double jump_weight; /* RWwJ, >= 0 */
    uint64_t rng_seed;
    int has_seed_node; /* 0: start at a uniformly random node */
    uint32_t seed_node;
} gw_sampler_config;

/* Defaults: budget 1, walk_prob 0.85, jump_weight 10, rng_seed 0, random start. */
GWALK_API void gw_sampler_config_init(gw_sampler_config* cfg);

GWALK_API gw_status gw_sample_run(const gw_graph* g, gw_method method, const gw_sampler_config* cfg,
                                  gw_sample** out);
GWALK_API gw_status gw_sample_read(const gw_graph* g, const char* path, gw_sample** out);
GWALK_API gw_status gw_sample_write(const gw_sample* s, const gw_graph* g, const char* path);
GWALK_API void gw_sample_free(gw_sample* s);

GWALK_API gw_method gw_sample_method(const gw_sample* s);
GWALK_API size_t gw_sample_length(const gw_sample* s);
GWALK_API size_t gw_sample_distinct_count(const gw_sample* s);
GWALK_API uint32_t gw_sample_start(const gw_sample* s);
/* kinds may be NULL. */
GWALK_API gw_status gw_sample_trace(const gw_sample* s, uint32_t* nodes, gw_step_kind* kinds, size_t capacity,
                                    size_t* len);
GWALK_API gw_status gw_sample_edges(const gw_sample* s, uint32_t* src, uint32_t* dst, size_t capacity,
                                    size_t* len);
GWALK_API gw_status gw_sample_split_halves(const gw_sample* s, uint64_t rng_seed, uint32_t* first,
                                           size_t first_capacity, size_t* first_len, uint32_t* second,
                                           size_t second_capacity, size_t* second_len);

/* ---- exact chains ---------------------------------------------------- */

/* param: walk probability (MHRW) or jump weight (RWwJ). */
GWALK_API gw_status gw_chain_build(const gw_graph* g, gw_method method, double param, size_t node_cap,
                                   gw_chain** out);
GWALK_API void gw_chain_free(gw_chain* c);
GWALK_API size_t gw_chain_size(const gw_chain* c);
GWALK_API gw_status gw_chain_entry(const gw_chain* c, size_t i, size_t j, double* p);
GWALK_API gw_status gw_chain_stationary(const gw_chain* c, double tol, double* pi, size_t capacity, size_t* len);

/* ---- estimators ------------------------------------------------------ */

typedef enum gw_nodal_kind {
    GW_F_DEGREE_INDICATOR = 0, /* 1 if degree(dir) == k */
    GW_F_RATIO_INDICATOR = 1,  /* 1 if follower ratio == k */
    GW_F_RATIO_VALUE = 2,
    GW_F_CONSTANT_ONE = 3
} gw_nodal_kind;

/* Sample mean (MHRW) or reweighted ratio estimate (RWwJ) of a nodal function. */
GWALK_API gw_status gw_estimate_nodal_mean(const gw_sample* s, const gw_graph* g, gw_nodal_kind kind, double k,
                                           gw_direction dir, double* value, size_t* skipped);
GWALK_API gw_status gw_estimate_degree_distribution(const gw_sample* s, const gw_graph* g, gw_direction dir,
                                                    double* mass, size_t capacity, size_t* len);
GWALK_API gw_status gw_estimate_ratio_average(const gw_sample* s, const gw_graph* g, double* value,
                                              size_t* skipped);
GWALK_API gw_status gw_estimate_mutual_proportion(const gw_sample* s, const gw_graph* g, double* value);
GWALK_API gw_status gw_capture_recapture_order(const uint32_t* first, size_t first_len, const uint32_t* second,
                                               size_t second_len, double* order);
GWALK_API gw_status gw_cross_collision_order(const uint32_t* uniform_set, size_t set_len, const uint32_t* trace,
                                             size_t trace_len, double* order);

/* ---- metrics ---------------------------------------------------------- */
/* Distributions are dense mass arrays indexed by key. */

GWALK_API gw_status gw_ks_d_statistic(const double* p, size_t p_len, const double* q, size_t q_len, double* d);
GWALK_API gw_status gw_kl_divergence(const double* p, size_t p_len, const double* q, size_t q_len, double epsilon,
                                     double* kl);
GWALK_API gw_status gw_rrmse(const double* estimates, size_t len, double truth, double* value);

/* ---- experiment pipeline ---------------------------------------------- */
/* Settings use the CLI flag names without the leading dashes: graph, gen, method,
 * budget, budget-frac, walk-prob, jump-weight, reps, seed, seed-node, props,
 * out, trace (repeatable), threads, kl-epsilon. */

GWALK_API gw_status gw_experiment_create(gw_experiment** out);
GWALK_API void gw_experiment_free(gw_experiment* e);
GWALK_API gw_status gw_experiment_set(gw_experiment* e, const char* key, const char* value);
GWALK_API gw_status gw_experiment_stats(gw_experiment* e);
GWALK_API gw_status gw_experiment_sample(gw_experiment* e);
GWALK_API gw_status gw_experiment_estimate(gw_experiment* e);
GWALK_API gw_status gw_experiment_evaluate(gw_experiment* e);
GWALK_API gw_status gw_experiment_run(gw_experiment* e);
/* JSON summary of the last command; owned by the handle, valid until the
 * next call on it. */
GWALK_API const char* gw_experiment_summary(const gw_experiment* e);

#ifdef __cplusplus
}
#endif

#endif /* GWALK_H */
