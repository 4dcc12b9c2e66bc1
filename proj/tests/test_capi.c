/* Exercises the shared library through the C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gwalk/gwalk.h"

static int failures = 0;

#define CHECK(cond)                                                              \
    do {                                                                         \
        if (!(cond)) {                                                           \
            fprintf(stderr, "%s:%d: CHECK(%s) failed\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                          \
        }                                                                        \
    } while (0)

#define CHECK_OK(call)                                                                        \
    do {                                                                                      \
        gw_status st_ = (call);                                                               \
        if (st_ != GW_OK) {                                                                   \
            fprintf(stderr, "%s:%d: %s -> %s: %s\n", __FILE__, __LINE__, #call, gw_status_name(st_), \
                    gw_last_error());                                                         \
            ++failures;                                                                       \
        }                                                                                     \
    } while (0)

#define CLOSE(a, b, tol) CHECK(fabs((a) - (b)) < (tol))

static void test_graph(void) {
    const char* text = "# toy\n1 2\n2 1\n2 3\n";
    gw_graph* g = NULL;
    CHECK_OK(gw_graph_parse(text, strlen(text), &g));
    CHECK(gw_graph_node_count(g) == 3);
    CHECK(gw_graph_edge_count(g) == 3);

    uint64_t id = 0;
    uint32_t idx = 0;
    CHECK_OK(gw_graph_node_id(g, 2, &id));
    CHECK(id == 3);
    CHECK_OK(gw_graph_node_index(g, 2, &idx));
    CHECK(idx == 1);
    CHECK(gw_graph_node_index(g, 42, &idx) == GW_ERR_OUT_OF_RANGE);
    CHECK(strlen(gw_last_error()) > 0);

    size_t deg = 0;
    CHECK_OK(gw_graph_degree(g, 1, GW_OUT, &deg));
    CHECK(deg == 2);
    int exists = 0;
    CHECK_OK(gw_graph_has_edge(g, 1, 2, &exists));
    CHECK(exists == 1);
    CHECK_OK(gw_graph_has_edge(g, 2, 1, &exists));
    CHECK(exists == 0);

    double ratio = 0, avg = 0, sigma = 0;
    int defined = 1;
    size_t excluded = 0;
    CHECK_OK(gw_graph_ratio(g, 2, &ratio, &defined));
    CHECK(defined == 0);
    CHECK_OK(gw_graph_ratio_average(g, &avg, &excluded));
    CLOSE(avg, 0.75, 1e-12);
    CHECK(excluded == 1);
    CHECK_OK(gw_graph_mutual_proportion(g, &sigma));
    CLOSE(sigma, 2.0 / 3.0, 1e-12);

    size_t len = 0;
    CHECK(gw_graph_degree_distribution(g, GW_OUT, NULL, 0, &len) == GW_ERR_BUFFER_TOO_SMALL);
    CHECK(len == 3);
    double mass[3];
    CHECK_OK(gw_graph_degree_distribution(g, GW_OUT, mass, 3, &len));
    CLOSE(mass[0], 1.0 / 3, 1e-12);
    CLOSE(mass[1], 1.0 / 3, 1e-12);
    CLOSE(mass[2], 1.0 / 3, 1e-12);

    gw_graph* s = NULL;
    CHECK_OK(gw_graph_symmetrize(g, &s));
    CHECK(gw_graph_edge_count(s) == 4);
    gw_graph_free(s);
    gw_graph_free(g);

    CHECK(gw_graph_parse("1 x\n", 4, &g) == GW_ERR_PARSE);
    CHECK(strstr(gw_last_error(), "line 1") != NULL);
    CHECK(gw_graph_load_file("/nonexistent/edges.txt", &g) == GW_ERR_IO);
    CHECK(gw_graph_generate("er(n=10", &g) == GW_ERR_PARSE);
    CHECK(gw_graph_parse(NULL, 0, &g) == GW_ERR_NULL_POINTER);

    const uint32_t src[] = {0, 1, 1}, dst[] = {1, 0, 1};
    CHECK_OK(gw_graph_from_edges(2, src, dst, 3, &g));
    uint64_t dups = 9, loops = 9;
    CHECK_OK(gw_graph_build_stats(g, &dups, &loops));
    CHECK(loops == 1);
    CHECK(dups == 0);
    gw_graph_free(g);
}

static void test_sampling(void) {
    gw_graph* g = NULL;
    CHECK_OK(gw_graph_generate("er(n=50,p=0.1,seed=3)", &g));
    gw_sampler_config cfg;
    gw_sampler_config_init(&cfg);
    CHECK(cfg.walk_prob == 0.85);
    CHECK(cfg.jump_weight == 10.0);
    cfg.budget = 400;
    cfg.rng_seed = 5;

    gw_sample* a = NULL;
    gw_sample* b = NULL;
    CHECK_OK(gw_sample_run(g, GW_MHRW, &cfg, &a));
    CHECK_OK(gw_sample_run(g, GW_MHRW, &cfg, &b));
    CHECK(gw_sample_method(a) == GW_MHRW);
    CHECK(gw_sample_length(a) == 400);
    CHECK(gw_sample_distinct_count(a) <= 400);

    uint32_t* ta = malloc(400 * sizeof *ta);
    uint32_t* tb = malloc(400 * sizeof *tb);
    gw_step_kind* kinds = malloc(400 * sizeof *kinds);
    size_t len = 0;
    CHECK(gw_sample_trace(a, ta, NULL, 10, &len) == GW_ERR_BUFFER_TOO_SMALL);
    CHECK(len == 400);
    CHECK_OK(gw_sample_trace(a, ta, kinds, 400, &len));
    CHECK_OK(gw_sample_trace(b, tb, NULL, 400, &len));
    CHECK(memcmp(ta, tb, 400 * sizeof *ta) == 0);

    uint32_t prev = gw_sample_start(a);
    for (size_t t = 0; t < 400; ++t) {
        if (kinds[t] == GW_STEP_REJECTION) CHECK(ta[t] == prev);
        if (kinds[t] == GW_STEP_WALK) {
            int e = 0;
            gw_graph_has_edge(g, prev, ta[t], &e);
            CHECK(e == 1);
        }
        prev = ta[t];
    }

    size_t elen = 0;
    gw_status need = gw_sample_edges(a, NULL, NULL, 0, &elen);
    CHECK(elen > 0);
    CHECK(need == GW_ERR_BUFFER_TOO_SMALL);
    uint32_t* es = malloc((elen + 1) * sizeof *es);
    uint32_t* ed = malloc((elen + 1) * sizeof *ed);
    CHECK_OK(gw_sample_edges(a, es, ed, elen + 1, &elen));
    for (size_t i = 0; i < elen; ++i) {
        int e = 0;
        gw_graph_has_edge(g, es[i], ed[i], &e);
        CHECK(e == 1);
    }

    uint32_t first[400], second[400];
    size_t n1 = 0, n2 = 0;
    CHECK_OK(gw_sample_split_halves(a, 7, first, 400, &n1, second, 400, &n2));
    double order = 0;
    if (gw_capture_recapture_order(first, n1, second, n2, &order) == GW_OK) CHECK(order > 0);

    /* trace file round trip */
    const char* path = "capi_roundtrip.trace";
    CHECK_OK(gw_sample_write(a, g, path));
    gw_sample* c = NULL;
    CHECK_OK(gw_sample_read(g, path, &c));
    CHECK_OK(gw_sample_trace(c, tb, NULL, 400, &len));
    CHECK(memcmp(ta, tb, 400 * sizeof *ta) == 0);
    gw_graph* other = NULL;
    gw_sample* d = NULL;
    CHECK_OK(gw_graph_generate("ring(n=50)", &other));
    CHECK(gw_sample_read(other, path, &d) == GW_ERR_MISMATCH);
    remove(path);

    double value = 0;
    size_t skipped = 0;
    CHECK_OK(gw_estimate_nodal_mean(a, g, GW_F_CONSTANT_ONE, 0, GW_IN, &value, &skipped));
    CHECK(value == 1.0);
    CHECK_OK(gw_estimate_ratio_average(a, g, &value, &skipped));
    CHECK(value > 0);
    double dist[64];
    CHECK_OK(gw_estimate_degree_distribution(a, g, GW_IN, dist, 64, &len));
    double total = 0;
    for (size_t k = 0; k < len; ++k) total += dist[k];
    CLOSE(total, 1.0, 1e-9);

    cfg.jump_weight = 1.0;
    gw_sample* r = NULL;
    CHECK_OK(gw_sample_run(g, GW_RWWJ, &cfg, &r));
    CHECK_OK(gw_estimate_nodal_mean(r, g, GW_F_CONSTANT_ONE, 0, GW_IN, &value, &skipped));
    CLOSE(value, 1.0, 1e-12);
    CHECK_OK(gw_estimate_mutual_proportion(r, g, &value));
    CHECK(value >= 0 && value <= 1);

    cfg.budget = 0;
    CHECK(gw_sample_run(g, GW_MHRW, &cfg, &d) == GW_ERR_INVALID_ARGUMENT);
    CHECK(gw_sample_run(NULL, GW_MHRW, &cfg, &d) == GW_ERR_NULL_POINTER);

    free(ta);
    free(tb);
    free(kinds);
    free(es);
    free(ed);
    gw_sample_free(a);
    gw_sample_free(b);
    gw_sample_free(c);
    gw_sample_free(r);
    gw_graph_free(other);
    gw_graph_free(g);
}

static void test_chain(void) {
    gw_graph* g = NULL;
    gw_graph* s = NULL;
    const char* text = "1 2\n2 1\n2 3\n";
    CHECK_OK(gw_graph_parse(text, strlen(text), &g));
    CHECK_OK(gw_graph_symmetrize(g, &s));

    gw_chain* c = NULL;
    CHECK_OK(gw_chain_build(s, GW_MHRW, 0.9, 0, &c));
    CHECK(gw_chain_size(c) == 3);
    double pi[3];
    size_t len = 0;
    CHECK_OK(gw_chain_stationary(c, 1e-13, pi, 3, &len));
    for (int i = 0; i < 3; ++i) CLOSE(pi[i], 1.0 / 3, 1e-9);
    double p = 0;
    CHECK(gw_chain_entry(c, 3, 0, &p) == GW_ERR_OUT_OF_RANGE);
    gw_chain_free(c);

    CHECK_OK(gw_chain_build(g, GW_RWWJ, 1.0, 0, &c));
    CHECK_OK(gw_chain_entry(c, 1, 0, &p));
    CLOSE(p, 4.0 / 9, 1e-15);
    gw_chain_free(c);

    CHECK(gw_chain_build(g, GW_MHRW, 0.85, 2, &c) == GW_ERR_INVALID_ARGUMENT);
    gw_graph_free(s);
    gw_graph_free(g);
}

static void test_metrics(void) {
    const double p[] = {0, 0.5, 0.5}, q[] = {0, 0.3, 0.7};
    double d = 0, kl = 0, e = 0;
    CHECK_OK(gw_ks_d_statistic(p, 3, q, 3, &d));
    CLOSE(d, 0.2, 1e-12);
    const double one[] = {0, 1}, half[] = {0, 0.5, 0.5};
    CHECK_OK(gw_kl_divergence(one, 2, half, 3, 1e-10, &kl));
    CLOSE(kl, log(2.0), 1e-9);
    const double est[] = {433055};
    CHECK_OK(gw_rrmse(est, 1, 456626, &e));
    CLOSE(e, 0.0516, 1e-4);
    CHECK(gw_rrmse(est, 1, 0, &e) == GW_ERR_INVALID_ARGUMENT);

    const uint32_t s1[] = {0, 1}, s2[] = {0, 0, 2};
    double order = 0;
    CHECK_OK(gw_cross_collision_order(s1, 2, s2, 3, &order));
    CHECK(order == 3.0);
    const uint32_t a[] = {0, 1, 2, 3}, b[] = {2, 3, 4, 5}, far[] = {9};
    CHECK_OK(gw_capture_recapture_order(a, 4, b, 4, &order));
    CHECK(order == 8.0);
    CHECK(gw_capture_recapture_order(a, 4, far, 1, &order) == GW_ERR_UNDEFINED);
}

static void test_experiment(void) {
    gw_experiment* e = NULL;
    CHECK_OK(gw_experiment_create(&e));
    CHECK_OK(gw_experiment_set(e, "gen", "er(n=60,p=0.08,seed=2)"));
    CHECK_OK(gw_experiment_set(e, "budget", "200"));
    CHECK_OK(gw_experiment_set(e, "reps", "2"));
    CHECK_OK(gw_experiment_set(e, "out", "capi_experiment_out"));
    CHECK(gw_experiment_set(e, "bogus", "1") == GW_ERR_INVALID_ARGUMENT);
    CHECK_OK(gw_experiment_run(e));
    const char* summary = gw_experiment_summary(e);
    CHECK(summary != NULL && summary[0] == '{');
    FILE* f = fopen("capi_experiment_out/evaluation.csv", "r");
    CHECK(f != NULL);
    if (f) fclose(f);
    gw_experiment_free(e);
}

int main(void) {
    CHECK(strlen(gw_version()) > 0);
    CHECK(strcmp(gw_status_name(GW_OK), "ok") == 0);
    CHECK(strcmp(gw_status_name(GW_ERR_PARSE), "parse error") == 0);
    test_graph();
    test_sampling();
    test_chain();
    test_metrics();
    test_experiment();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    puts("C API: all checks passed");
    return 0;
}
