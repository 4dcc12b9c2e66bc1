// gwalk: command-line experiment runner over the gwalk C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwalk/gwalk.h"

namespace {

struct ExperimentDeleter {
    void operator()(gw_experiment* e) const { gw_experiment_free(e); }
};
using Experiment = std::unique_ptr<gw_experiment, ExperimentDeleter>;

int report(gw_status status) {
    if (status == GW_OK) return 0;
    std::cerr << "gwalk: " << gw_status_name(status) << ": " << gw_last_error() << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-walk graph sampling: MHRW and RWwJ samplers, property estimators, evaluation"};
    app.set_config("--config", "", "Key-value config file (INI/TOML); command-line flags take precedence");
    app.require_subcommand(1);

    // setting name -> value, in declaration order
    std::vector<std::pair<std::string, std::string>> settings = {
        {"graph", ""},      {"gen", ""},  {"method", ""}, {"budget", ""},    {"budget-frac", ""},
        {"walk-prob", ""},  {"jump-weight", ""}, {"reps", ""}, {"seed", ""}, {"seed-node", ""},
        {"props", ""},      {"out", ""},  {"threads", ""}, {"kl-epsilon", ""}};
    const std::vector<std::string> help = {
        "Edge-list file (SNAP format, optionally gzip)",
        "Generated graph, e.g. 'er(n=100,p=0.05,seed=7)'",
        "Sampling methods: mhrw, rwwj or both (default both)",
        "Absolute budget: steps per walk",
        "Budget as a fraction of N (default 0.15)",
        "MHRW walk probability d (default 0.85)",
        "RWwJ jump weight alpha (default 10)",
        "Replications per method (default 1)",
        "Master RNG seed (default 1)",
        "Start node id (default uniform-random)",
        "Properties: degree_distribution, ratio_average, order, mutual_proportion or all",
        "Output directory (default gwalk-out)",
        "Worker threads for replications (default 1)",
        "KL smoothing epsilon (default 1e-10)"};
    std::vector<CLI::Option*> options;
    for (std::size_t i = 0; i < settings.size(); ++i)
        // config files hand over comma lists such as er(n=5,p=0.1) in pieces
        options.push_back(app.add_option("--" + settings[i].first, settings[i].second, help[i])
                              ->delimiter(',')
                              ->multi_option_policy(CLI::MultiOptionPolicy::Join));
    std::vector<std::string> traces;

    auto* stats = app.add_subcommand("stats", "Ground-truth properties of the graph");
    auto* sample = app.add_subcommand("sample", "Run the samplers and write trace files");
    auto* estimate = app.add_subcommand("estimate", "Estimate properties from trace files");
    estimate->add_option("traces", traces, "Trace files (default: <out>/traces/*.trace)");
    auto* evaluate = app.add_subcommand("evaluate", "Compare estimates with ground truth");
    auto* run = app.add_subcommand("run", "stats, sample, estimate and evaluate in one go");
    for (auto* sub : {stats, sample, estimate, evaluate, run}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    gw_experiment* raw = nullptr;
    if (int rc = report(gw_experiment_create(&raw))) return rc;
    Experiment exp(raw);
    for (std::size_t i = 0; i < settings.size(); ++i) {
        if (options[i]->count() == 0) continue;
        if (int rc = report(gw_experiment_set(exp.get(), settings[i].first.c_str(), settings[i].second.c_str())))
            return rc;
    }
    for (const auto& t : traces) {
        if (int rc = report(gw_experiment_set(exp.get(), "trace", t.c_str()))) return rc;
    }

    gw_status status = GW_OK;
    if (stats->parsed())
        status = gw_experiment_stats(exp.get());
    else if (sample->parsed())
        status = gw_experiment_sample(exp.get());
    else if (estimate->parsed())
        status = gw_experiment_estimate(exp.get());
    else if (evaluate->parsed())
        status = gw_experiment_evaluate(exp.get());
    else if (run->parsed())
        status = gw_experiment_run(exp.get());
    if (int rc = report(status)) return rc;
    std::cout << gw_experiment_summary(exp.get()) << '\n';
    return 0;
}
