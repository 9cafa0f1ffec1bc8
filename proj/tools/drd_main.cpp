// Command-line front end for the double Roman domination toolkit. Talks to
// the core exclusively through the C API in drd.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drd.h"

namespace {

struct GraphDeleter {
    void operator()(drd_graph* g) const { drd_graph_free(g); }
};
struct LabelingDeleter {
    void operator()(drd_labeling* f) const { drd_labeling_free(f); }
};
using GraphPtr = std::unique_ptr<drd_graph, GraphDeleter>;
using LabelingPtr = std::unique_ptr<drd_labeling, LabelingDeleter>;

int report_error(int code)
{
    if (code == DRD_ERR_PARSE)
        std::fprintf(stderr, "parse error at line %d: %s\n", drd_last_parse_line(),
                     drd_last_error());
    else
        std::fprintf(stderr, "error: %s\n", drd_last_error());
    return 1;
}

GraphPtr load_graph(const std::string& input, int& err)
{
    drd_graph* g = nullptr;
    err = drd_graph_read(input.empty() ? "-" : input.c_str(), &g);
    return GraphPtr(g);
}

std::string witness_string(const drd_labeling* f)
{
    std::string out;
    const int n = drd_labeling_size(f);
    for (int v = 0; v < n; ++v) {
        if (v)
            out += ",";
        out += std::to_string(drd_labeling_value(f, v));
    }
    return out;
}

GraphPtr build_family(const std::string& family, long long n, long long m, long long k,
                      const std::vector<long long>& legs, const std::string& base_family,
                      long long base_n, const std::vector<long long>& star_tadpoles,
                      const std::vector<long long>& star_cycles,
                      const std::vector<long long>& star_identified, int& err)
{
    drd_graph* g = nullptr;
    if (family == "gq" || family == "gh") {
        std::vector<long long> params{base_n};
        drd_graph* base = nullptr;
        err = drd_graph_from_family(base_family.c_str(), params.data(), params.size(),
                                    &base);
        if (err != DRD_OK)
            return nullptr;
        GraphPtr base_ptr(base);
        err = family == "gq" ? drd_graph_gq(base, &g) : drd_graph_gh(base, &g);
        return GraphPtr(g);
    }
    std::vector<long long> params;
    if (family == "cycle" || family == "path" || family == "complete") {
        params = {n};
    } else if (family == "tadpole") {
        params = {m, k};
    } else if (family == "spider") {
        params = legs;
    } else if (family == "star") {
        if (star_tadpoles.size() % 2 != 0) {
            std::fprintf(stderr, "error: --tadpoles takes m,k pairs\n");
            err = DRD_ERR_INVALID;
            return nullptr;
        }
        params.push_back(static_cast<long long>(star_tadpoles.size() / 2));
        params.insert(params.end(), star_tadpoles.begin(), star_tadpoles.end());
        params.push_back(static_cast<long long>(star_cycles.size()));
        params.insert(params.end(), star_cycles.begin(), star_cycles.end());
        params.push_back(static_cast<long long>(star_identified.size()));
        params.insert(params.end(), star_identified.begin(), star_identified.end());
    }
    // "q" passes an empty parameter list
    err = drd_graph_from_family(family.c_str(), params.data(), params.size(), &g);
    return GraphPtr(g);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"double Roman domination toolkit"};
    app.require_subcommand(1);

    // gamma ---------------------------------------------------------------
    auto* gamma = app.add_subcommand("gamma", "exact gamma_dR of an edge-list graph");
    std::string gamma_input, gamma_out;
    bool gamma_allow_ones = false, gamma_no_warm = false;
    double gamma_timeout_s = 0.0;
    gamma->add_option("--input", gamma_input, "edge-list file (default stdin)");
    gamma->add_option("--out", gamma_out, "write the witness labeling here");
    gamma->add_flag("--allow-ones", gamma_allow_ones, "search {0,1,2,3} labelings");
    gamma->add_option("--timeout-s", gamma_timeout_s, "abort after this many seconds");
    gamma->add_flag("--no-warm-start", gamma_no_warm,
                    "skip the constructive warm-start labeling");

    // construct -------------------------------------------------------------
    auto* construct =
        app.add_subcommand("construct", "build a DRDF with the reduction engine");
    std::string c_input, c_out;
    int c_fallback = 12;
    std::uint32_t c_rule_mask = 0;
    bool c_trace = false;
    construct->add_option("--input", c_input, "edge-list file (default stdin)");
    construct->add_option("--out", c_out, "write the labeling here");
    construct->add_option("--fallback-n", c_fallback, "exact-solve threshold");
    construct->add_option("--rule-mask", c_rule_mask, "bitmask of enabled rules");
    construct->add_flag("--trace", c_trace, "print every reduction step");

    // check -----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "validate a labeling against a graph");
    std::string k_input, k_labeling;
    check->add_option("--input", k_input, "edge-list file (default stdin)");
    check->add_option("--labeling", k_labeling, "labeling file")->required();

    // gen ---------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string g_family, g_out, g_base_family = "path";
    long long g_n = 0, g_m = 0, g_k = 0, g_base_n = 1;
    std::vector<long long> g_legs, g_tadpoles, g_cycles, g_identified;
    gen->add_option("--family", g_family,
                    "cycle|path|complete|tadpole|spider|q|gq|gh|star")
        ->required();
    gen->add_option("--n", g_n, "order for cycle/path/complete");
    gen->add_option("--m", g_m, "tadpole cycle length");
    gen->add_option("--k", g_k, "tadpole path length");
    gen->add_option("--legs", g_legs, "spider leg lengths")->delimiter(',');
    gen->add_option("--base-family", g_base_family, "base family for gq/gh");
    gen->add_option("--base-n", g_base_n, "base order for gq/gh");
    gen->add_option("--tadpoles", g_tadpoles, "star tadpoles as m,k pairs")
        ->delimiter(',');
    gen->add_option("--cycles", g_cycles, "star attached cycle lengths")->delimiter(',');
    gen->add_option("--identified", g_identified, "star identified cycle lengths")
        ->delimiter(',');
    gen->add_option("--out", g_out, "output file (default stdout)");

    // random ------------------------------------------------------------------
    auto* random = app.add_subcommand("random", "seeded random graphs");
    std::string r_model = "uniform-min-deg-2", r_out;
    long long r_n = 10, r_count = 1;
    std::uint64_t r_seed = 0;
    random->add_option("--model", r_model, "uniform-min-deg-2|cycle-union|spider");
    random->add_option("--n", r_n, "order")->required();
    random->add_option("--seed", r_seed, "64-bit seed");
    random->add_option("--count", r_count, "number of instances");
    random->add_option("--out", r_out, "output file or prefix (default stdout)");

    // sweep -----------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "exhaustive small-graph verification");
    int s_nmin = 3, s_nmax = 7, s_mindeg = 2, s_jobs = 1, s_fallback = 12;
    bool s_connected = false;
    std::string s_exclude, s_mode = "exact", s_out;
    std::uint64_t s_seed = 0;
    sweep->add_option("--n-min", s_nmin, "smallest order");
    sweep->add_option("--n-max", s_nmax, "largest order");
    sweep->add_option("--min-degree", s_mindeg, "minimum degree filter");
    sweep->add_flag("--connected", s_connected, "connected graphs only");
    sweep->add_option("--exclude", s_exclude, "comma list of families to skip (c5,c7,q)");
    sweep->add_option("--mode", s_mode, "exact|construct|both");
    sweep->add_option("--out", s_out, "report file");
    sweep->add_option("--jobs", s_jobs, "worker threads");
    sweep->add_option("--seed", s_seed, "seed recorded with the run");
    sweep->add_option("--fallback-n", s_fallback, "construct exact-solve threshold");

    CLI11_PARSE(app, argc, argv);

    if (gamma->parsed()) {
        int err = 0;
        GraphPtr g = load_graph(gamma_input, err);
        if (err != DRD_OK)
            return report_error(err);
        drd_solve_options opts{};
        opts.allow_ones = gamma_allow_ones ? 1 : 0;
        opts.timeout_ms = static_cast<long long>(gamma_timeout_s * 1000.0);
        LabelingPtr warm;
        if (!gamma_no_warm) {
            drd_construct_result* cr = nullptr;
            if (drd_construct(g.get(), nullptr, &cr) == DRD_OK) {
                drd_labeling* f = nullptr;
                if (drd_construct_labeling(cr, &f) == DRD_OK) {
                    warm.reset(f);
                    opts.initial = warm.get();
                }
                drd_construct_result_free(cr);
            }
        }
        drd_solve_result* res = nullptr;
        err = drd_solve(g.get(), &opts, &res);
        if (err != DRD_OK)
            return report_error(err);
        drd_labeling* witness = nullptr;
        drd_solve_witness(res, &witness);
        LabelingPtr witness_ptr(witness);
        const bool timed_out = drd_solve_status(res) == 1;
        if (timed_out)
            std::printf("n=%d m=%d gamma_dr=unknown lower=%lld upper=%lld witness=%s "
                        "nodes=%lld millis=%lld status=timeout\n",
                        drd_graph_order(g.get()), drd_graph_edge_count(g.get()),
                        drd_solve_lower(res), drd_solve_upper(res),
                        witness_string(witness).c_str(), drd_solve_nodes(res),
                        drd_solve_millis(res));
        else
            std::printf("n=%d m=%d gamma_dr=%lld witness=%s nodes=%lld millis=%lld "
                        "status=optimal\n",
                        drd_graph_order(g.get()), drd_graph_edge_count(g.get()),
                        drd_solve_value(res), witness_string(witness).c_str(),
                        drd_solve_nodes(res), drd_solve_millis(res));
        if (!gamma_out.empty())
            drd_labeling_write(witness, gamma_out.c_str());
        drd_solve_result_free(res);
        return timed_out ? 2 : 0;
    }

    if (construct->parsed()) {
        int err = 0;
        GraphPtr g = load_graph(c_input, err);
        if (err != DRD_OK)
            return report_error(err);
        drd_construct_options opts{};
        opts.fallback_n = c_fallback;
        opts.rule_mask = c_rule_mask;
        drd_construct_result* cr = nullptr;
        err = drd_construct(g.get(), &opts, &cr);
        if (err != DRD_OK)
            return report_error(err);
        drd_labeling* f = nullptr;
        drd_construct_labeling(cr, &f);
        LabelingPtr f_ptr(f);
        drd_bound_report rep{};
        drd_check_bound(g.get(), f, &rep);
        std::printf("n=%d weight=%lld thresh=%lld/%d satisfied=%d tags=%s\n", rep.n,
                    rep.weight, rep.threshold_num, rep.threshold_den, rep.satisfied,
                    rep.tags[0] ? rep.tags : "-");
        if (c_trace) {
            const size_t steps = drd_construct_step_count(cr);
            for (size_t i = 0; i < steps; ++i)
                std::printf("step=%zu rule=%s removed=%d weight=%lld\n", i,
                            drd_construct_step_rule(cr, i),
                            drd_construct_step_removed(cr, i),
                            drd_construct_step_weight(cr, i));
            std::printf("final_base=%s fallback_used=%d\n",
                        drd_construct_final_base(cr), drd_construct_fallback_used(cr));
        }
        if (!c_out.empty())
            drd_labeling_write(f, c_out.c_str());
        drd_construct_result_free(cr);
        return 0;
    }

    if (check->parsed()) {
        int err = 0;
        GraphPtr g = load_graph(k_input, err);
        if (err != DRD_OK)
            return report_error(err);
        drd_labeling* f = nullptr;
        err = drd_labeling_read(k_labeling.c_str(), &f);
        if (err != DRD_OK)
            return report_error(err);
        LabelingPtr f_ptr(f);
        std::vector<int> pairs(static_cast<size_t>(drd_labeling_size(f)) * 2 + 2);
        size_t count = 0;
        err = drd_validate(g.get(), f, pairs.data(), pairs.size() / 2, &count);
        if (err != DRD_OK)
            return report_error(err);
        if (count == 0) {
            std::printf("VALID weight=%lld\n", drd_weight(f));
            return 0;
        }
        for (size_t i = 0; i < count; ++i)
            std::printf("violation vertex=%d kind=%s\n", pairs[2 * i],
                        pairs[2 * i + 1] == 0 ? "zero-uncovered" : "one-unsupported");
        return 3;
    }

    if (gen->parsed()) {
        int err = 0;
        GraphPtr g = build_family(g_family, g_n, g_m, g_k, g_legs, g_base_family,
                                  g_base_n, g_tadpoles, g_cycles, g_identified, err);
        if (err != DRD_OK)
            return report_error(err);
        err = drd_graph_write(g.get(), g_out.empty() ? "-" : g_out.c_str());
        return err == DRD_OK ? 0 : report_error(err);
    }

    if (random->parsed()) {
        for (long long i = 0; i < r_count; ++i) {
            drd_graph* g = nullptr;
            int err = drd_graph_random(r_model.c_str(), static_cast<int>(r_n), r_seed,
                                       static_cast<std::uint64_t>(i), &g);
            if (err != DRD_OK)
                return report_error(err);
            GraphPtr g_ptr(g);
            std::string target = "-";
            if (!r_out.empty())
                target = r_count == 1 ? r_out : r_out + "-" + std::to_string(i) + ".edges";
            err = drd_graph_write(g, target.c_str());
            if (err != DRD_OK)
                return report_error(err);
        }
        return 0;
    }

    if (sweep->parsed()) {
        drd_sweep_config cfg{};
        cfg.n_min = s_nmin;
        cfg.n_max = s_nmax;
        cfg.min_degree = s_mindeg;
        cfg.connected_only = s_connected ? 1 : 0;
        int mode = 0;
        if (s_mode == "construct")
            mode = 1;
        else if (s_mode == "both")
            mode = 2;
        else if (s_mode != "exact") {
            std::fprintf(stderr, "error: unknown mode %s\n", s_mode.c_str());
            return 1;
        }
        cfg.mode = mode;
        cfg.exclude = s_exclude.empty() ? nullptr : s_exclude.c_str();
        cfg.report_path = s_out.empty() ? nullptr : s_out.c_str();
        cfg.jobs = s_jobs;
        cfg.seed = s_seed;
        cfg.fallback_n = s_fallback;
        drd_sweep_summary summary{};
        int err = drd_sweep(&cfg, &summary);
        if (err != DRD_OK)
            return report_error(err);
        std::printf("instances=%lld satisfied=%lld violations=%lld excluded=%lld\n",
                    summary.instances, summary.satisfied, summary.violations,
                    summary.excluded);
        return 0;
    }

    return 0;
}
