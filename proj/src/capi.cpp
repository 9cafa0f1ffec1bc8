#include "drd.h"

#include <cstring>
#include <iostream>
#include <string>

#include "drd/construct.hpp"
#include "drd/family.hpp"
#include "drd/graph.hpp"
#include "drd/io.hpp"
#include "drd/labeling.hpp"
#include "drd/random_models.hpp"
#include "drd/solver.hpp"
#include "drd/sweep.hpp"

struct drd_graph {
    drd::Graph g;
};

struct drd_labeling {
    drd::Labeling f;
};

struct drd_solve_result {
    drd::SolveResult r;
};

struct drd_construct_result {
    drd::ConstructResult r;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_last_parse_line = 0;

void clear_error()
{
    g_last_error.clear();
    g_last_parse_line = 0;
}

int fail(int code, const std::string& message, int parse_line = 0)
{
    g_last_error = message;
    g_last_parse_line = parse_line;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn)
{
    clear_error();
    try {
        return fn();
    } catch (const drd::ParseError& e) {
        return fail(DRD_ERR_PARSE, e.what(), e.line);
    } catch (const std::invalid_argument& e) {
        return fail(DRD_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(DRD_ERR_INTERNAL, e.what());
    }
}

void copy_string(char* dst, size_t cap, const std::string& src)
{
    if (!dst || cap == 0)
        return;
    const size_t len = std::min(src.size(), cap - 1);
    std::memcpy(dst, src.data(), len);
    dst[len] = '\0';
}

} // namespace

extern "C" {

const char* drd_last_error(void)
{
    return g_last_error.c_str();
}

int drd_last_parse_line(void)
{
    return g_last_parse_line;
}

const char* drd_version(void)
{
    return "1.0.0";
}

/* graphs ------------------------------------------------------------- */

int drd_graph_build(int n, const int* edges_uv, size_t m, drd_graph** out)
{
    return guarded([&]() -> int {
        if (!out || (m > 0 && !edges_uv))
            return fail(DRD_ERR_INVALID, "null argument");
        std::vector<drd::Edge> edges;
        edges.reserve(m);
        for (size_t i = 0; i < m; ++i)
            edges.emplace_back(edges_uv[2 * i], edges_uv[2 * i + 1]);
        *out = new drd_graph{drd::Graph(n, edges)};
        return DRD_OK;
    });
}

int drd_graph_from_family(const char* family, const long long* params, size_t nparams,
                          drd_graph** out)
{
    return guarded([&]() -> int {
        if (!family || !out || (nparams > 0 && !params))
            return fail(DRD_ERR_INVALID, "null argument");
        const std::string name = family;
        auto need = [&](size_t k) {
            if (nparams < k)
                throw std::invalid_argument("family " + name + " needs " +
                                            std::to_string(k) + " parameters");
        };
        drd::Graph g;
        if (name == "cycle") {
            need(1);
            g = drd::cycle(static_cast<int>(params[0]));
        } else if (name == "path") {
            need(1);
            g = drd::path(static_cast<int>(params[0]));
        } else if (name == "complete") {
            need(1);
            g = drd::complete(static_cast<int>(params[0]));
        } else if (name == "tadpole") {
            need(2);
            g = drd::tadpole(static_cast<int>(params[0]), static_cast<int>(params[1]));
        } else if (name == "spider") {
            std::vector<int> legs(params, params + nparams);
            g = drd::spider(legs);
        } else if (name == "q") {
            g = drd::q_graph();
        } else if (name == "star") {
            need(1);
            size_t i = 0;
            const auto take = [&]() -> long long {
                if (i >= nparams)
                    throw std::invalid_argument("star: truncated parameter list");
                return params[i++];
            };
            std::vector<drd::TadpoleParams> tads;
            const long long t = take();
            for (long long j = 0; j < t; ++j) {
                int m = static_cast<int>(take());
                int k = static_cast<int>(take());
                tads.push_back({m, k});
            }
            std::vector<int> attached, identified;
            const long long r = take();
            for (long long j = 0; j < r; ++j)
                attached.push_back(static_cast<int>(take()));
            const long long s = take();
            for (long long j = 0; j < s; ++j)
                identified.push_back(static_cast<int>(take()));
            g = drd::star_of_tadpoles(tads, attached, identified);
        } else {
            return fail(DRD_ERR_INVALID, "unknown family: " + name);
        }
        *out = new drd_graph{std::move(g)};
        return DRD_OK;
    });
}

int drd_graph_gq(const drd_graph* base, drd_graph** out)
{
    return guarded([&]() -> int {
        if (!base || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_graph{drd::g_q(base->g)};
        return DRD_OK;
    });
}

int drd_graph_gh(const drd_graph* base, drd_graph** out)
{
    return guarded([&]() -> int {
        if (!base || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_graph{drd::g_h(base->g)};
        return DRD_OK;
    });
}

int drd_graph_random(const char* model, int n, uint64_t seed, uint64_t index,
                     drd_graph** out)
{
    return guarded([&]() -> int {
        if (!model || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_graph{
            drd::random_graph(drd::parse_random_model(model), n, seed, index)};
        return DRD_OK;
    });
}

int drd_graph_read(const char* path, drd_graph** out)
{
    return guarded([&]() -> int {
        if (!path || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::Graph g = std::strcmp(path, "-") == 0 ? drd::read_edge_list(std::cin)
                                                   : drd::read_edge_list_file(path);
        *out = new drd_graph{std::move(g)};
        return DRD_OK;
    });
}

int drd_graph_write(const drd_graph* g, const char* path)
{
    return guarded([&]() -> int {
        if (!g || !path)
            return fail(DRD_ERR_INVALID, "null argument");
        if (std::strcmp(path, "-") == 0)
            drd::write_edge_list(std::cout, g->g);
        else
            drd::write_edge_list_file(path, g->g);
        return DRD_OK;
    });
}

void drd_graph_free(drd_graph* g)
{
    delete g;
}

int drd_graph_order(const drd_graph* g)
{
    return g ? g->g.order() : -1;
}

int drd_graph_edge_count(const drd_graph* g)
{
    return g ? g->g.edge_count() : -1;
}

int drd_graph_degree(const drd_graph* g, int v)
{
    if (!g || v < 0 || v >= g->g.order())
        return -1;
    return g->g.degree(v);
}

int drd_graph_neighbors(const drd_graph* g, int v, int* buf, size_t cap,
                        size_t* out_len)
{
    return guarded([&]() -> int {
        if (!g || !out_len || v < 0 || v >= g->g.order())
            return fail(DRD_ERR_INVALID, "bad vertex or null argument");
        const auto& nbrs = g->g.neighbors(v);
        *out_len = nbrs.size();
        if (buf)
            for (size_t i = 0; i < std::min(cap, nbrs.size()); ++i)
                buf[i] = nbrs[i];
        return DRD_OK;
    });
}

/* labelings ---------------------------------------------------------- */

int drd_labeling_create(int n, const int* values, drd_labeling** out)
{
    return guarded([&]() -> int {
        if (!out || (n > 0 && !values))
            return fail(DRD_ERR_INVALID, "null argument");
        std::vector<int> v(values, values + n);
        *out = new drd_labeling{drd::Labeling(std::move(v))};
        return DRD_OK;
    });
}

int drd_labeling_read(const char* path, drd_labeling** out)
{
    return guarded([&]() -> int {
        if (!path || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::Labeling f = std::strcmp(path, "-") == 0 ? drd::read_labeling(std::cin)
                                                      : drd::read_labeling_file(path);
        *out = new drd_labeling{std::move(f)};
        return DRD_OK;
    });
}

int drd_labeling_write(const drd_labeling* f, const char* path)
{
    return guarded([&]() -> int {
        if (!f || !path)
            return fail(DRD_ERR_INVALID, "null argument");
        if (std::strcmp(path, "-") == 0)
            drd::write_labeling(std::cout, f->f);
        else
            drd::write_labeling_file(path, f->f);
        return DRD_OK;
    });
}

void drd_labeling_free(drd_labeling* f)
{
    delete f;
}

int drd_labeling_size(const drd_labeling* f)
{
    return f ? f->f.size() : -1;
}

int drd_labeling_value(const drd_labeling* f, int v)
{
    if (!f || v < 0 || v >= f->f.size())
        return -1;
    return f->f[v];
}

long long drd_weight(const drd_labeling* f)
{
    return f ? drd::weight(f->f) : -1;
}

int drd_validate(const drd_graph* g, const drd_labeling* f, int* pairs, size_t cap,
                 size_t* out_count)
{
    return guarded([&]() -> int {
        if (!g || !f || !out_count)
            return fail(DRD_ERR_INVALID, "null argument");
        auto violations = drd::validate(g->g, f->f);
        *out_count = violations.size();
        if (pairs)
            for (size_t i = 0; i < std::min(cap, violations.size()); ++i) {
                pairs[2 * i] = violations[i].vertex;
                pairs[2 * i + 1] =
                    violations[i].kind == drd::Violation::Kind::ZeroUncovered ? 0 : 1;
            }
        return DRD_OK;
    });
}

int drd_eliminate_ones(const drd_graph* g, const drd_labeling* f, drd_labeling** out)
{
    return guarded([&]() -> int {
        if (!g || !f || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_labeling{drd::eliminate_ones(g->g, f->f)};
        return DRD_OK;
    });
}

/* solver ------------------------------------------------------------- */

int drd_solve(const drd_graph* g, const drd_solve_options* opts, drd_solve_result** out)
{
    return guarded([&]() -> int {
        if (!g || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::SolveOptions sopts;
        if (opts) {
            sopts.allow_ones = opts->allow_ones != 0;
            sopts.timeout = std::chrono::milliseconds(
                opts->timeout_ms > 0 ? opts->timeout_ms : 0);
            if (opts->initial)
                sopts.initial = opts->initial->f;
        }
        *out = new drd_solve_result{drd::gamma_dr(g->g, sopts)};
        return DRD_OK;
    });
}

void drd_solve_result_free(drd_solve_result* r)
{
    delete r;
}

long long drd_solve_value(const drd_solve_result* r)
{
    return r ? r->r.value : -1;
}

int drd_solve_status(const drd_solve_result* r)
{
    return r && r->r.status == drd::SolveStatus::Timeout ? 1 : 0;
}

long long drd_solve_nodes(const drd_solve_result* r)
{
    return r ? r->r.nodes_expanded : -1;
}

long long drd_solve_millis(const drd_solve_result* r)
{
    return r ? r->r.elapsed.count() : -1;
}

long long drd_solve_lower(const drd_solve_result* r)
{
    return r ? r->r.lower : -1;
}

long long drd_solve_upper(const drd_solve_result* r)
{
    return r ? r->r.upper : -1;
}

int drd_solve_witness(const drd_solve_result* r, drd_labeling** out)
{
    return guarded([&]() -> int {
        if (!r || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_labeling{r->r.witness};
        return DRD_OK;
    });
}

int drd_gamma_naive(const drd_graph* g, int allow_ones, long long* out_value)
{
    return guarded([&]() -> int {
        if (!g || !out_value)
            return fail(DRD_ERR_INVALID, "null argument");
        *out_value = drd::gamma_dr_naive(g->g, allow_ones != 0);
        return DRD_OK;
    });
}

/* constructive engine ------------------------------------------------ */

int drd_construct(const drd_graph* g, const drd_construct_options* opts,
                  drd_construct_result** out)
{
    return guarded([&]() -> int {
        if (!g || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::ConstructOptions copts;
        if (opts) {
            if (opts->fallback_n > 0)
                copts.fallback_n = opts->fallback_n;
            if (opts->rule_mask != 0)
                copts.rule_mask = opts->rule_mask;
        }
        *out = new drd_construct_result{drd::construct_drdf(g->g, copts)};
        return DRD_OK;
    });
}

void drd_construct_result_free(drd_construct_result* r)
{
    delete r;
}

int drd_construct_labeling(const drd_construct_result* r, drd_labeling** out)
{
    return guarded([&]() -> int {
        if (!r || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        *out = new drd_labeling{r->r.labeling};
        return DRD_OK;
    });
}

size_t drd_construct_step_count(const drd_construct_result* r)
{
    return r ? r->r.trace.steps.size() : 0;
}

const char* drd_construct_step_rule(const drd_construct_result* r, size_t i)
{
    if (!r || i >= r->r.trace.steps.size())
        return "";
    return r->r.trace.steps[i].rule.c_str();
}

int drd_construct_step_removed(const drd_construct_result* r, size_t i)
{
    if (!r || i >= r->r.trace.steps.size())
        return -1;
    return r->r.trace.steps[i].removed;
}

long long drd_construct_step_weight(const drd_construct_result* r, size_t i)
{
    if (!r || i >= r->r.trace.steps.size())
        return -1;
    return r->r.trace.steps[i].weight_added;
}

int drd_construct_step_vertices(const drd_construct_result* r, size_t i, int* buf,
                                size_t cap, size_t* out_len)
{
    return guarded([&]() -> int {
        if (!r || !out_len || i >= r->r.trace.steps.size())
            return fail(DRD_ERR_INVALID, "bad step index or null argument");
        const auto& verts = r->r.trace.steps[i].vertices;
        *out_len = verts.size();
        if (buf)
            for (size_t k = 0; k < std::min(cap, verts.size()); ++k)
                buf[k] = verts[k];
        return DRD_OK;
    });
}

int drd_construct_fallback_used(const drd_construct_result* r)
{
    return r && r->r.trace.fallback_used ? 1 : 0;
}

const char* drd_construct_final_base(const drd_construct_result* r)
{
    return r ? r->r.trace.final_base.c_str() : "";
}

int drd_check_bound(const drd_graph* g, const drd_labeling* f, drd_bound_report* out)
{
    return guarded([&]() -> int {
        if (!g || !f || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::BoundReport rep = drd::check_bound(g->g, f->f);
        out->n = rep.n;
        out->weight = rep.achieved_weight;
        out->threshold_num = rep.threshold_num;
        out->threshold_den = rep.threshold_den;
        out->satisfied = rep.satisfied ? 1 : 0;
        std::string tags;
        for (const auto& t : rep.tags) {
            if (!tags.empty())
                tags += ",";
            tags += t;
        }
        copy_string(out->tags, sizeof(out->tags), tags);
        return DRD_OK;
    });
}

int drd_membership(const drd_graph* g, int* status, char* reason, size_t reason_cap)
{
    return guarded([&]() -> int {
        if (!g || !status)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::MembershipResult res = drd::membership_e(g->g);
        switch (res.status) {
        case drd::EMembership::InFamily: *status = 0; break;
        case drd::EMembership::Excluded: *status = 1; break;
        case drd::EMembership::Unknown: *status = 2; break;
        }
        copy_string(reason, reason_cap, res.reason);
        return DRD_OK;
    });
}

/* sweep ---------------------------------------------------------------- */

int drd_sweep(const drd_sweep_config* config, drd_sweep_summary* out)
{
    return guarded([&]() -> int {
        if (!config || !out)
            return fail(DRD_ERR_INVALID, "null argument");
        drd::SweepConfig cfg;
        cfg.n_min = config->n_min;
        cfg.n_max = config->n_max;
        cfg.min_degree = config->min_degree;
        cfg.connected_only = config->connected_only != 0;
        switch (config->mode) {
        case 0: cfg.mode = drd::SweepMode::Exact; break;
        case 1: cfg.mode = drd::SweepMode::Construct; break;
        case 2: cfg.mode = drd::SweepMode::Both; break;
        default: return fail(DRD_ERR_INVALID, "bad sweep mode");
        }
        if (config->exclude && *config->exclude) {
            std::string list = config->exclude;
            size_t pos = 0;
            while (pos < list.size()) {
                size_t comma = list.find(',', pos);
                if (comma == std::string::npos)
                    comma = list.size();
                const std::string item = list.substr(pos, comma - pos);
                pos = comma + 1;
                drd::FamilySpec spec;
                if (item == "c5") {
                    spec.kind = drd::FamilySpec::Kind::Cycle;
                    spec.n = 5;
                } else if (item == "c7") {
                    spec.kind = drd::FamilySpec::Kind::Cycle;
                    spec.n = 7;
                } else if (item == "q") {
                    spec.kind = drd::FamilySpec::Kind::QGraph;
                } else if (item.empty()) {
                    continue;
                } else {
                    return fail(DRD_ERR_INVALID, "unknown exclusion: " + item);
                }
                cfg.exclude.push_back(spec);
            }
        }
        if (config->report_path)
            cfg.report_path = config->report_path;
        cfg.jobs = config->jobs > 0 ? config->jobs : 1;
        cfg.seed = config->seed;
        if (config->fallback_n > 0)
            cfg.fallback_n = config->fallback_n;
        drd::SweepSummary summary = drd::run_sweep(cfg);
        out->instances = summary.instances;
        out->satisfied = summary.satisfied;
        out->violations = summary.violations;
        out->excluded = summary.excluded;
        return DRD_OK;
    });
}

} /* extern "C" */
