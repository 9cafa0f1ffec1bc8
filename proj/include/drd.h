/*
 * C API for the double Roman domination toolkit.
 *
 * All functions return DRD_OK (0) on success or a DRD_ERR_* code; the
 * thread-local drd_last_error() message describes the most recent failure.
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function.
 */
#ifndef DRD_H
#define DRD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct drd_graph drd_graph;
typedef struct drd_labeling drd_labeling;
typedef struct drd_solve_result drd_solve_result;
typedef struct drd_construct_result drd_construct_result;

enum {
    DRD_OK = 0,
    DRD_ERR_INVALID = 1, /* bad argument or violated precondition */
    DRD_ERR_PARSE = 2,   /* malformed input text */
    DRD_ERR_IO = 3,      /* file system failure */
    DRD_ERR_INTERNAL = 4
};

const char* drd_last_error(void);
/* 1-based input line of the last DRD_ERR_PARSE, 0 otherwise */
int drd_last_parse_line(void);

const char* drd_version(void);

/* ------------------------------------------------------------------ */
/* graphs                                                              */

/* edges_uv holds m pairs (u0,v0,u1,v1,...) */
int drd_graph_build(int n, const int* edges_uv, size_t m, drd_graph** out);

/*
 * Families and their params:
 *   "cycle" | "path" | "complete": [n]
 *   "tadpole": [m, k]
 *   "spider": leg lengths (>= 3 of them)
 *   "q": []
 *   "star": [t, m1,k1,...,mt,kt, r, len1..lenr, s, len1..lens]
 *           (t tadpoles, r attached cycles, s identified cycles)
 * GQ/GH take a base graph and have their own constructors.
 */
int drd_graph_from_family(const char* family, const long long* params, size_t nparams,
                          drd_graph** out);
int drd_graph_gq(const drd_graph* base, drd_graph** out);
int drd_graph_gh(const drd_graph* base, drd_graph** out);

/* models: "uniform-min-deg-2", "cycle-union", "spider" */
int drd_graph_random(const char* model, int n, uint64_t seed, uint64_t index,
                     drd_graph** out);

/* path "-" reads stdin / writes stdout */
int drd_graph_read(const char* path, drd_graph** out);
int drd_graph_write(const drd_graph* g, const char* path);

void drd_graph_free(drd_graph* g);
int drd_graph_order(const drd_graph* g);
int drd_graph_edge_count(const drd_graph* g);
int drd_graph_degree(const drd_graph* g, int v);
int drd_graph_neighbors(const drd_graph* g, int v, int* buf, size_t cap,
                        size_t* out_len);

/* ------------------------------------------------------------------ */
/* labelings                                                           */

int drd_labeling_create(int n, const int* values, drd_labeling** out);
int drd_labeling_read(const char* path, drd_labeling** out);
int drd_labeling_write(const drd_labeling* f, const char* path);
void drd_labeling_free(drd_labeling* f);
int drd_labeling_size(const drd_labeling* f);
int drd_labeling_value(const drd_labeling* f, int v);
long long drd_weight(const drd_labeling* f);

/*
 * Writes up to cap (vertex, kind) pairs of condition violations; kind 0 is a
 * 0-vertex without two 2-neighbors or a 3-neighbor, kind 1 a 1-vertex without
 * a >=2 neighbor. out_count receives the total number of violations.
 */
int drd_validate(const drd_graph* g, const drd_labeling* f, int* pairs, size_t cap,
                 size_t* out_count);
int drd_eliminate_ones(const drd_graph* g, const drd_labeling* f, drd_labeling** out);

/* ------------------------------------------------------------------ */
/* exact solver                                                        */

typedef struct {
    int allow_ones;              /* search {0,1,2,3} instead of {0,2,3} */
    long long timeout_ms;        /* 0 = unlimited */
    const drd_labeling* initial; /* optional valid warm-start witness */
} drd_solve_options;

int drd_solve(const drd_graph* g, const drd_solve_options* opts,
              drd_solve_result** out);
void drd_solve_result_free(drd_solve_result* r);
long long drd_solve_value(const drd_solve_result* r);
int drd_solve_status(const drd_solve_result* r); /* 0 optimal, 1 timeout */
long long drd_solve_nodes(const drd_solve_result* r);
long long drd_solve_millis(const drd_solve_result* r);
long long drd_solve_lower(const drd_solve_result* r);
long long drd_solve_upper(const drd_solve_result* r);
int drd_solve_witness(const drd_solve_result* r, drd_labeling** out);

/* full enumeration oracle, n <= 12 */
int drd_gamma_naive(const drd_graph* g, int allow_ones, long long* out_value);

/* ------------------------------------------------------------------ */
/* constructive bound engine                                           */

typedef struct {
    int fallback_n;     /* <= 0 selects the default (12) */
    uint32_t rule_mask; /* 0 selects all rules */
} drd_construct_options;

int drd_construct(const drd_graph* g, const drd_construct_options* opts,
                  drd_construct_result** out);
void drd_construct_result_free(drd_construct_result* r);
int drd_construct_labeling(const drd_construct_result* r, drd_labeling** out);
size_t drd_construct_step_count(const drd_construct_result* r);
const char* drd_construct_step_rule(const drd_construct_result* r, size_t i);
int drd_construct_step_removed(const drd_construct_result* r, size_t i);
long long drd_construct_step_weight(const drd_construct_result* r, size_t i);
int drd_construct_step_vertices(const drd_construct_result* r, size_t i, int* buf,
                                size_t cap, size_t* out_len);
int drd_construct_fallback_used(const drd_construct_result* r);
const char* drd_construct_final_base(const drd_construct_result* r);

typedef struct {
    int n;
    long long weight;
    long long threshold_num; /* 12n */
    int threshold_den;       /* 11 */
    int satisfied;           /* 11*weight <= 12*n */
    char tags[160];          /* comma-separated exclusion tags */
} drd_bound_report;

int drd_check_bound(const drd_graph* g, const drd_labeling* f, drd_bound_report* out);

/* status: 0 in family, 1 excluded, 2 unknown */
int drd_membership(const drd_graph* g, int* status, char* reason, size_t reason_cap);

/* ------------------------------------------------------------------ */
/* sweep harness                                                       */

typedef struct {
    int n_min, n_max;
    int min_degree;
    int connected_only;
    int mode;                /* 0 exact, 1 construct, 2 both */
    const char* exclude;     /* comma list: "c5,c7" (may be NULL) */
    const char* report_path; /* may be NULL */
    int jobs;
    uint64_t seed;
    int fallback_n;
} drd_sweep_config;

typedef struct {
    long long instances, satisfied, violations, excluded;
} drd_sweep_summary;

int drd_sweep(const drd_sweep_config* config, drd_sweep_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* DRD_H */
