/* kpath — randomized O*(2^k) detection and construction of simple
 * k-vertex paths, plus the general multilinear-term detector for
 * scalar-free arithmetic circuits.
 *
 * C API over opaque handles. Every function that can fail returns a
 * kpath_status; kpath_last_error() describes the most recent failure on
 * the calling thread.
 */
#ifndef KPATH_H
#define KPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kpath_status {
    KPATH_OK = 0,
    KPATH_ERR_PARAM = 1,       /* precondition violated */
    KPATH_ERR_PARSE = 2,       /* malformed input text */
    KPATH_ERR_UNSUPPORTED = 3, /* valid request outside build limits */
    KPATH_ERR_EXTRACTION = 4,  /* randomness retry budget exhausted */
    KPATH_ERR_NOMEM = 5,
    KPATH_ERR_INTERNAL = 6
} kpath_status;

typedef struct kpath_graph kpath_graph;     /* opaque */
typedef struct kpath_circuit kpath_circuit; /* opaque */

typedef struct kpath_decision {
    int yes;          /* 0 or 1; 1 is certified by a nonzero evaluation */
    int trials_used;  /* trials executed before stopping */
    uint64_t seed;    /* master seed the decision was derived from */
} kpath_decision;

const char* kpath_version(void);
const char* kpath_status_name(kpath_status s);
/* Message for the last failing call on this thread ("" if none). */
const char* kpath_last_error(void);

/* ---- graphs -------------------------------------------------------- */

/* Vertices are 1..n. directed != 0 builds a directed graph. */
kpath_status kpath_graph_create(int n, int directed, kpath_graph** out);
void kpath_graph_free(kpath_graph* g);

/* u != v, both in 1..n; duplicate edges are ignored. */
kpath_status kpath_graph_add_edge(kpath_graph* g, int u, int v);

/* Text format: '#' comments, header "n m directed|undirected",
 * then m lines "u v". */
kpath_status kpath_graph_parse(const char* text, size_t len, kpath_graph** out);
/* Serializes into buf (cap bytes incl. NUL); *need gets the full size. */
kpath_status kpath_graph_format(const kpath_graph* g, char* buf, size_t cap, size_t* need);

/* kind: "hampath" | "random" | "grid". */
kpath_status kpath_graph_generate(const char* kind, int n, double p, uint64_t seed,
                                  kpath_graph** out);

int kpath_graph_order(const kpath_graph* g);       /* n */
long kpath_graph_edge_count(const kpath_graph* g); /* m */
int kpath_graph_is_directed(const kpath_graph* g);
int kpath_graph_has_edge(const kpath_graph* g, int u, int v);

/* ---- k-path detection and construction ----------------------------- */

/* One randomized trial; *out_yes is never 1 without a k-vertex path. */
kpath_status kpath_detect_trial(const kpath_graph* g, int k, uint64_t seed, int* out_yes);

/* Up to `trials` independent trials, stopping at the first yes.
 * False-negative probability <= (4/5)^trials on yes-instances. */
kpath_status kpath_detect(const kpath_graph* g, int k, int trials, uint64_t seed,
                          kpath_decision* out);

/* Writes the path (1-based vertex ids) into out_vertices (capacity cap >= k)
 * and sets *out_len = k, or *out_len = 0 when no path exists.
 * KPATH_ERR_EXTRACTION reports an exhausted retry budget, which is
 * distinct from "no path". */
kpath_status kpath_find(const kpath_graph* g, int k, uint64_t seed, int* out_vertices,
                        size_t cap, size_t* out_len);

/* Exact references (exponential in n; n <= 25 for held_karp). */
kpath_status kpath_held_karp(const kpath_graph* g, int k, int* out_vertices, size_t cap,
                             size_t* out_len);
kpath_status kpath_brute_force(const kpath_graph* g, int k, int* out_vertices, size_t cap,
                               size_t* out_len);

/* 1 iff vertices[0..len) is a simple path of adjacent vertices in g. */
int kpath_verify_path(const kpath_graph* g, const int* vertices, size_t len);

/* Number of k-vertex walks (1 * A^{k-1} * 1). */
kpath_status kpath_count_walks(const kpath_graph* g, int k, uint64_t* out_count);

/* ---- scalar-free circuits ------------------------------------------ */

/* Text format: "g<id> = INPUT x<i>" | "g<id> = ADD g.. g.." |
 * "g<id> = MUL g<a> g<b>", final "OUTPUT g<id>"; '#' comments. */
kpath_status kpath_circuit_parse(const char* text, size_t len, kpath_circuit** out);
void kpath_circuit_free(kpath_circuit* c);

int kpath_circuit_num_vars(const kpath_circuit* c);
int64_t kpath_circuit_degree(const kpath_circuit* c);

/* One-sided multilinear-term detector; requires circuit degree <= k. */
kpath_status kpath_detect_multilinear(const kpath_circuit* c, int k, int trials, uint64_t seed,
                                      int* out_yes);

/* ---- diagnostics ---------------------------------------------------- */

/* Runs the built-in worked-example and oracle-equivalence checks,
 * reporting each via the callback (may be NULL). Returns the number of
 * failed checks via *out_failures. */
typedef void (*kpath_selftest_report_fn)(int ok, const char* name, void* user);
kpath_status kpath_selftest(kpath_selftest_report_fn report, void* user, int* out_failures);

#ifdef __cplusplus
}
#endif

#endif /* KPATH_H */
