/* graphmatch: exact degree-based graph invariants and k-matching counts.
 *
 * C interface of the shared library. Graphs are opaque handles; every
 * function that can fail returns a gm_status, with a human-readable message
 * available from gm_last_error() until the next call on the same thread.
 *
 * All numeric results are returned as malloc'd decimal strings so that
 * arbitrary-precision values survive the ABI; release them with
 * gm_string_free(). A value computed by force outside its girth hypothesis
 * may be a non-integer and is then formatted as "numerator/denominator".
 */
#ifndef GRAPHMATCH_H
#define GRAPHMATCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gm_graph gm_graph;

typedef enum gm_status {
    GM_OK = 0,
    GM_ERR_PARSE = 1,      /* malformed edge-list text */
    GM_ERR_DOMAIN = 2,     /* parameter or precondition violation */
    GM_ERR_GIRTH = 3,      /* closed form requested outside its girth bound */
    GM_ERR_NO_FORMULA = 4, /* no closed form for the request */
    GM_ERR_INTERNAL = 5,   /* exactness violation; indicates a library bug */
    GM_ERR_ARG = 6         /* null pointer or invalid argument */
} gm_status;

/* Girth value used by gm_graph_girth for acyclic graphs. */
#define GM_GIRTH_INFINITE (-1)

const char* gm_version(void);

/* Message for the most recent failing call on this thread. */
const char* gm_last_error(void);

void gm_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Graph construction and structure                                    */

/* Edge-list text: first line "n m", then m lines "u v" with 0 <= u,v < n.
 * Self-loops, duplicate edges, out-of-range labels and malformed lines are
 * rejected with a message naming the offending line. */
gm_status gm_graph_parse(const char* text, gm_graph** out);

/* kind: path | cycle | star | complete | complete_bipartite | caterpillar |
 * sunlet. All families take one parameter except complete_bipartite (p, q). */
gm_status gm_graph_family(const char* kind, const int64_t* params,
                          size_t n_params, gm_graph** out);

/* Seeded random graph with girth >= min_girth; pass GM_GIRTH_INFINITE to
 * request a forest. Best effort: the result can have fewer than target_m
 * edges. Same seed, same graph. */
gm_status gm_graph_random_min_girth(int64_t n, int64_t target_m,
                                    int64_t min_girth, uint64_t seed,
                                    gm_graph** out);

/* G - {u, v} with order-preserving relabeling of the survivors. */
gm_status gm_graph_delete_pair(const gm_graph* g, int64_t u, int64_t v,
                               gm_graph** out);

void gm_graph_free(gm_graph* g);

/* Counts return -1 when g is null. */
int64_t gm_graph_vertex_count(const gm_graph* g);
int64_t gm_graph_edge_count(const gm_graph* g);
/* Edges are sorted with the smaller endpoint first; index in [0, m). */
gm_status gm_graph_edge(const gm_graph* g, int64_t index, int64_t* u, int64_t* v);
/* Degree of a vertex, or -1 on bad arguments. */
int64_t gm_graph_degree(const gm_graph* g, int64_t v);
/* Shortest cycle length; GM_GIRTH_INFINITE for acyclic graphs. */
gm_status gm_graph_girth(const gm_graph* g, int64_t* out_girth);
/* Canonical edge-list text; parses back to an identical graph. */
gm_status gm_graph_to_edge_list(const gm_graph* g, char** out_text);

/* ------------------------------------------------------------------ */
/* Invariants                                                          */

/* name: m1 | m2 | f | em1 | em2 | alpha | beta | gamma | lambda_count.
 * m1/m2 are the Zagreb indices, f the forgotten index, em1/em2 their edge
 * (reformulated) counterparts; alpha/beta/gamma are the incidence sums and
 * lambda_count the number of vertex-edge incidence pairs. */
gm_status gm_invariant(const gm_graph* g, const char* name, char** out_value);

/* Exponent-parameterized variants, 0 <= exponent <= 8.
 * name: m1 (sum of d^e) | m2 (sum of (d u * d v)^e) | alpha. */
gm_status gm_invariant_general(const gm_graph* g, const char* name,
                               int64_t exponent, char** out_value);

/* ------------------------------------------------------------------ */
/* Matching counts                                                     */

/* p(G;k) by brute-force enumeration (ground truth). */
gm_status gm_count_oracle(const gm_graph* g, int64_t k, char** out_value);

/* p(G;k) by the edge-deletion recurrence; every internal division is
 * checked to be exact. */
gm_status gm_count_recurrence(const gm_graph* g, int64_t k, char** out_value);

/* Closed-form p(G;k) for k = 2..5. Girth hypotheses: none for k = 2,
 * girth > 3 for k = 3, girth >= 5 for k = 4 and 5. When the hypothesis
 * fails: GM_ERR_GIRTH if force is 0, otherwise the value is computed anyway
 * and *out_girth_ok is set to 0. out_girth_ok may be NULL. */
gm_status gm_count_formula(const gm_graph* g, int64_t k, int force,
                           char** out_value, int* out_girth_ok);

/* k-matchings containing the edge uv (k >= 1, uv must be an edge). */
gm_status gm_count_containing_edge(const gm_graph* g, int64_t u, int64_t v,
                                   int64_t k, char** out_value);

/* JSON array of decimal strings: p(G;0), ..., p(G;floor(n/2)). */
gm_status gm_matching_polynomial(const gm_graph* g, char** out_json);

/* JSON object with every pair-deletion aggregate (mu1..mu4, xi1..xi3, rho1,
 * eta1, and the five auxiliary sums), all computed by direct deletion. */
gm_status gm_pair_deletion_sums(const gm_graph* g, char** out_json);

/* ------------------------------------------------------------------ */
/* Family closed forms                                                 */

/* Printed closed-form count for a named family; GM_ERR_NO_FORMULA when the
 * table has no entry for (kind, k), GM_ERR_DOMAIN below a validity
 * threshold. */
gm_status gm_family_count(const char* kind, const int64_t* params,
                          size_t n_params, int64_t k, char** out_value);

/* ------------------------------------------------------------------ */
/* Verification suites                                                 */

/* Seeded identity suite: every invariant identity and pair-deletion closed
 * form, gated on each graph's girth; trials graphs per girth class
 * (any / >= 4 / >= 5). Emits a JSON report
 * {"seed":..., "trials":..., "girth_class":..., "failures":[...]} and the
 * failure count; a failing check is data, not an error status. */
gm_status gm_verify_identities(int64_t trials, uint64_t seed, char** out_json,
                               int64_t* out_failures);

/* Seeded closed-form-vs-oracle suite on the same three girth classes;
 * trial graphs have between 4 and n_max vertices (n_max <= 20). */
gm_status gm_verify_formulas(int64_t trials, uint64_t seed, int64_t n_max,
                             char** out_json, int64_t* out_failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHMATCH_H */
