#pragma once

#include <string>
#include <vector>

#include "arith.hpp"
#include "graph.hpp"

namespace graphmatch {

enum class count_method { oracle, recurrence, formula };

const char* count_method_name(count_method m);

// An exact matching count together with how it was produced. The value is
// integral whenever girth_ok holds; a closed form evaluated by force outside
// its girth hypothesis may carry an arbitrary rational.
struct match_count {
    long long k = 0;
    Rat exact;
    count_method method = count_method::oracle;
    bool girth_ok = true;

    bool is_integral() const { return graphmatch::is_integral(exact); }
    Int value() const { return to_int(exact); }
    std::string str() const { return rat_str(exact); }
};

// Ground truth: the number of k-edge subsets with pairwise disjoint
// endpoints, counted by deletion/contraction on the first remaining edge.
match_count oracle_count(const graph& g, long long k);

// p(G;k) = (1/k) * sum over edges uv of p(G - {u,v}; k-1), evaluated down to
// p(.;1) = m. Every division by k is checked to be exact.
match_count recurrence_count(const graph& g, long long k);

// k-matchings that contain the edge uv: p(G - {u,v}; k-1).
match_count containing_edge_count(const graph& g, vertex_t u, vertex_t v,
                                  long long k);

// Coefficients p(G;0..floor(n/2)); p(G;k) pairs with w1^(n-2k) * w2^k.
struct matching_polynomial {
    std::vector<Int> coefficients;
};
matching_polynomial compute_matching_polynomial(const graph& g);

// Aggregates of the form sum over edges uv of f(G - {u,v}), each computed by
// literally deleting the pair and measuring the subgraph.
struct pair_deletion_sums {
    Int mu1, mu2, mu3, mu4;  // powers 1..4 of the surviving edge count
    Int xi1, xi2, xi3;       // degree-power sums: exponents 2, 3, 4
    Int rho1;                // m' * M1'
    Int eta1;                // M2'
    Int sum_m1_sq;           // (M1')^2
    Int sum_m_forgotten;     // m' * F'
    Int sum_msq_m1;          // (m')^2 * M1'
    Int sum_em2;             // EM2'
    Int sum_m_m2;            // m' * M2'
};
pair_deletion_sums compute_pair_deletion_sums(const graph& g);

// The same aggregates from degree invariants of G alone. mu1..mu4 hold on
// every simple graph; xi1..xi3 and rho1 need girth >= 4; eta1 needs
// girth >= 5. Callers enforce the girth bounds.
struct pair_deletion_closed_forms {
    Int mu1, mu2, mu3, mu4;
    Int xi1, xi2, xi3;
    Int rho1;
    Int eta1;
};
pair_deletion_closed_forms compute_pair_deletion_closed_forms(const graph& g);

// Closed-form p(G;k) for k = 2..5 from degree and incidence invariants.
// Girth hypotheses: none for k = 2, girth > 3 for k = 3, girth >= 5 for
// k = 4 and 5. A violated hypothesis raises girth_error unless force is set,
// in which case the value is computed anyway with girth_ok = false and no
// integrality claim.
match_count formula_count(const graph& g, long long k, bool force = false);

} // namespace graphmatch
