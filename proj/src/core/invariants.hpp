#pragma once

#include <map>
#include <set>
#include <vector>

#include "arith.hpp"
#include "graph.hpp"

namespace graphmatch {

// Exponents are restricted to small non-negative integers; the closed forms
// only ever need 1..5.
inline constexpr int max_exponent = 8;

// Degree-power sums and their edge counterparts. The degree of an edge
// e = uv is d(u) + d(v) - 2.
struct degree_invariants {
    Int m1;        // first Zagreb, sum of d(u)^2
    Int m2;        // second Zagreb, sum of d(u)d(v) over edges
    Int forgotten; // sum of d(u)^3
    Int em1;       // reformulated first Zagreb, sum of d(e)^2 over edges
    Int em2;       // reformulated second Zagreb, sum of d(e)d(f) over
                   // unordered incident edge pairs
    std::map<int, Int> m1_general; // exponent -> sum of d(u)^exp
    std::map<int, Int> m2_general; // exponent -> sum of (d(u)d(v))^exp
};

// Sums over vertex-edge incidences. A vertex v is incident to an edge xy
// when v is adjacent to x or to y (and v is not an endpoint); each such
// {v, xy} pair is counted once.
struct incidence_invariants {
    Int alpha;                        // sum over edges of d(u)d(v)(d(u)+d(v))
    std::map<int, Int> alpha_general; // exponent form of alpha
    Int beta;  // sum over incident edge pairs of d(shared)(d(e)+d(f))
    Int gamma; // sum over {v, xy} incidences of d(v)(d(x)+d(y))
    long long incidence_count = 0; // number of {v, e} incidence pairs
};

// exponents is widened to include 1..5, which the matching formulas consume.
degree_invariants compute_degree_invariants(const graph& g,
                                            const std::set<int>& exponents = {});
incidence_invariants compute_incidence_invariants(
    const graph& g, const std::set<int>& exponents = {});

// S(u) = sum of the degrees of u's neighbors, i.e. d(u) times the average
// neighbor degree, kept in integer form.
std::vector<long long> neighbor_degree_sums(const graph& g);

} // namespace graphmatch
