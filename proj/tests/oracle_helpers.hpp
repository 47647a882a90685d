#pragma once

// Cross-check helpers kept deliberately independent of the library's own
// algorithms: subset enumeration instead of deletion recursion, all-pairs
// loops instead of per-vertex grouping.

#include <vector>

#include "core/arith.hpp"
#include "core/graph.hpp"

namespace testutil {

using graphmatch::Int;
using graphmatch::graph;

// Counts k-matchings by walking every k-subset of the edge list.
inline Int naive_matching_count(const graph& g, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    const auto edges = g.edges();
    const long long m = g.edge_count();
    if (k > m) return 0;

    std::vector<size_t> pick(static_cast<size_t>(k));
    for (size_t i = 0; i < pick.size(); ++i) pick[i] = i;

    Int count = 0;
    while (true) {
        std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
        bool disjoint = true;
        for (size_t idx : pick) {
            const auto [u, v] = edges[idx];
            if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) {
                disjoint = false;
                break;
            }
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
        }
        if (disjoint) ++count;

        // next combination in lexicographic order
        size_t i = pick.size();
        while (i > 0) {
            --i;
            if (pick[i] != static_cast<size_t>(m) - pick.size() + i) break;
            if (i == 0) return count;
        }
        ++pick[i];
        for (size_t j = i + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
}

inline int edge_degree(const graph& g, graphmatch::edge_t e) {
    return g.degree(e.u) + g.degree(e.v) - 2;
}

// Sum of d(e)d(f) over incident edge pairs, by scanning all pairs of edges.
inline Int naive_em2(const graph& g) {
    const auto edges = g.edges();
    Int total = 0;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto a = edges[i], b = edges[j];
            int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
            if (shared == 1)
                total += Int(edge_degree(g, a)) * edge_degree(g, b);
        }
    return total;
}

// gamma and the incidence-pair count straight from the definition: vertex v
// and edge xy are incident when v is a neighbor of x or y but not an endpoint.
inline Int naive_gamma(const graph& g) {
    Int total = 0;
    for (graphmatch::vertex_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& [x, y] : g.edges()) {
            if (v == x || v == y) continue;
            if (g.has_edge(v, x) || g.has_edge(v, y))
                total += Int(g.degree(v)) * (g.degree(x) + g.degree(y));
        }
    return total;
}

inline long long naive_incidence_count(const graph& g) {
    long long total = 0;
    for (graphmatch::vertex_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& [x, y] : g.edges()) {
            if (v == x || v == y) continue;
            if (g.has_edge(v, x) || g.has_edge(v, y)) ++total;
        }
    return total;
}

} // namespace testutil
