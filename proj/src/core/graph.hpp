#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace graphmatch {

using vertex_t = int;

struct edge_t {
    vertex_t u = 0;
    vertex_t v = 0; // canonical form keeps u < v
    friend auto operator<=>(const edge_t&, const edge_t&) = default;
};

// Length of a shortest cycle, or infinite for acyclic graphs. Every
// "girth >= c" guard treats infinite as satisfying.
class girth_t {
public:
    static girth_t finite(int length);
    static girth_t infinite() {
        girth_t g;
        g.infinite_ = true;
        return g;
    }

    bool is_infinite() const { return infinite_; }
    int length() const; // finite girths only
    bool at_least(int bound) const { return infinite_ || length_ >= bound; }
    std::string str() const;

    friend bool operator==(const girth_t&, const girth_t&) = default;

private:
    girth_t() = default;
    int length_ = 0;
    bool infinite_ = false;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are kept
// sorted with the smaller endpoint first; all operations are pure.
class graph {
public:
    graph(int n, std::vector<edge_t> edges);

    // Text format: first line "n m", then m lines "u v".
    static graph parse_edge_list(const std::string& text);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    std::span<const edge_t> edges() const { return edges_; }
    const std::vector<vertex_t>& neighbors(vertex_t u) const;
    int degree(vertex_t u) const;
    bool has_edge(vertex_t u, vertex_t v) const;

    // G - {u, v}: removes both vertices and every incident edge. Surviving
    // vertices are relabeled 0..n-3 preserving their relative order.
    graph delete_pair(vertex_t u, vertex_t v) const;

    std::string to_edge_list() const;

private:
    void check_vertex(vertex_t u) const;

    int n_ = 0;
    std::vector<edge_t> edges_;
    std::vector<std::vector<vertex_t>> adj_;
};

// Shortest-cycle search by BFS from every vertex, O(n * (n + m)).
girth_t compute_girth(const graph& g);

enum class family_kind {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    caterpillar,
    sunlet,
};

struct family_spec {
    family_kind kind = family_kind::path;
    std::vector<long long> params;
};

family_kind family_kind_from_string(const std::string& name);
const char* family_kind_name(family_kind kind);

// Deterministic construction of the named family:
//   path n (n>=1), cycle n (n>=3), star n (n>=1), complete n (n>=1),
//   complete_bipartite p q (p,q>=1),
//   caterpillar k (k>=4): k-vertex path with a pendant vertex attached at
//     each of the interior positions 3..k-2, giving 2k-4 vertices,
//   sunlet k (k>=3): k-cycle with a pendant vertex attached at every cycle
//     vertex, giving 2k vertices.
graph generate(const family_spec& spec);

// Seeded random graph with girth >= min_girth (a forest when min_girth is
// infinite). Edges are inserted one at a time, rejecting any insertion that
// would close a cycle shorter than the bound; after a bounded number of
// attempts the graph is returned as-is, so it may have fewer than target_m
// edges. Same seed, same graph.
graph random_with_min_girth(int n, long long target_m, girth_t min_girth,
                            std::uint64_t seed);

} // namespace graphmatch
