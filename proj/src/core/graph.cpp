#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace graphmatch {

girth_t girth_t::finite(int length) {
    if (length < 3)
        throw domain_error("finite girth must be at least 3, got " +
                           std::to_string(length));
    girth_t g;
    g.length_ = length;
    return g;
}

int girth_t::length() const {
    if (infinite_) throw domain_error("infinite girth has no finite length");
    return length_;
}

std::string girth_t::str() const {
    return infinite_ ? "infinite" : std::to_string(length_);
}

graph::graph(int n, std::vector<edge_t> edges) : n_(n) {
    if (n < 0) throw domain_error("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw domain_error("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw domain_error("edge endpoint out of range: " + std::to_string(e.u) +
                               " " + std::to_string(e.v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw domain_error("duplicate edge");
    edges_ = std::move(edges);

    adj_.resize(static_cast<size_t>(n_));
    for (const auto& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

namespace {

struct line_reader {
    std::istringstream in;
    int line_no = 0;

    explicit line_reader(const std::string& text) : in(text) {}

    // Returns false at end of input. CRLF and trailing spaces are accepted.
    bool next(std::string& out) {
        if (!std::getline(in, out)) return false;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        ++line_no;
        return true;
    }
};

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ls(line);
    if (!(ls >> a >> b)) return false;
    std::string rest;
    if (ls >> rest) return false; // trailing garbage
    return true;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

} // namespace

graph graph::parse_edge_list(const std::string& text) {
    line_reader reader(text);
    std::string line;
    if (!reader.next(line) || blank(line))
        throw parse_error("line 1: expected header 'n m'");
    long long n = 0, m = 0;
    if (!parse_two_ints(line, n, m))
        throw parse_error("line 1: malformed header '" + line + "', expected 'n m'");
    if (n < 0 || m < 0)
        throw parse_error("line 1: negative count in header '" + line + "'");

    std::vector<edge_t> edges;
    edges.reserve(static_cast<size_t>(m));
    std::set<std::pair<long long, long long>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line))
            throw parse_error("expected " + std::to_string(m) + " edge lines, found " +
                              std::to_string(i));
        const int line_no = reader.line_no;
        long long u = 0, v = 0;
        if (!parse_two_ints(line, u, v))
            throw parse_error("line " + std::to_string(line_no) + ": malformed edge '" +
                              line + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("line " + std::to_string(line_no) +
                              ": vertex label out of range in '" + line + "' (n = " +
                              std::to_string(n) + ")");
        if (u == v)
            throw parse_error("line " + std::to_string(line_no) + ": self-loop '" +
                              line + "'");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw parse_error("line " + std::to_string(line_no) + ": duplicate edge '" +
                              line + "'");
        edges.push_back({static_cast<vertex_t>(key.first),
                         static_cast<vertex_t>(key.second)});
    }
    while (reader.next(line)) {
        if (!blank(line))
            throw parse_error("line " + std::to_string(reader.line_no) +
                              ": unexpected content after " + std::to_string(m) +
                              " edges: '" + line + "'");
    }
    return graph(static_cast<int>(n), std::move(edges));
}

void graph::check_vertex(vertex_t u) const {
    if (u < 0 || u >= n_)
        throw domain_error("vertex label out of range: " + std::to_string(u) +
                           " (n = " + std::to_string(n_) + ")");
}

const std::vector<vertex_t>& graph::neighbors(vertex_t u) const {
    check_vertex(u);
    return adj_[static_cast<size_t>(u)];
}

int graph::degree(vertex_t u) const {
    check_vertex(u);
    return static_cast<int>(adj_[static_cast<size_t>(u)].size());
}

bool graph::has_edge(vertex_t u, vertex_t v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

graph graph::delete_pair(vertex_t u, vertex_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw domain_error("delete_pair needs two distinct vertices, got " +
                           std::to_string(u) + " twice");
    // Order-preserving relabeling of the survivors.
    std::vector<vertex_t> relabel(static_cast<size_t>(n_), -1);
    vertex_t next = 0;
    for (vertex_t w = 0; w < n_; ++w)
        if (w != u && w != v) relabel[static_cast<size_t>(w)] = next++;

    std::vector<edge_t> kept;
    for (const auto& e : edges_) {
        if (e.u == u || e.u == v || e.v == u || e.v == v) continue;
        kept.push_back({relabel[static_cast<size_t>(e.u)],
                        relabel[static_cast<size_t>(e.v)]});
    }
    return graph(n_ - 2, std::move(kept));
}

std::string graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (const auto& e : edges_) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

girth_t compute_girth(const graph& g) {
    const int n = g.vertex_count();
    int best = -1;

    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<vertex_t> parent(static_cast<size_t>(n));
    for (vertex_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::deque<vertex_t> queue{s};
        while (!queue.empty()) {
            const vertex_t u = queue.front();
            queue.pop_front();
            for (vertex_t w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    // Non-tree edge: the two tree paths plus this edge close a
                    // walk that contains a cycle no longer than the walk.
                    const int cand =
                        dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    return best < 0 ? girth_t::infinite() : girth_t::finite(best);
}

const char* family_kind_name(family_kind kind) {
    switch (kind) {
        case family_kind::path: return "path";
        case family_kind::cycle: return "cycle";
        case family_kind::star: return "star";
        case family_kind::complete: return "complete";
        case family_kind::complete_bipartite: return "complete_bipartite";
        case family_kind::caterpillar: return "caterpillar";
        case family_kind::sunlet: return "sunlet";
    }
    return "?";
}

family_kind family_kind_from_string(const std::string& name) {
    for (family_kind k :
         {family_kind::path, family_kind::cycle, family_kind::star,
          family_kind::complete, family_kind::complete_bipartite,
          family_kind::caterpillar, family_kind::sunlet}) {
        if (name == family_kind_name(k)) return k;
    }
    throw domain_error("unknown graph family '" + name + "'");
}

namespace {

long long single_param(const family_spec& spec) {
    if (spec.params.size() != 1)
        throw domain_error(std::string(family_kind_name(spec.kind)) +
                           " takes exactly one parameter");
    return spec.params[0];
}

void require(bool ok, const family_spec& spec, const std::string& what) {
    if (!ok)
        throw domain_error(std::string(family_kind_name(spec.kind)) +
                           ": parameter out of range (" + what + ")");
}

} // namespace

graph generate(const family_spec& spec) {
    std::vector<edge_t> edges;
    switch (spec.kind) {
        case family_kind::path: {
            const long long n = single_param(spec);
            require(n >= 1, spec, "need n >= 1");
            for (long long i = 0; i + 1 < n; ++i)
                edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1)});
            return graph(static_cast<int>(n), std::move(edges));
        }
        case family_kind::cycle: {
            const long long n = single_param(spec);
            require(n >= 3, spec, "need n >= 3");
            for (long long i = 0; i < n; ++i)
                edges.push_back({static_cast<vertex_t>(i),
                                 static_cast<vertex_t>((i + 1) % n)});
            return graph(static_cast<int>(n), std::move(edges));
        }
        case family_kind::star: {
            const long long n = single_param(spec);
            require(n >= 1, spec, "need n >= 1");
            for (long long i = 1; i < n; ++i)
                edges.push_back({0, static_cast<vertex_t>(i)});
            return graph(static_cast<int>(n), std::move(edges));
        }
        case family_kind::complete: {
            const long long n = single_param(spec);
            require(n >= 1, spec, "need n >= 1");
            for (long long i = 0; i < n; ++i)
                for (long long j = i + 1; j < n; ++j)
                    edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(j)});
            return graph(static_cast<int>(n), std::move(edges));
        }
        case family_kind::complete_bipartite: {
            if (spec.params.size() != 2)
                throw domain_error("complete_bipartite takes two parameters p q");
            const long long p = spec.params[0], q = spec.params[1];
            require(p >= 1 && q >= 1, spec, "need p, q >= 1");
            for (long long i = 0; i < p; ++i)
                for (long long j = 0; j < q; ++j)
                    edges.push_back({static_cast<vertex_t>(i),
                                     static_cast<vertex_t>(p + j)});
            return graph(static_cast<int>(p + q), std::move(edges));
        }
        case family_kind::caterpillar: {
            // k-vertex path 0..k-1; pendant k+(i-2) hangs off path position i
            // (0-based) for i in 2..k-3. Empty pendant range at k = 4.
            const long long k = single_param(spec);
            require(k >= 4, spec, "need k >= 4");
            for (long long i = 0; i + 1 < k; ++i)
                edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(i + 1)});
            long long next = k;
            for (long long i = 2; i <= k - 3; ++i)
                edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(next++)});
            return graph(static_cast<int>(2 * k - 4), std::move(edges));
        }
        case family_kind::sunlet: {
            const long long k = single_param(spec);
            require(k >= 3, spec, "need k >= 3");
            for (long long i = 0; i < k; ++i) {
                edges.push_back({static_cast<vertex_t>(i),
                                 static_cast<vertex_t>((i + 1) % k)});
                edges.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(k + i)});
            }
            return graph(static_cast<int>(2 * k), std::move(edges));
        }
    }
    throw domain_error("unknown family kind");
}

namespace {

// Distance from u to v in the adjacency structure under construction;
// -1 when disconnected.
int pair_distance(const std::vector<std::vector<vertex_t>>& adj, vertex_t u,
                  vertex_t v) {
    std::vector<int> dist(adj.size(), -1);
    dist[static_cast<size_t>(u)] = 0;
    std::deque<vertex_t> queue{u};
    while (!queue.empty()) {
        const vertex_t x = queue.front();
        queue.pop_front();
        if (x == v) return dist[static_cast<size_t>(x)];
        for (vertex_t w : adj[static_cast<size_t>(x)]) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(x)] + 1;
                queue.push_back(w);
            }
        }
    }
    return -1;
}

} // namespace

graph random_with_min_girth(int n, long long target_m, girth_t min_girth,
                            std::uint64_t seed) {
    if (n < 1) throw domain_error("need n >= 1");
    if (target_m < 0) throw domain_error("need target_m >= 0");
    if (!min_girth.is_infinite() && min_girth.length() < 3)
        throw domain_error("finite girth bound must be at least 3");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<vertex_t>> adj(static_cast<size_t>(n));
    std::vector<edge_t> edges;

    // mt19937_64 output is fully specified, and the modulo draw keeps the
    // sequence portable across standard libraries.
    auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    const long long max_attempts = 60 * target_m + 600;
    for (long long attempt = 0;
         attempt < max_attempts && static_cast<long long>(edges.size()) < target_m;
         ++attempt) {
        const vertex_t u = draw(n);
        const vertex_t v = draw(n);
        if (u == v) continue;
        const auto& nbrs = adj[static_cast<size_t>(u)];
        if (std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end()) continue;

        const int d = pair_distance(adj, u, v);
        if (min_girth.is_infinite()) {
            if (d >= 0) continue; // already connected: the edge would close a cycle
        } else {
            if (d >= 0 && d + 1 < min_girth.length()) continue;
        }
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return graph(n, std::move(edges));
}

} // namespace graphmatch
