#include "invariants.hpp"

namespace graphmatch {

namespace {

std::set<int> widen_exponents(std::set<int> exponents, std::set<int> base) {
    exponents.merge(base);
    for (int e : exponents)
        if (e < 0 || e > max_exponent)
            throw domain_error("exponent out of range: " + std::to_string(e) +
                               " (supported: 0.." + std::to_string(max_exponent) + ")");
    return exponents;
}

std::vector<int> degrees_of(const graph& g) {
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()));
    for (vertex_t u = 0; u < g.vertex_count(); ++u) deg[static_cast<size_t>(u)] = g.degree(u);
    return deg;
}

} // namespace

degree_invariants compute_degree_invariants(const graph& g,
                                            const std::set<int>& exponents) {
    const auto exps = widen_exponents(exponents, {1, 2, 3, 4, 5});
    const auto deg = degrees_of(g);

    degree_invariants out;
    for (int e : exps) {
        Int vertex_sum = 0, edge_sum = 0;
        for (int d : deg) vertex_sum += int_pow(Int(d), static_cast<unsigned long>(e));
        for (const auto& [u, v] : g.edges()) {
            const Int prod =
                Int(deg[static_cast<size_t>(u)]) * Int(deg[static_cast<size_t>(v)]);
            edge_sum += int_pow(prod, static_cast<unsigned long>(e));
        }
        out.m1_general[e] = vertex_sum;
        out.m2_general[e] = edge_sum;
    }
    out.m1 = out.m1_general.at(2);
    out.forgotten = out.m1_general.at(3);
    out.m2 = out.m2_general.at(1);

    out.em1 = 0;
    for (const auto& [u, v] : g.edges()) {
        const Int de = deg[static_cast<size_t>(u)] + deg[static_cast<size_t>(v)] - 2;
        out.em1 += de * de;
    }

    // Incident edge pairs enumerated once each, via their shared vertex.
    out.em2 = 0;
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            const Int di = deg[static_cast<size_t>(v)] + deg[static_cast<size_t>(nbrs[i])] - 2;
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                const Int dj =
                    deg[static_cast<size_t>(v)] + deg[static_cast<size_t>(nbrs[j])] - 2;
                out.em2 += di * dj;
            }
        }
    }
    return out;
}

incidence_invariants compute_incidence_invariants(const graph& g,
                                                  const std::set<int>& exponents) {
    const auto exps = widen_exponents(exponents, {1, 2});
    const auto deg = degrees_of(g);

    incidence_invariants out;
    for (int e : exps) {
        Int sum = 0;
        for (const auto& [u, v] : g.edges()) {
            const Int du = deg[static_cast<size_t>(u)], dv = deg[static_cast<size_t>(v)];
            sum += du * dv *
                   (int_pow(du, static_cast<unsigned long>(e)) +
                    int_pow(dv, static_cast<unsigned long>(e)));
        }
        out.alpha_general[e] = sum;
    }
    out.alpha = out.alpha_general.at(1);

    out.beta = 0;
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        const int dv = deg[static_cast<size_t>(v)];
        for (size_t i = 0; i < nbrs.size(); ++i) {
            const int di = dv + deg[static_cast<size_t>(nbrs[i])] - 2;
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                const int dj = dv + deg[static_cast<size_t>(nbrs[j])] - 2;
                out.beta += Int(dv) * (di + dj);
            }
        }
    }

    // gamma: for each edge xy, visit N(x) u N(y) minus the endpoints once.
    out.gamma = 0;
    out.incidence_count = 0;
    std::vector<char> mark(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [x, y] : g.edges()) {
        const int dxy = deg[static_cast<size_t>(x)] + deg[static_cast<size_t>(y)];
        std::vector<vertex_t> touched;
        for (vertex_t side : {x, y}) {
            for (vertex_t w : g.neighbors(side)) {
                if (w == x || w == y || mark[static_cast<size_t>(w)]) continue;
                mark[static_cast<size_t>(w)] = 1;
                touched.push_back(w);
                out.gamma += Int(deg[static_cast<size_t>(w)]) * dxy;
                ++out.incidence_count;
            }
        }
        for (vertex_t w : touched) mark[static_cast<size_t>(w)] = 0;
    }
    return out;
}

std::vector<long long> neighbor_degree_sums(const graph& g) {
    std::vector<long long> sums(static_cast<size_t>(g.vertex_count()), 0);
    for (vertex_t u = 0; u < g.vertex_count(); ++u)
        for (vertex_t w : g.neighbors(u)) sums[static_cast<size_t>(u)] += g.degree(w);
    return sums;
}

} // namespace graphmatch
