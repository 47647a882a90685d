#include "matching.hpp"

#include <map>
#include <utility>

#include "invariants.hpp"

namespace graphmatch {

const char* count_method_name(count_method m) {
    switch (m) {
        case count_method::oracle: return "oracle";
        case count_method::recurrence: return "recurrence";
        case count_method::formula: return "formula";
    }
    return "?";
}

namespace {

Int oracle_rec(std::span<const edge_t> edges, size_t idx, long long k,
               std::vector<char>& blocked) {
    if (k == 0) return 1;
    if (static_cast<long long>(edges.size() - idx) < k) return 0;
    const auto [u, v] = edges[idx];
    if (blocked[static_cast<size_t>(u)] || blocked[static_cast<size_t>(v)])
        return oracle_rec(edges, idx + 1, k, blocked);
    Int skip = oracle_rec(edges, idx + 1, k, blocked);
    blocked[static_cast<size_t>(u)] = blocked[static_cast<size_t>(v)] = 1;
    Int take = oracle_rec(edges, idx + 1, k - 1, blocked);
    blocked[static_cast<size_t>(u)] = blocked[static_cast<size_t>(v)] = 0;
    return skip + take;
}

} // namespace

match_count oracle_count(const graph& g, long long k) {
    if (k < 0) throw domain_error("matching size must be non-negative");
    std::vector<char> blocked(static_cast<size_t>(g.vertex_count()), 0);
    Int count = oracle_rec(g.edges(), 0, k, blocked);
    return {k, Rat(count), count_method::oracle, true};
}

namespace {

// Every subgraph reached by the recurrence is G minus a set of vertices, so
// states are keyed by the surviving-vertex mask; shared states are evaluated
// once. The division by k stays checked at every state.
struct recurrence_eval {
    const graph& g;
    std::map<std::pair<std::vector<std::uint64_t>, long long>, Int> memo;

    explicit recurrence_eval(const graph& g_) : g(g_) {}

    static bool alive(const std::vector<std::uint64_t>& mask, vertex_t u) {
        return (mask[static_cast<size_t>(u) >> 6] >> (static_cast<size_t>(u) & 63)) & 1;
    }
    static void clear(std::vector<std::uint64_t>& mask, vertex_t u) {
        mask[static_cast<size_t>(u) >> 6] &= ~(std::uint64_t{1} << (static_cast<size_t>(u) & 63));
    }

    Int eval(const std::vector<std::uint64_t>& mask, long long k) {
        if (k == 0) return 1;
        if (k == 1) {
            Int m_alive = 0;
            for (const auto& [u, v] : g.edges())
                if (alive(mask, u) && alive(mask, v)) ++m_alive;
            return m_alive;
        }
        const auto key = std::make_pair(mask, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        Int sum = 0;
        for (const auto& [u, v] : g.edges()) {
            if (!alive(mask, u) || !alive(mask, v)) continue;
            auto sub = mask;
            clear(sub, u);
            clear(sub, v);
            sum += eval(sub, k - 1);
        }
        Int result = exact_div(sum, make_int(k));
        memo.emplace(key, result);
        return result;
    }
};

} // namespace

match_count recurrence_count(const graph& g, long long k) {
    if (k < 0) throw domain_error("matching size must be non-negative");
    std::vector<std::uint64_t> mask(
        static_cast<size_t>(g.vertex_count() + 63) / 64, ~std::uint64_t{0});
    Int count = recurrence_eval(g).eval(mask, k);
    return {k, Rat(count), count_method::recurrence, true};
}

match_count containing_edge_count(const graph& g, vertex_t u, vertex_t v,
                                  long long k) {
    if (!g.has_edge(u, v))
        throw domain_error("no edge " + std::to_string(u) + " " + std::to_string(v) +
                           " in the graph");
    if (k < 1) throw domain_error("a matching containing an edge has size >= 1");
    match_count rest = oracle_count(g.delete_pair(u, v), k - 1);
    return {k, rest.exact, count_method::oracle, true};
}

matching_polynomial compute_matching_polynomial(const graph& g) {
    matching_polynomial poly;
    const long long top = g.vertex_count() / 2;
    poly.coefficients.reserve(static_cast<size_t>(top) + 1);
    for (long long k = 0; k <= top; ++k)
        poly.coefficients.push_back(oracle_count(g, k).value());
    return poly;
}

pair_deletion_sums compute_pair_deletion_sums(const graph& g) {
    pair_deletion_sums s{};
    for (const auto& [u, v] : g.edges()) {
        const graph h = g.delete_pair(u, v);
        const Int m = make_int(h.edge_count());
        const auto inv = compute_degree_invariants(h);
        s.mu1 += m;
        s.mu2 += m * m;
        s.mu3 += m * m * m;
        s.mu4 += m * m * m * m;
        s.xi1 += inv.m1;
        s.xi2 += inv.forgotten;
        s.xi3 += inv.m1_general.at(4);
        s.rho1 += m * inv.m1;
        s.eta1 += inv.m2;
        s.sum_m1_sq += inv.m1 * inv.m1;
        s.sum_m_forgotten += m * inv.forgotten;
        s.sum_msq_m1 += m * m * inv.m1;
        s.sum_em2 += inv.em2;
        s.sum_m_m2 += m * inv.m2;
    }
    return s;
}

pair_deletion_closed_forms compute_pair_deletion_closed_forms(const graph& g) {
    const Int m = make_int(g.edge_count());
    const auto d = compute_degree_invariants(g);
    const auto i = compute_incidence_invariants(g);
    const Int& m1 = d.m1;
    const Int& m2 = d.m2;
    const Int& f = d.forgotten;
    const Int& m1_4 = d.m1_general.at(4);
    const Int& m1_5 = d.m1_general.at(5);
    const Int& m2_2 = d.m2_general.at(2);
    const Int& alpha = i.alpha;
    const Int& alpha2 = i.alpha_general.at(2);

    pair_deletion_closed_forms c{};
    c.mu1 = m * m + m - m1;
    c.mu2 = m * m * m + f - 2 * m * m1 + 2 * m2 + 2 * m * m - 2 * m1 + m;
    c.mu3 = m * m * m * m - 3 * m * m * m1 + 3 * m * f + 6 * m * m2 - m1_4 -
            3 * alpha + 3 * m * m * m - 6 * m * m1 + 3 * f + 6 * m2 + 3 * m * m -
            3 * m1 + m;
    c.mu4 = m1_5 + 4 * alpha2 - 4 * m * m1_4 + 6 * m2_2 - 12 * m * alpha +
            6 * m * m * f + 12 * m * m * m2 - 4 * m * m * m * m1 - 4 * m1_4 -
            12 * alpha + 12 * m * f + 24 * m * m2 - 12 * m * m * m1 + 6 * f +
            12 * m2 - 12 * m * m1 - 4 * m1 + m * m * m * m * m + 4 * m * m * m * m +
            6 * m * m * m + 4 * m * m + m;
    c.xi1 = (m + 3) * m1 - f - 4 * m2 - 2 * m;
    c.xi2 = (m + 3) * f - m1_4 - 3 * alpha + 6 * m2 - 4 * m1 + 2 * m;
    c.xi3 = (m + 4) * m1_4 - m1_5 + 5 * m1 - 2 * m - 4 * alpha2 + 6 * alpha -
            6 * f - 8 * m2;
    c.rho1 = (m * m + 4 * m + 5) * m1 - (m + 2) * f - (4 * m + 6) * m2 + m1_4 -
             m1 * m1 + alpha - 2 * m * m - 2 * m + 2 * i.gamma;
    c.eta1 = m * m2 - 2 * d.em2 + i.beta - 2 * f - 7 * m2 + 9 * m1 - 8 * m;
    return c;
}

namespace {

int required_girth(long long k) { return k == 3 ? 4 : 5; } // k = 4, 5 need >= 5

std::string girth_requirement_text(long long k) {
    return k == 3 ? "girth > 3" : "girth >= 5";
}

} // namespace

match_count formula_count(const graph& g, long long k, bool force) {
    if (k < 2 || k > 5)
        throw no_formula_error("closed-form matching counts cover k = 2..5, got k = " +
                               std::to_string(k));

    bool girth_ok = true;
    if (k >= 3) {
        const girth_t girth = compute_girth(g);
        if (!girth.at_least(required_girth(k))) {
            if (!force)
                throw girth_error("p(G," + std::to_string(k) + ") requires " +
                                  girth_requirement_text(k) + "; graph has girth " +
                                  girth.str());
            girth_ok = false;
        }
    }

    const Rat m = make_int(g.edge_count());
    const auto d = compute_degree_invariants(g);
    const auto inc = compute_incidence_invariants(g);
    const Rat m1 = d.m1, m2 = d.m2, f = d.forgotten;

    Rat p;
    switch (k) {
        case 2:
            p = m * m / 2 + m / 2 - m1 / 2;
            break;
        case 3:
            p = m * m * m / 6 + m * m / 2 + m * 2 / 3 - m * m1 / 2 - m1 + f / 3 + m2;
            break;
        case 4: {
            const Rat m1_4 = d.m1_general.at(4), em2 = d.em2;
            p = m * m * m * m / 24 + m * m * m / 4 + m * m * 19 / 24 - m * 11 / 4 +
                m1 * m1 / 8 + m * f / 3 - m * m * m1 / 4 + m * m2 + m1_4 / 4 -
                2 * m2 - m * m1 * 5 / 4 + m1 * 7 / 2 - em2 - f * 3 / 2;
            break;
        }
        case 5: {
            const Rat m1_4 = d.m1_general.at(4), m1_5 = d.m1_general.at(5);
            const Rat m2_2 = d.m2_general.at(2), em2 = d.em2;
            const Rat alpha = inc.alpha, alpha2 = inc.alpha_general.at(2);
            const Rat beta = inc.beta;
            const auto sums = compute_pair_deletion_sums(g);
            p = m * (m * m * m * m + 10 * m * m * m + 43 * m * m + 54 * m - 328) / 24 +
                m1 * m1 * 5 / 4 - alpha * (m - 7) / 2 - alpha2 * 5 / 6 -
                m1 * (2 * m * m * m + 30 * m * m + 61 * m - 225) / 12 + beta / 2 +
                m2 * (6 * m * m + 66 * m - 239) / 12 +
                f * (6 * m * m + 24 * m - 149) / 24 + m1_4 * (m + 10) / 12 +
                m2_2 / 4 - em2 - m1_5 * 5 / 24 + Rat(sums.sum_m1_sq) / 8 +
                Rat(sums.sum_m_forgotten) / 3 - Rat(sums.sum_msq_m1) / 4 -
                Rat(sums.sum_em2) + Rat(sums.sum_m_m2);
            p /= 5;
            break;
        }
    }

    if (girth_ok && (!is_integral(p) || p < 0))
        throw internal_error("closed form for k = " + std::to_string(k) +
                             " produced " + rat_str(p) +
                             " with its girth hypothesis satisfied");
    return {k, p, count_method::formula, girth_ok};
}

} // namespace graphmatch
