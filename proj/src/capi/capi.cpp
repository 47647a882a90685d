// C wrapper over the graphmatch core. Exceptions stop here: every entry
// point maps them to a gm_status and stashes the message in a thread-local
// buffer for gm_last_error(). Returned strings are malloc'd so callers from
// any runtime can free them with gm_string_free().

#include "graphmatch.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/invariants.hpp"
#include "core/matching.hpp"
#include "core/verify.hpp"

struct gm_graph {
    graphmatch::graph g;
};

namespace {

thread_local std::string tl_last_error;

gm_status fail(gm_status code, const std::string& message) {
    tl_last_error = message;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gm_status set_out_string(const std::string& s, char** out) {
    char* copy = dup_string(s);
    if (copy == nullptr) return fail(GM_ERR_INTERNAL, "out of memory");
    *out = copy;
    return GM_OK;
}

template <typename Fn>
gm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const graphmatch::parse_error& e) {
        return fail(GM_ERR_PARSE, e.what());
    } catch (const graphmatch::girth_error& e) {
        return fail(GM_ERR_GIRTH, e.what());
    } catch (const graphmatch::no_formula_error& e) {
        return fail(GM_ERR_NO_FORMULA, e.what());
    } catch (const graphmatch::domain_error& e) {
        return fail(GM_ERR_DOMAIN, e.what());
    } catch (const graphmatch::internal_error& e) {
        return fail(GM_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(GM_ERR_INTERNAL, e.what());
    }
}

bool fits_vertex(const gm_graph* g, int64_t v) {
    return v >= 0 && v < static_cast<int64_t>(g->g.vertex_count());
}

// Vertex arguments come in as int64 but the core indexes with int; reject
// out-of-range labels with the same message the core would produce.
graphmatch::vertex_t as_vertex(const gm_graph* g, int64_t v) {
    if (!fits_vertex(g, v))
        throw graphmatch::domain_error("vertex label out of range: " +
                                       std::to_string(v) + " (n = " +
                                       std::to_string(g->g.vertex_count()) + ")");
    return static_cast<graphmatch::vertex_t>(v);
}

graphmatch::family_spec build_spec(const char* kind, const int64_t* params,
                                   size_t n_params) {
    graphmatch::family_spec spec;
    spec.kind = graphmatch::family_kind_from_string(kind);
    spec.params.assign(params, params + n_params);
    return spec;
}

graphmatch::girth_t girth_from_c(int64_t min_girth) {
    if (min_girth == GM_GIRTH_INFINITE) return graphmatch::girth_t::infinite();
    if (min_girth < 3 || min_girth > std::numeric_limits<int>::max())
        throw graphmatch::domain_error("girth bound must be >= 3 or infinite, got " +
                                       std::to_string(min_girth));
    return graphmatch::girth_t::finite(static_cast<int>(min_girth));
}

} // namespace

extern "C" {

const char* gm_version(void) { return "1.0.0"; }

const char* gm_last_error(void) { return tl_last_error.c_str(); }

void gm_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

gm_status gm_graph_parse(const char* text, gm_graph** out) {
    if (text == nullptr || out == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        auto g = graphmatch::graph::parse_edge_list(text);
        *out = new gm_graph{std::move(g)};
        return GM_OK;
    });
}

gm_status gm_graph_family(const char* kind, const int64_t* params,
                          size_t n_params, gm_graph** out) {
    if (kind == nullptr || out == nullptr || (params == nullptr && n_params > 0))
        return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        auto g = graphmatch::generate(build_spec(kind, params, n_params));
        *out = new gm_graph{std::move(g)};
        return GM_OK;
    });
}

gm_status gm_graph_random_min_girth(int64_t n, int64_t target_m,
                                    int64_t min_girth, uint64_t seed,
                                    gm_graph** out) {
    if (out == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        if (n < 1 || n > 1000000)
            throw graphmatch::domain_error("vertex count must be in 1..1000000, got " +
                                           std::to_string(n));
        auto g = graphmatch::random_with_min_girth(static_cast<int>(n), target_m,
                                                   girth_from_c(min_girth), seed);
        *out = new gm_graph{std::move(g)};
        return GM_OK;
    });
}

gm_status gm_graph_delete_pair(const gm_graph* g, int64_t u, int64_t v,
                               gm_graph** out) {
    if (g == nullptr || out == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        auto h = g->g.delete_pair(as_vertex(g, u), as_vertex(g, v));
        *out = new gm_graph{std::move(h)};
        return GM_OK;
    });
}

void gm_graph_free(gm_graph* g) { delete g; }

int64_t gm_graph_vertex_count(const gm_graph* g) {
    return g == nullptr ? -1 : g->g.vertex_count();
}

int64_t gm_graph_edge_count(const gm_graph* g) {
    return g == nullptr ? -1 : g->g.edge_count();
}

gm_status gm_graph_edge(const gm_graph* g, int64_t index, int64_t* u, int64_t* v) {
    if (g == nullptr || u == nullptr || v == nullptr)
        return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        if (index < 0 || index >= g->g.edge_count())
            throw graphmatch::domain_error("edge index out of range: " +
                                           std::to_string(index) + " (m = " +
                                           std::to_string(g->g.edge_count()) + ")");
        const auto e = g->g.edges()[static_cast<size_t>(index)];
        *u = e.u;
        *v = e.v;
        return GM_OK;
    });
}

int64_t gm_graph_degree(const gm_graph* g, int64_t v) {
    if (g == nullptr || !fits_vertex(g, v)) return -1;
    return g->g.degree(static_cast<graphmatch::vertex_t>(v));
}

gm_status gm_graph_girth(const gm_graph* g, int64_t* out_girth) {
    if (g == nullptr || out_girth == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto gir = graphmatch::compute_girth(g->g);
        *out_girth = gir.is_infinite() ? GM_GIRTH_INFINITE : gir.length();
        return GM_OK;
    });
}

gm_status gm_graph_to_edge_list(const gm_graph* g, char** out_text) {
    if (g == nullptr || out_text == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] { return set_out_string(g->g.to_edge_list(), out_text); });
}

/* ------------------------------------------------------------------ */

gm_status gm_invariant(const gm_graph* g, const char* name, char** out_value) {
    if (g == nullptr || name == nullptr || out_value == nullptr)
        return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const std::string what = name;
        std::string value;
        if (what == "m1" || what == "m2" || what == "f" || what == "em1" ||
            what == "em2") {
            const auto inv = graphmatch::compute_degree_invariants(g->g);
            if (what == "m1") value = inv.m1.get_str();
            else if (what == "m2") value = inv.m2.get_str();
            else if (what == "f") value = inv.forgotten.get_str();
            else if (what == "em1") value = inv.em1.get_str();
            else value = inv.em2.get_str();
        } else if (what == "alpha" || what == "beta" || what == "gamma" ||
                   what == "lambda_count") {
            const auto inc = graphmatch::compute_incidence_invariants(g->g);
            if (what == "alpha") value = inc.alpha.get_str();
            else if (what == "beta") value = inc.beta.get_str();
            else if (what == "gamma") value = inc.gamma.get_str();
            else value = std::to_string(inc.incidence_count);
        } else {
            return fail(GM_ERR_ARG, "unknown invariant '" + what + "'");
        }
        return set_out_string(value, out_value);
    });
}

gm_status gm_invariant_general(const gm_graph* g, const char* name,
                               int64_t exponent, char** out_value) {
    if (g == nullptr || name == nullptr || out_value == nullptr)
        return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        if (exponent < 0 || exponent > graphmatch::max_exponent)
            throw graphmatch::domain_error(
                "exponent must be in 0.." + std::to_string(graphmatch::max_exponent) +
                ", got " + std::to_string(exponent));
        const int e = static_cast<int>(exponent);
        const std::string what = name;
        graphmatch::Int value;
        if (what == "m1" || what == "m2") {
            const auto inv = graphmatch::compute_degree_invariants(g->g, {e});
            value = what == "m1" ? inv.m1_general.at(e) : inv.m2_general.at(e);
        } else if (what == "alpha") {
            const auto inc = graphmatch::compute_incidence_invariants(g->g, {e});
            value = inc.alpha_general.at(e);
        } else {
            return fail(GM_ERR_ARG, "unknown exponent-parameterized invariant '" +
                                        what + "'");
        }
        return set_out_string(value.get_str(), out_value);
    });
}

/* ------------------------------------------------------------------ */

gm_status gm_count_oracle(const gm_graph* g, int64_t k, char** out_value) {
    if (g == nullptr || out_value == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        return set_out_string(graphmatch::oracle_count(g->g, k).str(), out_value);
    });
}

gm_status gm_count_recurrence(const gm_graph* g, int64_t k, char** out_value) {
    if (g == nullptr || out_value == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        return set_out_string(graphmatch::recurrence_count(g->g, k).str(), out_value);
    });
}

gm_status gm_count_formula(const gm_graph* g, int64_t k, int force,
                           char** out_value, int* out_girth_ok) {
    if (g == nullptr || out_value == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto mc = graphmatch::formula_count(g->g, k, force != 0);
        const gm_status rc = set_out_string(mc.str(), out_value);
        if (rc == GM_OK && out_girth_ok != nullptr)
            *out_girth_ok = mc.girth_ok ? 1 : 0;
        return rc;
    });
}

gm_status gm_count_containing_edge(const gm_graph* g, int64_t u, int64_t v,
                                   int64_t k, char** out_value) {
    if (g == nullptr || out_value == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto mc = graphmatch::containing_edge_count(g->g, as_vertex(g, u),
                                                          as_vertex(g, v), k);
        return set_out_string(mc.str(), out_value);
    });
}

gm_status gm_matching_polynomial(const gm_graph* g, char** out_json) {
    if (g == nullptr || out_json == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto poly = graphmatch::compute_matching_polynomial(g->g);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : poly.coefficients) arr.push_back(c.get_str());
        return set_out_string(arr.dump(), out_json);
    });
}

gm_status gm_pair_deletion_sums(const gm_graph* g, char** out_json) {
    if (g == nullptr || out_json == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto sums = graphmatch::compute_pair_deletion_sums(g->g);
        nlohmann::ordered_json obj;
        obj["mu1"] = sums.mu1.get_str();
        obj["mu2"] = sums.mu2.get_str();
        obj["mu3"] = sums.mu3.get_str();
        obj["mu4"] = sums.mu4.get_str();
        obj["xi1"] = sums.xi1.get_str();
        obj["xi2"] = sums.xi2.get_str();
        obj["xi3"] = sums.xi3.get_str();
        obj["rho1"] = sums.rho1.get_str();
        obj["eta1"] = sums.eta1.get_str();
        obj["sum_m1_sq"] = sums.sum_m1_sq.get_str();
        obj["sum_m_forgotten"] = sums.sum_m_forgotten.get_str();
        obj["sum_msq_m1"] = sums.sum_msq_m1.get_str();
        obj["sum_em2"] = sums.sum_em2.get_str();
        obj["sum_m_m2"] = sums.sum_m_m2.get_str();
        return set_out_string(obj.dump(), out_json);
    });
}

/* ------------------------------------------------------------------ */

gm_status gm_family_count(const char* kind, const int64_t* params,
                          size_t n_params, int64_t k, char** out_value) {
    if (kind == nullptr || out_value == nullptr ||
        (params == nullptr && n_params > 0))
        return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto value =
            graphmatch::family_count(build_spec(kind, params, n_params), k);
        return set_out_string(value.get_str(), out_value);
    });
}

/* ------------------------------------------------------------------ */

gm_status gm_verify_identities(int64_t trials, uint64_t seed, char** out_json,
                               int64_t* out_failures) {
    if (out_json == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        const auto report = graphmatch::run_identity_suite(trials, seed);
        const gm_status rc = set_out_string(report.to_json(), out_json);
        if (rc == GM_OK && out_failures != nullptr)
            *out_failures = static_cast<int64_t>(report.failures.size());
        return rc;
    });
}

gm_status gm_verify_formulas(int64_t trials, uint64_t seed, int64_t n_max,
                             char** out_json, int64_t* out_failures) {
    if (out_json == nullptr) return fail(GM_ERR_ARG, "null argument");
    return guarded([&] {
        if (n_max < 4 || n_max > 20)
            throw graphmatch::domain_error("n_max must be in 4..20, got " +
                                           std::to_string(n_max));
        const auto report =
            graphmatch::run_formula_vs_oracle(trials, seed, static_cast<int>(n_max));
        const gm_status rc = set_out_string(report.to_json(), out_json);
        if (rc == GM_OK && out_failures != nullptr)
            *out_failures = static_cast<int64_t>(report.failures.size());
        return rc;
    });
}

} // extern "C"
