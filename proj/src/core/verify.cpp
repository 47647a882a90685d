#include "verify.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "invariants.hpp"
#include "matching.hpp"

namespace graphmatch {

std::string trial_report::to_json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["trials"] = trials;
    j["girth_class"] = girth_class;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        j["failures"].push_back({{"graph", f.graph_text},
                                 {"check", f.check},
                                 {"expected", f.expected},
                                 {"actual", f.actual}});
    }
    return j.dump(2);
}

namespace {

struct pool_spec {
    const char* label;
    int min_girth; // 3 means unconstrained
};

constexpr pool_spec pools[] = {
    {"any", 3},
    {"girth>=4", 4},
    {"girth>=5", 5},
};

std::string pools_label() { return "any;girth>=4;girth>=5"; }

// Trial graphs: n uniform in [4, n_max]; sparse edge targets for the
// girth-constrained classes, denser for the unconstrained one.
graph next_trial_graph(std::mt19937_64& rng, const pool_spec& pool, int n_max) {
    const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 3));
    const long long lo = n - 1;
    const long long hi = pool.min_girth > 3
                             ? std::max<long long>(lo, 14 * n / 10)
                             : std::max<long long>(lo, static_cast<long long>(n) * (n - 1) / 3);
    const long long target_m = lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    const std::uint64_t graph_seed = rng();
    return random_with_min_girth(n, target_m, girth_t::finite(pool.min_girth),
                                 graph_seed);
}

struct check_recorder {
    std::vector<trial_failure>& failures;
    const std::string& graph_text;

    void expect_eq(const std::string& check, const Int& expected, const Int& actual) {
        if (expected != actual)
            failures.push_back({graph_text, check, expected.get_str(), actual.get_str()});
    }
};

void sort_failures(std::vector<trial_failure>& failures) {
    std::sort(failures.begin(), failures.end(), [](const trial_failure& a,
                                                   const trial_failure& b) {
        return std::tie(a.check, a.graph_text, a.expected, a.actual) <
               std::tie(b.check, b.graph_text, b.expected, b.actual);
    });
}

void check_identities_on(const graph& g, std::vector<trial_failure>& failures) {
    const std::string text = g.to_edge_list();
    check_recorder rec{failures, text};

    const Int m = make_int(g.edge_count());
    const auto d = compute_degree_invariants(g);
    const auto inc = compute_incidence_invariants(g);
    const girth_t girth = compute_girth(g);

    // Unconditional identities.
    rec.expect_eq("em1_from_degrees",
                  d.forgotten + 2 * d.m2 - 4 * d.m1 + 4 * m, d.em1);
    rec.expect_eq("beta_minus_alpha",
                  d.m1_general.at(4) - 3 * d.forgotten + 2 * d.m1 - 2 * d.m2,
                  inc.beta - inc.alpha);
    const auto sums = neighbor_degree_sums(g);
    Int s_total = 0, ds_total = 0;
    for (vertex_t u = 0; u < g.vertex_count(); ++u) {
        s_total += make_int(sums[static_cast<size_t>(u)]);
        ds_total += Int(g.degree(u)) * make_int(sums[static_cast<size_t>(u)]);
    }
    rec.expect_eq("neighbor_degree_sum_m1", d.m1, s_total);
    rec.expect_eq("neighbor_degree_sum_2m2", 2 * d.m2, ds_total);

    const auto direct = compute_pair_deletion_sums(g);
    const auto closed = compute_pair_deletion_closed_forms(g);
    rec.expect_eq("mu1", direct.mu1, closed.mu1);
    rec.expect_eq("mu2", direct.mu2, closed.mu2);
    rec.expect_eq("mu3", direct.mu3, closed.mu3);
    rec.expect_eq("mu4", direct.mu4, closed.mu4);

    // Girth-gated identities.
    if (girth.at_least(4)) {
        rec.expect_eq("gamma_from_edge_degrees",
                      2 * d.em2 - inc.beta + 4 * d.em1 - 2 * d.forgotten +
                          6 * d.m1 - 8 * m,
                      inc.gamma);
        rec.expect_eq("xi1", direct.xi1, closed.xi1);
        rec.expect_eq("xi2", direct.xi2, closed.xi2);
        rec.expect_eq("xi3", direct.xi3, closed.xi3);
        rec.expect_eq("rho1", direct.rho1, closed.rho1);
    }
    if (girth.at_least(5)) rec.expect_eq("eta1", direct.eta1, closed.eta1);
}

void check_formulas_on(const graph& g, std::vector<trial_failure>& failures) {
    const std::string text = g.to_edge_list();
    check_recorder rec{failures, text};
    const girth_t girth = compute_girth(g);

    for (long long k = 1; k <= 5; ++k) {
        const Int truth = oracle_count(g, k).value();
        rec.expect_eq("recurrence_vs_oracle_k" + std::to_string(k), truth,
                      recurrence_count(g, k).value());
        const bool formula_applies =
            k == 2 || (k == 3 && girth.at_least(4)) || (k >= 4 && girth.at_least(5));
        if (k >= 2 && formula_applies)
            rec.expect_eq("formula_vs_oracle_k" + std::to_string(k), truth,
                          formula_count(g, k).value());
    }
}

} // namespace

trial_report run_identity_suite(long long trials_per_class, std::uint64_t seed) {
    if (trials_per_class < 1) throw domain_error("need at least one trial");
    constexpr int n_max = 12;

    trial_report report;
    report.seed = seed;
    report.girth_class = pools_label();
    std::mt19937_64 rng(seed);
    for (const auto& pool : pools) {
        for (long long t = 0; t < trials_per_class; ++t) {
            const graph g = next_trial_graph(rng, pool, n_max);
            check_identities_on(g, report.failures);
            ++report.trials;
        }
    }
    sort_failures(report.failures);
    return report;
}

trial_report run_formula_vs_oracle(long long trials_per_class, std::uint64_t seed,
                                   int n_max) {
    if (trials_per_class < 1) throw domain_error("need at least one trial");
    if (n_max < 4 || n_max > 20)
        throw domain_error("n_max must be in 4..20, got " + std::to_string(n_max));

    trial_report report;
    report.seed = seed;
    report.girth_class = pools_label();
    std::mt19937_64 rng(seed);
    for (const auto& pool : pools) {
        for (long long t = 0; t < trials_per_class; ++t) {
            const graph g = next_trial_graph(rng, pool, n_max);
            check_formulas_on(g, report.failures);
            ++report.trials;
        }
    }
    sort_failures(report.failures);
    return report;
}

} // namespace graphmatch
