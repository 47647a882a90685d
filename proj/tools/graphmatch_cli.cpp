// Command-line front end. Talks to the library exclusively through the C
// interface; JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage or parse failure (including requests the
// formula tables do not cover), 2 precondition failure (parameter ranges,
// girth guards), 3 verification failure or cross-method disagreement,
// 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <graphmatch.h>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int exit_usage = 1;
constexpr int exit_precondition = 2;
constexpr int exit_verification = 3;
constexpr int exit_internal = 4;

int exit_code_for(gm_status rc) {
    switch (rc) {
        case GM_OK: return 0;
        case GM_ERR_PARSE: return exit_usage;
        case GM_ERR_NO_FORMULA: return exit_usage;
        case GM_ERR_ARG: return exit_usage;
        case GM_ERR_DOMAIN: return exit_precondition;
        case GM_ERR_GIRTH: return exit_precondition;
        case GM_ERR_INTERNAL: return exit_internal;
    }
    return exit_internal;
}

[[noreturn]] void die(gm_status rc) {
    std::cerr << "error: " << gm_last_error() << "\n";
    std::exit(exit_code_for(rc));
}

[[noreturn]] void die_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(exit_usage);
}

// Owns strings handed out by the library.
struct gm_str {
    char* p = nullptr;
    ~gm_str() { gm_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

struct graph_handle {
    gm_graph* g = nullptr;
    ~graph_handle() { gm_graph_free(g); }
};

std::string invariant(const gm_graph* g, const char* name) {
    gm_str s;
    if (gm_status rc = gm_invariant(g, name, &s.p); rc != GM_OK) die(rc);
    return s.str();
}

std::string invariant_general(const gm_graph* g, const char* name, int64_t e) {
    gm_str s;
    if (gm_status rc = gm_invariant_general(g, name, e, &s.p); rc != GM_OK) die(rc);
    return s.str();
}

std::string girth_text(const gm_graph* g) {
    int64_t gir = 0;
    if (gm_status rc = gm_graph_girth(g, &gir); rc != GM_OK) die(rc);
    return gir == GM_GIRTH_INFINITE ? "infinite" : std::to_string(gir);
}

ordered_json invariants_block(const gm_graph* g) {
    ordered_json inv;
    for (const char* name :
         {"m1", "m2", "f", "em1", "em2", "alpha", "beta", "gamma", "lambda_count"})
        inv[name] = invariant(g, name);
    ordered_json m1_general, m2_general, alpha_general;
    for (int64_t e = 1; e <= 5; ++e)
        m1_general[std::to_string(e)] = invariant_general(g, "m1", e);
    for (int64_t e = 1; e <= 2; ++e) {
        m2_general[std::to_string(e)] = invariant_general(g, "m2", e);
        alpha_general[std::to_string(e)] = invariant_general(g, "alpha", e);
    }
    inv["m1_general"] = m1_general;
    inv["m2_general"] = m2_general;
    inv["alpha_general"] = alpha_general;
    return inv;
}

int cmd_report(const std::string& path, int64_t k_max, const std::string& method,
               bool force) {
    std::ifstream in(path);
    if (!in) die_usage("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();

    graph_handle gh;
    if (gm_status rc = gm_graph_parse(buf.str().c_str(), &gh.g); rc != GM_OK) die(rc);
    const gm_graph* g = gh.g;

    const bool want_formula = method == "all" || method == "formula";
    const bool want_oracle = method == "all" || method == "oracle";
    const bool want_recurrence = method == "all" || method == "recurrence";

    ordered_json report;
    report["graph"] = {{"n", std::to_string(gm_graph_vertex_count(g))},
                       {"m", std::to_string(gm_graph_edge_count(g))},
                       {"girth", girth_text(g)}};
    report["invariants"] = invariants_block(g);

    ordered_json matchings = ordered_json::array();
    ordered_json warnings = ordered_json::array();
    ordered_json disagreements = ordered_json::array();

    for (int64_t k = 0; k <= k_max; ++k) {
        ordered_json entry;
        entry["k"] = std::to_string(k);
        ordered_json values;
        bool forced_formula = false;

        if (k == 0) {
            values["definition"] = "1";
        } else if (k == 1) {
            values["definition"] = std::to_string(gm_graph_edge_count(g));
        } else {
            if (want_formula && k <= 5) {
                gm_str s;
                int girth_ok = 1;
                gm_status rc = gm_count_formula(g, k, force ? 1 : 0, &s.p, &girth_ok);
                if (rc == GM_OK) {
                    values["formula"] = s.str();
                    if (girth_ok == 0) {
                        forced_formula = true;
                        warnings.push_back("p(G," + std::to_string(k) +
                                           ") was forced outside its girth "
                                           "hypothesis; value not comparable");
                    }
                } else if (rc == GM_ERR_GIRTH && method == "all") {
                    warnings.push_back("formula for k = " + std::to_string(k) +
                                       " skipped: " + gm_last_error());
                } else {
                    die(rc);
                }
            }
            if (want_formula && k > 5 && method == "formula") {
                warnings.push_back("no closed form for k = " + std::to_string(k) +
                                   "; skipped");
            }
            if (want_oracle) {
                gm_str s;
                if (gm_status rc = gm_count_oracle(g, k, &s.p); rc != GM_OK) die(rc);
                values["oracle"] = s.str();
            }
            if (want_recurrence) {
                gm_str s;
                if (gm_status rc = gm_count_recurrence(g, k, &s.p); rc != GM_OK)
                    die(rc);
                values["recurrence"] = s.str();
            }
        }

        entry["values"] = values;
        if (forced_formula) entry["girth_ok"] = false;

        // A forced value carries no integrality or agreement claim, so it is
        // left out of the cross-check.
        std::vector<std::string> comparable;
        for (const auto& [name, value] : values.items())
            if (!(forced_formula && name == "formula"))
                comparable.push_back(value.get<std::string>());
        for (size_t i = 1; i < comparable.size(); ++i)
            if (comparable[i] != comparable[0]) {
                disagreements.push_back({{"k", std::to_string(k)}, {"values", values}});
                break;
            }

        matchings.push_back(entry);
    }

    report["matchings"] = matchings;
    report["warnings"] = warnings;
    report["disagreements"] = disagreements;

    std::cout << report.dump(2) << "\n";
    return disagreements.empty() ? 0 : exit_verification;
}

int cmd_family(const std::string& kind, const std::vector<int64_t>& args, bool check) {
    if (args.size() < 2)
        die_usage("family needs at least one parameter and a matching size");
    const std::vector<int64_t> params(args.begin(), args.end() - 1);
    const int64_t k = args.back();

    gm_str formula;
    gm_status rc = gm_family_count(kind.c_str(), params.data(), params.size(), k,
                                   &formula.p);
    if (rc != GM_OK) die(rc);

    if (!check) {
        std::cout << formula.str() << "\n";
        return 0;
    }

    graph_handle gh;
    rc = gm_graph_family(kind.c_str(), params.data(), params.size(), &gh.g);
    if (rc != GM_OK) die(rc);
    gm_str oracle;
    rc = gm_count_oracle(gh.g, k, &oracle.p);
    if (rc != GM_OK) die(rc);

    const bool equal = formula.str() == oracle.str();
    ordered_json out;
    out["formula"] = formula.str();
    out["oracle"] = oracle.str();
    out["equal"] = equal;
    std::cout << out.dump(2) << "\n";
    return equal ? 0 : exit_verification;
}

int cmd_verify(const std::string& suite, int64_t trials, uint64_t seed,
               int64_t n_max) {
    int64_t total_failures = 0;
    std::vector<std::string> reports;

    if (suite == "identities" || suite == "all") {
        gm_str out;
        int64_t failures = 0;
        gm_status rc = gm_verify_identities(trials, seed, &out.p, &failures);
        if (rc != GM_OK) die(rc);
        reports.push_back(out.str());
        total_failures += failures;
    }
    if (suite == "formulas" || suite == "all") {
        gm_str out;
        int64_t failures = 0;
        gm_status rc = gm_verify_formulas(trials, seed, n_max, &out.p, &failures);
        if (rc != GM_OK) die(rc);
        reports.push_back(out.str());
        total_failures += failures;
    }

    if (reports.size() == 1) {
        std::cout << reports[0] << "\n";
    } else {
        ordered_json combined = ordered_json::array();
        for (const auto& r : reports) combined.push_back(ordered_json::parse(r));
        std::cout << combined.dump(2) << "\n";
    }
    return total_failures == 0 ? 0 : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-based graph invariants and matching counts"};
    app.require_subcommand(1);

    std::string report_path;
    int64_t k_max = 5;
    std::string method = "all";
    bool force = false;
    auto* report = app.add_subcommand("report", "full JSON report for a graph file");
    report->add_option("file", report_path, "edge-list file")->required();
    report->add_option("--k-max", k_max, "largest matching size to report")
        ->check(CLI::Range(int64_t{0}, int64_t{64}));
    report->add_option("--method", method, "which counting methods to run")
        ->check(CLI::IsMember({"all", "formula", "oracle", "recurrence"}));
    report->add_flag("--force", force,
                     "evaluate closed forms even when their girth hypothesis fails");

    std::string family_kind;
    std::vector<int64_t> family_args;
    bool family_check = false;
    auto* family =
        app.add_subcommand("family", "closed-form count for a named graph family");
    family->add_option("kind", family_kind, "family name")->required();
    family
        ->add_option("args", family_args,
                     "family parameters followed by the matching size k")
        ->required()
        ->expected(-2);
    family->add_flag("--check", family_check, "also run the oracle and compare");

    std::string suite;
    int64_t trials = 100;
    uint64_t seed = 42;
    int64_t n_max = 12;
    auto* verify = app.add_subcommand("verify", "seeded verification suites");
    verify->add_option("suite", suite, "identities, formulas, or all")
        ->required()
        ->check(CLI::IsMember({"identities", "formulas", "all"}));
    verify->add_option("--trials", trials, "trial graphs per girth class");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--n-max", n_max, "largest trial graph size (formulas suite)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (report->parsed()) return cmd_report(report_path, k_max, method, force);
        if (family->parsed()) return cmd_family(family_kind, family_args, family_check);
        return cmd_verify(suite, trials, seed, n_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}
