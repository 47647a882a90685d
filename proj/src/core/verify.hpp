#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace graphmatch {

struct trial_failure {
    std::string graph_text; // edge list that reproduces the failure
    std::string check;
    std::string expected;
    std::string actual;
};

// Outcome of a seeded verification run. Failures are data, not errors: a run
// always completes, and the same seed reproduces the same report byte for
// byte.
struct trial_report {
    std::uint64_t seed = 0;
    long long trials = 0; // total graphs examined
    std::string girth_class;
    std::vector<trial_failure> failures; // canonically sorted

    bool passed() const { return failures.empty(); }
    // {"seed":..., "trials":..., "girth_class":..., "failures":[...]}
    std::string to_json() const;
};

// Checks, on each seeded random graph, every identity among the degree and
// incidence invariants and every pair-deletion closed form whose girth
// hypothesis the graph satisfies. trials_per_class graphs are generated for
// each of the girth classes any / >= 4 / >= 5.
trial_report run_identity_suite(long long trials_per_class, std::uint64_t seed);

// Checks the closed-form counts and the recurrence against the enumeration
// oracle on the same three girth classes, restricting each closed form to
// its validity region.
trial_report run_formula_vs_oracle(long long trials_per_class, std::uint64_t seed,
                                   int n_max);

} // namespace graphmatch
