#pragma once

#include "arith.hpp"
#include "graph.hpp"

namespace graphmatch {

// Printed closed-form k-matching counts for the named families:
//   path n:        C(n-k, k) for n >= 1 and any k >= 0
//   cycle n:       (n/k) C(n-k-1, k-1) for n >= 3, k >= 1
//   star n:        1, n-1, 0 for k = 0, 1, 2
//   caterpillar k: polynomials for 2..5-matchings, valid from k = 4, 5, 6, 7
//   sunlet k:      polynomials for 3..6-matchings, valid from k = 4, 5, 6, 7
// Requests outside this table raise no_formula_error; parameters below a
// formula's validity threshold raise domain_error.
Int family_count(const family_spec& spec, long long k);

} // namespace graphmatch
