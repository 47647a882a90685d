#include "families.hpp"

namespace graphmatch {

namespace {

long long single_param(const family_spec& spec) {
    if (spec.params.size() != 1)
        throw domain_error(std::string(family_kind_name(spec.kind)) +
                           " takes exactly one parameter");
    return spec.params[0];
}

[[noreturn]] void below_threshold(const char* what, long long k, long long r,
                                  long long threshold) {
    throw domain_error(std::string(what) + "(" + std::to_string(k) + "): the " +
                       std::to_string(r) + "-matching closed form needs parameter >= " +
                       std::to_string(threshold));
}

Int caterpillar_count(long long k, long long r) {
    if (k < 4)
        throw domain_error("caterpillar: parameter out of range (need k >= 4)");
    const Int kk = make_int(k);
    switch (r) {
        case 2:
            if (k < 4) below_threshold("caterpillar", k, r, 4);
            return 2 * kk * (kk - 7) + 25;
        case 3:
            if (k < 5) below_threshold("caterpillar", k, r, 5);
            return exact_div((2 * kk - 9) * (2 * kk * kk - 18 * kk + 43), 3);
        case 4:
            if (k < 6) below_threshold("caterpillar", k, r, 6);
            return exact_div(2 * kk * (kk - 11) * (kk * kk - 11 * kk + 64), 3) + 681;
        case 5:
            if (k < 7) below_threshold("caterpillar", k, r, 7);
            return exact_div((2 * kk - 13) * (2 * kk * kk * kk * kk -
                                              52 * kk * kk * kk + 522 * kk * kk -
                                              2392 * kk + 4215),
                             15);
        default:
            throw no_formula_error("no closed form for " + std::to_string(r) +
                                   "-matchings of a caterpillar");
    }
}

Int sunlet_count(long long k, long long r) {
    if (k < 3)
        throw domain_error("sunlet: parameter out of range (need k >= 3)");
    const Int kk = make_int(k);
    switch (r) {
        case 3:
            if (k < 4) below_threshold("sunlet", k, r, 4);
            return exact_div(2 * kk * (2 * kk * kk - 12 * kk + 19), 3);
        case 4:
            if (k < 5) below_threshold("sunlet", k, r, 5);
            return exact_div(2 * kk * (kk - 4) * (kk * kk - 8 * kk + 18), 3);
        case 5:
            if (k < 6) below_threshold("sunlet", k, r, 6);
            return exact_div(2 * kk * (2 * kk * kk * kk * kk - 40 * kk * kk * kk +
                                       310 * kk * kk - 1100 * kk + 1503),
                             15);
        case 6:
            if (k < 7) below_threshold("sunlet", k, r, 7);
            return exact_div(2 * kk * (kk - 6) *
                                 (2 * kk * kk * kk * kk - 48 * kk * kk * kk +
                                  452 * kk * kk - 1968 * kk + 3335),
                             45);
        default:
            throw no_formula_error("no closed form for " + std::to_string(r) +
                                   "-matchings of a sunlet");
    }
}

} // namespace

Int family_count(const family_spec& spec, long long k) {
    if (k < 0) throw domain_error("matching size must be non-negative");
    switch (spec.kind) {
        case family_kind::path: {
            const long long n = single_param(spec);
            if (n < 1) throw domain_error("path: parameter out of range (need n >= 1)");
            return binomial(n - k, k);
        }
        case family_kind::cycle: {
            const long long n = single_param(spec);
            if (n < 3) throw domain_error("cycle: parameter out of range (need n >= 3)");
            if (k < 1)
                throw domain_error("cycle: the closed form needs k >= 1");
            return to_int(make_rat(make_int(n) * binomial(n - k - 1, k - 1), make_int(k)));
        }
        case family_kind::star: {
            const long long n = single_param(spec);
            if (n < 1) throw domain_error("star: parameter out of range (need n >= 1)");
            if (k == 0) return 1;
            if (k == 1) return make_int(n - 1);
            if (k == 2) return 0;
            throw no_formula_error("no closed form for " + std::to_string(k) +
                                   "-matchings of a star (table covers k = 0..2)");
        }
        case family_kind::caterpillar:
            return caterpillar_count(single_param(spec), k);
        case family_kind::sunlet:
            return sunlet_count(single_param(spec), k);
        case family_kind::complete:
        case family_kind::complete_bipartite:
            throw no_formula_error(std::string("no closed form for ") +
                                   family_kind_name(spec.kind) + " matching counts");
    }
    throw domain_error("unknown family kind");
}

} // namespace graphmatch
