#include <doctest.h>

#include "core/families.hpp"
#include "core/matching.hpp"

using namespace graphmatch;

namespace {

Int oracle_on(const family_spec& spec, long long k) {
    return oracle_count(generate(spec), k).value();
}

} // namespace

TEST_CASE("path counts are binomials") {
    CHECK(family_count({family_kind::path, {8}}, 4) == 1);
    CHECK(family_count({family_kind::path, {10}}, 3) == 35);
    CHECK(family_count({family_kind::path, {1}}, 0) == 1);
    CHECK(family_count({family_kind::path, {1}}, 1) == 0);
    for (long long n = 1; n <= 12; ++n)
        for (long long k = 0; k <= 6; ++k)
            CHECK(family_count({family_kind::path, {n}}, k) ==
                  oracle_on({family_kind::path, {n}}, k));
}

TEST_CASE("cycle counts") {
    CHECK(family_count({family_kind::cycle, {10}}, 5) == 2);
    CHECK(family_count({family_kind::cycle, {6}}, 3) == 2);
    for (long long n = 3; n <= 12; ++n)
        for (long long k = 1; k <= 6; ++k)
            CHECK(family_count({family_kind::cycle, {n}}, k) ==
                  oracle_on({family_kind::cycle, {n}}, k));
    CHECK_THROWS_AS(family_count({family_kind::cycle, {6}}, 0), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::cycle, {2}}, 1), domain_error);
}

TEST_CASE("star counts stop at k = 2") {
    for (long long n = 1; n <= 9; ++n) {
        CHECK(family_count({family_kind::star, {n}}, 0) == 1);
        CHECK(family_count({family_kind::star, {n}}, 1) == make_int(n - 1));
        CHECK(family_count({family_kind::star, {n}}, 2) == 0);
    }
    CHECK_THROWS_AS(family_count({family_kind::star, {6}}, 3), no_formula_error);
}

TEST_CASE("caterpillar counts match the oracle") {
    CHECK(family_count({family_kind::caterpillar, {5}}, 2) == 5);
    CHECK(family_count({family_kind::caterpillar, {5}}, 3) == 1);
    CHECK(family_count({family_kind::caterpillar, {6}}, 4) == 1);
    CHECK(family_count({family_kind::caterpillar, {7}}, 5) == 1);
    const long long first_valid[] = {0, 0, 4, 5, 6, 7}; // indexed by r
    for (long long r = 2; r <= 5; ++r)
        for (long long k = first_valid[r]; k <= 12; ++k)
            CHECK(family_count({family_kind::caterpillar, {k}}, r) ==
                  oracle_on({family_kind::caterpillar, {k}}, r));
}

TEST_CASE("caterpillar rejections") {
    CHECK_THROWS_AS(family_count({family_kind::caterpillar, {3}}, 2), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::caterpillar, {4}}, 3), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::caterpillar, {6}}, 5), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::caterpillar, {10}}, 6),
                    no_formula_error);
    CHECK_THROWS_AS(family_count({family_kind::caterpillar, {10}}, 1),
                    no_formula_error);
}

TEST_CASE("sunlet counts match the oracle") {
    CHECK(family_count({family_kind::sunlet, {4}}, 3) == 8);
    CHECK(family_count({family_kind::sunlet, {7}}, 6) == 14);
    const long long first_valid[] = {0, 0, 0, 4, 5, 6, 7}; // indexed by r
    for (long long r = 3; r <= 6; ++r)
        for (long long k = first_valid[r]; k <= 12; ++k)
            CHECK(family_count({family_kind::sunlet, {k}}, r) ==
                  oracle_on({family_kind::sunlet, {k}}, r));
}

TEST_CASE("sunlet rejections") {
    CHECK_THROWS_AS(family_count({family_kind::sunlet, {2}}, 3), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::sunlet, {3}}, 3), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::sunlet, {5}}, 6), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::sunlet, {10}}, 7), no_formula_error);
    CHECK_THROWS_AS(family_count({family_kind::sunlet, {10}}, 2), no_formula_error);
}

TEST_CASE("sunlet counts satisfy the caterpillar recurrence") {
    // r * p(sunlet k, r) = k * (p(caterpillar k+1, r-1) + p(caterpillar k, r-1))
    const long long first_valid[] = {0, 0, 0, 4, 5, 6, 7}; // indexed by r
    for (long long r = 3; r <= 6; ++r)
        for (long long k = first_valid[r]; k <= 12; ++k) {
            const Int lhs = make_int(r) * family_count({family_kind::sunlet, {k}}, r);
            const Int rhs =
                make_int(k) *
                (family_count({family_kind::caterpillar, {k + 1}}, r - 1) +
                 family_count({family_kind::caterpillar, {k}}, r - 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("no closed forms for complete graphs") {
    CHECK_THROWS_AS(family_count({family_kind::complete, {5}}, 2), no_formula_error);
    CHECK_THROWS_AS(family_count({family_kind::complete_bipartite, {3, 3}}, 2),
                    no_formula_error);
}

TEST_CASE("parameter arity is checked") {
    CHECK_THROWS_AS(family_count({family_kind::path, {5, 5}}, 2), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::path, {}}, 2), domain_error);
    CHECK_THROWS_AS(family_count({family_kind::path, {5}}, -1), domain_error);
}
