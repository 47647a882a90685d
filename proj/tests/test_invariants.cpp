#include <doctest.h>

#include "core/invariants.hpp"
#include "oracle_helpers.hpp"

using namespace graphmatch;

// Reference values below were computed by hand from the definitions.

TEST_CASE("invariants of the 4-cycle") {
    const graph g = generate({family_kind::cycle, {4}});
    const auto d = compute_degree_invariants(g);
    CHECK(d.m1 == 16);
    CHECK(d.m2 == 16);
    CHECK(d.forgotten == 32);
    CHECK(d.m1_general.at(1) == 8);
    CHECK(d.m1_general.at(4) == 64);
    CHECK(d.m1_general.at(5) == 128);
    CHECK(d.m2_general.at(2) == 64);
    CHECK(d.em1 == 16);
    CHECK(d.em2 == 16);

    const auto i = compute_incidence_invariants(g);
    CHECK(i.alpha == 64);
    CHECK(i.alpha_general.at(2) == 128);
    CHECK(i.beta == 32);
    CHECK(i.gamma == 64);
    CHECK(i.incidence_count == 8);
}

TEST_CASE("invariants of the 4-path") {
    const graph g = generate({family_kind::path, {4}});
    const auto d = compute_degree_invariants(g);
    CHECK(d.m1 == 10);
    CHECK(d.m2 == 8);
    CHECK(d.forgotten == 18);
    CHECK(d.m1_general.at(4) == 34);
    CHECK(d.em1 == 6);
    CHECK(d.em2 == 4);

    const auto i = compute_incidence_invariants(g);
    CHECK(i.alpha == 28);
    CHECK(i.beta == 12);
    CHECK(i.gamma == 20);
    CHECK(i.incidence_count == 4);
}

TEST_CASE("invariants of the 4-star") {
    const graph g = generate({family_kind::star, {4}});
    const auto d = compute_degree_invariants(g);
    CHECK(d.m1 == 12);
    CHECK(d.m2 == 9);
    CHECK(d.forgotten == 30);
    CHECK(d.m1_general.at(4) == 84);
    CHECK(d.em1 == 12);
    CHECK(d.em2 == 12);

    const auto i = compute_incidence_invariants(g);
    CHECK(i.alpha == 36);
    CHECK(i.beta == 36);
    CHECK(i.gamma == 24);
    CHECK(i.incidence_count == 6);
}

TEST_CASE("degree zero and one exponents") {
    const graph g = generate({family_kind::path, {6}});
    const auto d = compute_degree_invariants(g, {0});
    CHECK(d.m1_general.at(0) == 6);            // one per vertex
    CHECK(d.m2_general.at(0) == 5);            // one per edge
    CHECK(d.m1_general.at(1) == 10);           // handshake: 2m
    CHECK(d.m2_general.at(1) == d.m2);
    CHECK_THROWS_AS(compute_degree_invariants(g, {9}), domain_error);
    CHECK_THROWS_AS(compute_incidence_invariants(g, {-1}), domain_error);
}

TEST_CASE("pairwise sums match the naive definitions on random graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const graph g = random_with_min_girth(9, 13, girth_t::finite(3), seed);
        const auto d = compute_degree_invariants(g);
        const auto i = compute_incidence_invariants(g);
        CHECK(d.em2 == testutil::naive_em2(g));
        CHECK(i.gamma == testutil::naive_gamma(g));
        CHECK(i.incidence_count == testutil::naive_incidence_count(g));
    }
}

TEST_CASE("edge zagreb identity holds on any graph") {
    // EM1 = F + 2 M2 - 4 M1 + 4m
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const graph g = random_with_min_girth(10, 14, girth_t::finite(3), seed + 100);
        const auto d = compute_degree_invariants(g);
        const Int m = make_int(g.edge_count());
        CHECK(d.em1 == d.forgotten + 2 * d.m2 - 4 * d.m1 + 4 * m);
    }
}

TEST_CASE("beta minus alpha identity holds on any graph") {
    // beta - alpha = M1^(4) - 3F + 2 M1 - 2 M2
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const graph g = random_with_min_girth(10, 14, girth_t::finite(3), seed + 200);
        const auto d = compute_degree_invariants(g);
        const auto i = compute_incidence_invariants(g);
        CHECK(i.beta - i.alpha ==
              d.m1_general.at(4) - 3 * d.forgotten + 2 * d.m1 - 2 * d.m2);
    }
}

TEST_CASE("gamma identity holds at girth above 3") {
    // gamma = 2 EM2 - beta + 4 EM1 - 2F + 6 M1 - 8m
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const graph g = random_with_min_girth(11, 14, girth_t::finite(4), seed);
        const auto d = compute_degree_invariants(g);
        const auto i = compute_incidence_invariants(g);
        const Int m = make_int(g.edge_count());
        CHECK(i.gamma ==
              2 * d.em2 - i.beta + 4 * d.em1 - 2 * d.forgotten + 6 * d.m1 - 8 * m);
    }
}

TEST_CASE("neighbor degree sums tie back to the zagreb indices") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const graph g = random_with_min_girth(9, 12, girth_t::finite(3), seed + 300);
        const auto d = compute_degree_invariants(g);
        const auto sums = neighbor_degree_sums(g);
        Int s_total = 0, weighted = 0;
        for (vertex_t u = 0; u < g.vertex_count(); ++u) {
            s_total += make_int(sums[static_cast<size_t>(u)]);
            weighted += Int(g.degree(u)) * make_int(sums[static_cast<size_t>(u)]);
        }
        CHECK(s_total == d.m1);
        CHECK(weighted == 2 * d.m2);
    }
}
