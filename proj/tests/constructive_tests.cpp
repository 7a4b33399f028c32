#include "doctest.h"

#include <random>

#include "diss/bounds.hpp"
#include "diss/constructive.hpp"
#include "diss/cycles.hpp"
#include "diss/generators.hpp"
#include "diss/solver.hpp"
#include "fixtures.hpp"

using namespace diss;

TEST_CASE("dense-block vertex detection") {
    auto left = find_dense_block_vertex(fixtures::two_triangles());
    REQUIRE(left.has_value());
    CHECK(*left == 0); // the vertex shared by both triangles
    Graph g = fixtures::two_triangles();
    CHECK(static_cast<int>(components(g.without_vertex(*left)).size()) == g.degree(*left) - 2);

    auto right = find_dense_block_vertex(fixtures::diamond());
    REQUIRE(right.has_value());
    CHECK(*right == 2); // smallest degree-3 vertex in the dense block
    CHECK(!find_dense_block_vertex(fixtures::spiked20()).has_value());
    CHECK(!find_dense_block_vertex(fixtures::path(6)).has_value());
}

TEST_CASE("dense vertex exists exactly when not cycle-disjoint, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            CHECK(find_dense_block_vertex(g).has_value() == !is_cycle_disjoint(g));
        }
    }
}

TEST_CASE("cactus DP on fixtures") {
    auto tree = cactus_exact(fixtures::path(6));
    CHECK(tree.size == diss_forest_dp(fixtures::path(6)).size);
    CHECK(tree.optimal);

    // C7 with a pendant vertex.
    Graph c7p = Graph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}, {0, 7}});
    auto cert = cactus_exact(c7p);
    CHECK(cert.size == 5);
    CHECK(is_dissociation_set(c7p, cert.vertices));

    CHECK(cactus_exact(fixtures::spiked20()).size == 13);
    CHECK_THROWS(cactus_exact(fixtures::diamond()));
}

TEST_CASE("cactus DP equals general solver on random cacti") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 3 + static_cast<int>(rng() % 18);
        // Cover both regimes: vertex-disjoint cycles and shared cycle vertices.
        Graph g = random_cactus(n, rng, iter % 2 == 0);
        auto cert = cactus_exact(g);
        REQUIRE(is_dissociation_set(g, cert.vertices));
        CHECK(cert.size == diss_exact(g).size);
    }
    for (int iter = 0; iter < 50; ++iter) {
        int n = 20 + static_cast<int>(rng() % 21);
        Graph g = random_cactus(n, rng);
        auto cert = cactus_exact(g);
        REQUIRE(is_dissociation_set(g, cert.vertices));
        CHECK(Rational(cert.size) >= bound_e1(g));
    }
}

TEST_CASE("constructive certificate on fixtures") {
    auto c5 = certify_bound_set(fixtures::cycle(5));
    CHECK(c5.size >= 3);
    CHECK(is_dissociation_set(fixtures::cycle(5), c5.vertices));

    auto left = certify_bound_set(fixtures::two_triangles());
    CHECK(left.size >= 4);
    CHECK(is_dissociation_set(fixtures::two_triangles(), left.vertices));

    auto p6 = certify_bound_set(fixtures::path(6));
    CHECK(p6.size == 4);

    auto empty = certify_bound_set(Graph::from_edges(0, {}));
    CHECK(empty.size == 0);
}

TEST_CASE("certificate meets the bound on random graphs") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 2 + static_cast<int>(rng() % 13);
        Graph g = random_gnp(n, 0.15 + 0.05 * (iter % 7), rng);
        auto cert = certify_bound_set(g);
        REQUIRE(is_dissociation_set(g, cert.vertices));
        CHECK(Rational(cert.size) >= ceil_rational_as_int(bound_e1(g)));
    }
}
