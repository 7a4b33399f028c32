#include "doctest.h"

#include <random>

#include "diss/blocks.hpp"
#include "diss/cycles.hpp"
#include "diss/generators.hpp"
#include "fixtures.hpp"

using namespace diss;

TEST_CASE("free tree counts match the known sequence") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        auto trees = free_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        for (const Graph& t : trees)
            CHECK(is_tree(t));
    }
}

TEST_CASE("nonisomorphic graph counts match the known sequence") {
    CHECK(nonisomorphic_graphs(1).size() == 1);
    CHECK(nonisomorphic_graphs(2).size() == 2);
    CHECK(nonisomorphic_graphs(3).size() == 4);
    CHECK(nonisomorphic_graphs(4).size() == 11);
    CHECK(nonisomorphic_graphs(5).size() == 34);
    CHECK(nonisomorphic_graphs(6).size() == 156);
    CHECK(nonisomorphic_graphs(6, true).size() == 112);
}

TEST_CASE("canonical edge mask is an isomorphism invariant") {
    // Same path with scrambled labels.
    Graph a = fixtures::path(5);
    Graph b = Graph::from_edges(5, {{2, 4}, {4, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_edge_mask(a) == canonical_edge_mask(b));
    CHECK(canonical_edge_mask(a) != canonical_edge_mask(fixtures::star(4)));
}

TEST_CASE("random generators produce what they claim") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        CHECK(is_tree(random_tree(1 + static_cast<int>(rng() % 30), rng)));

        Graph cd = random_cactus(2 + static_cast<int>(rng() % 30), rng, true);
        CHECK(is_cycle_disjoint(cd));
        CHECK(is_connected(cd));

        Graph cac = random_cactus(2 + static_cast<int>(rng() % 30), rng, false);
        CHECK(is_connected(cac));
        BlockDecomposition bd = block_decomposition(cac);
        for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b)
            CHECK((bd.block_is_k2(b) || bd.block_is_cycle(b) ||
                   bd.blocks[b].vertices.size() == 1));
    }
}

TEST_CASE("generators are deterministic per seed") {
    std::mt19937_64 a(3), b(3);
    CHECK(random_gnp(12, 0.3, a).edges() == random_gnp(12, 0.3, b).edges());
    CHECK(random_tree(15, a).edges() == random_tree(15, b).edges());
    CHECK(random_cactus(20, a).edges() == random_cactus(20, b).edges());
}

TEST_CASE("tree canonical form distinguishes and unifies") {
    Graph p4a = fixtures::path(4);
    Graph p4b = Graph::from_edges(4, {{1, 3}, {3, 0}, {0, 2}});
    CHECK(tree_canonical_form(p4a) == tree_canonical_form(p4b));
    CHECK(tree_canonical_form(p4a) != tree_canonical_form(fixtures::star(3)));
}
