#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "diss/graph.hpp"

namespace diss {

Graph random_gnp(int n, double p, std::mt19937_64& rng);

// Uniform labeled tree via Pruefer decoding.
Graph random_tree(int n, std::mt19937_64& rng);

// Connected cactus grown by attaching pendant edges and cycles. With
// cycle_disjoint, cycles are only attached at vertices not already on one.
Graph random_cactus(int n, std::mt19937_64& rng, bool cycle_disjoint = true);

// Edge bit i corresponds to the i-th pair (u,v), u < v, in lexicographic
// order. Requires n*(n-1)/2 <= 64.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

// Minimum edge mask over all vertex permutations; isomorphism invariant.
// Requires n <= 8.
std::uint64_t canonical_edge_mask(const Graph& g);

// All non-isomorphic graphs on n vertices (n <= 7), by incremental extension
// with canonical-mask dedup. Optionally connected ones only.
std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only = false);

// AHU canonical form of a free tree (rooted at its centroid(s)).
std::string tree_canonical_form(const Graph& t);

// All free (non-isomorphic) trees on n vertices; counts 1,1,1,2,3,6,11,23,...
std::vector<Graph> free_trees(int n);

} // namespace diss
