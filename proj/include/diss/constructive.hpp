#pragma once

#include <optional>

#include "diss/graph.hpp"
#include "diss/solver.hpp"

namespace diss {

// A vertex u with components(g-u) <= d(u) - 2 (relative to u's component):
// either a vertex of degree >= 3 inside a block that is neither a K2 nor a
// cycle, or a vertex lying in two cycle blocks. Empty iff g is cycle-disjoint.
// Smallest qualifying id.
std::optional<Vertex> find_dense_block_vertex(const Graph& g);

// Exact maximum dissociation set on graphs whose blocks are all K2s or
// cycles (cacti components; cycles may share vertices). Linear-time DP over
// the block-cutvertex tree.
DissociationCertificate cactus_exact(const Graph& g);

// Constructive certificate for the n - (m + k + c1)/3 lower bound: deletes
// dense-block vertices until the graph is cycle-disjoint, then solves the
// remaining cacti exactly. Polynomial time, any input graph.
DissociationCertificate certify_bound_set(const Graph& g);

} // namespace diss
