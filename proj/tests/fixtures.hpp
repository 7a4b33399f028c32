#pragma once

#include <vector>

#include "diss/extremal.hpp"
#include "diss/graph.hpp"

namespace fixtures {

inline diss::Graph path(int n) {
    std::vector<std::pair<diss::Vertex, diss::Vertex>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return diss::Graph::from_edges(n, e);
}

inline diss::Graph cycle(int n) {
    std::vector<std::pair<diss::Vertex, diss::Vertex>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return diss::Graph::from_edges(n, e);
}

// Star K_{1,k}: center 0.
inline diss::Graph star(int k) {
    std::vector<std::pair<diss::Vertex, diss::Vertex>> e;
    for (int i = 1; i <= k; ++i)
        e.emplace_back(0, i);
    return diss::Graph::from_edges(k + 1, e);
}

inline diss::Graph complete(int n) {
    std::vector<std::pair<diss::Vertex, diss::Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return diss::Graph::from_edges(n, e);
}

// Spiked cycle with ell = 15 and spikes at positions 2, 4, 9, 11, 13; the
// canonical very good example (n = m = 20, diss = 13).
inline diss::SpikedCycleSpec spiked20_spec() {
    return {15, {2, 4, 9, 11, 13}};
}

inline diss::Graph spiked20() {
    return diss::build_spiked_cycle(spiked20_spec());
}

// Two triangles sharing vertex 0, with pendant edges at 2 and 4 (n=7, m=8).
// Tight for the main bound but not cycle-disjoint; deleting the shared
// vertex leaves d-2 = 2 components.
inline diss::Graph two_triangles() {
    return diss::Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {2, 5}, {4, 6}});
}

// K4 minus one edge (n=4, m=5); also tight, single dense block.
inline diss::Graph diamond() {
    return diss::Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace fixtures
