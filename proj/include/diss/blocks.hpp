#pragma once

#include <utility>
#include <vector>

#include "diss/graph.hpp"

namespace diss {

// Blocks (maximal 2-connected subgraphs and bridges), cut vertices, and the
// bipartite block-cutvertex tree. Isolated vertices appear as single-vertex
// pseudo-blocks so that every vertex lies in at least one block.
struct BlockDecomposition {
    struct Block {
        std::vector<Vertex> vertices;                   // sorted ascending
        std::vector<std::pair<Vertex, Vertex>> edges;   // u < v, sorted
    };

    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;                   // sorted ascending
    std::vector<char> is_cut;                           // per vertex
    std::vector<std::vector<int>> blocks_of_vertex;     // block ids per vertex

    // Bipartite tree: nodes 0..B-1 are blocks, B..B+C-1 are cut vertices
    // (in cut_vertices order); one tree per graph component.
    std::vector<std::vector<int>> tree_adj;

    bool block_is_k2(int b) const { return blocks[b].vertices.size() == 2; }
    bool block_is_cycle(int b) const {
        return blocks[b].vertices.size() >= 3 &&
               blocks[b].edges.size() == blocks[b].vertices.size();
    }
};

BlockDecomposition block_decomposition(const Graph& g);

} // namespace diss
