#include "diss/blocks.hpp"

#include <algorithm>

#include "diss/errors.hpp"

namespace diss {

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.order();
    BlockDecomposition bd;
    bd.is_cut.assign(n, 0);
    bd.blocks_of_vertex.assign(n, {});

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int timer = 0;

    auto emit_block = [&](std::size_t from) {
        BlockDecomposition::Block blk;
        for (std::size_t i = from; i < edge_stack.size(); ++i) {
            auto [a, b] = edge_stack[i];
            if (a > b)
                std::swap(a, b);
            blk.edges.emplace_back(a, b);
            blk.vertices.push_back(a);
            blk.vertices.push_back(b);
        }
        edge_stack.resize(from);
        std::sort(blk.vertices.begin(), blk.vertices.end());
        blk.vertices.erase(std::unique(blk.vertices.begin(), blk.vertices.end()), blk.vertices.end());
        std::sort(blk.edges.begin(), blk.edges.end());
        bd.blocks.push_back(std::move(blk));
    };

    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            bd.blocks.push_back({{root}, {}});
            continue;
        }
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            auto nbs = g.neighbors(u);
            if (it[u] < static_cast<int>(nbs.size())) {
                Vertex v = nbs[it[u]++];
                if (disc[v] < 0) {
                    edge_stack.emplace_back(u, v);
                    disc[v] = low[v] = timer++;
                    parent[v] = u;
                    stack.push_back(v);
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    edge_stack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                Vertex p = parent[u];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        // Pop this block's edges, starting at (p,u).
                        std::size_t from = edge_stack.size();
                        while (from > 0 && !(edge_stack[from - 1].first == p &&
                                             edge_stack[from - 1].second == u))
                            --from;
                        if (from == 0)
                            throw InternalError("block decomposition: tree edge missing from stack");
                        emit_block(from - 1);
                    }
                }
            }
        }
        if (!edge_stack.empty())
            throw InternalError("block decomposition: dangling edges");
    }

    // Deterministic block order: by (min vertex, then lexicographic vertex set).
    std::sort(bd.blocks.begin(), bd.blocks.end(),
              [](const auto& a, const auto& b) { return a.vertices < b.vertices; });

    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b)
        for (Vertex v : bd.blocks[b].vertices)
            bd.blocks_of_vertex[v].push_back(b);
    for (Vertex v = 0; v < n; ++v) {
        if (bd.blocks_of_vertex[v].size() >= 2) {
            bd.is_cut[v] = 1;
            bd.cut_vertices.push_back(v);
        }
    }

    const int nb = static_cast<int>(bd.blocks.size());
    const int nc = static_cast<int>(bd.cut_vertices.size());
    std::vector<int> cut_index(n, -1);
    for (int i = 0; i < nc; ++i)
        cut_index[bd.cut_vertices[i]] = i;
    bd.tree_adj.assign(nb + nc, {});
    for (int b = 0; b < nb; ++b) {
        for (Vertex v : bd.blocks[b].vertices) {
            if (bd.is_cut[v]) {
                bd.tree_adj[b].push_back(nb + cut_index[v]);
                bd.tree_adj[nb + cut_index[v]].push_back(b);
            }
        }
    }
    return bd;
}

} // namespace diss
