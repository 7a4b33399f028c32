#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace diss {

using Vertex = int;

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; neighbor lists sorted ascending.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: rejects loops, duplicate edges, ids outside [0,n).
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    // Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Induced subgraph on `keep` (any order; relabeled 0..|keep|-1 by ascending
    // original id). If old_ids is non-null it receives new-id -> original-id.
    Graph induced(const std::vector<Vertex>& keep, std::vector<Vertex>* old_ids = nullptr) const;
    Graph without_vertex(Vertex u, std::vector<Vertex>* old_ids = nullptr) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

// Connected components as vertex sets, sorted ascending, ordered by minimum id.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// Per-vertex neighborhood bitmasks; requires n <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

} // namespace diss
