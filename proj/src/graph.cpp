#include "diss/graph.hpp"

#include <algorithm>
#include <string>

#include "diss/errors.hpp"

namespace diss {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0)
        throw InvalidInputError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw InvalidInputError("loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (Vertex u = 0; u < n; ++u) {
        auto& nb = g.adj_[u];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InvalidInputError("duplicate edge incident to vertex " + std::to_string(u));
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex u = 0; u < n_; ++u)
        d = std::max(d, degree(u));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep, std::vector<Vertex>* old_ids) const {
    std::vector<Vertex> ids = keep;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Vertex> new_id(n_, -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        new_id[ids[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : ids)
        for (Vertex v : adj_[u])
            if (u < v && new_id[v] >= 0)
                es.emplace_back(new_id[u], new_id[v]);
    if (old_ids)
        *old_ids = ids;
    return from_edges(static_cast<int>(ids.size()), es);
}

Graph Graph::without_vertex(Vertex u, std::vector<Vertex>* old_ids) const {
    std::vector<Vertex> keep;
    keep.reserve(n_ - 1);
    for (Vertex v = 0; v < n_; ++v)
        if (v != u)
            keep.push_back(v);
    return induced(keep, old_ids);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g) {
    // A graph is a forest iff m = n - k.
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.order() > 64)
        throw InvalidInputError("bitmask representation requires n <= 64");
    std::vector<std::uint64_t> masks(g.order(), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u))
            masks[u] |= std::uint64_t{1} << v;
    return masks;
}

} // namespace diss
