#include "diss/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diss/errors.hpp"

namespace diss {

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw InvalidInputError("random_gnp requires n >= 0 and p in [0,1]");
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1)
        throw InvalidInputError("random_tree requires n >= 1");
    if (n == 1)
        return Graph::from_edges(1, {});
    if (n == 2)
        return Graph::from_edges(2, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer)
        x = static_cast<int>(rng() % n);
    std::vector<int> deg(n, 1);
    for (int x : pruefer)
        ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            leaves.insert(v);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1)
            leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_cactus(int n, std::mt19937_64& rng, bool cycle_disjoint) {
    if (n < 1)
        throw InvalidInputError("random_cactus requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<char> on_cycle(n, 0);
    int cur = 1;
    while (cur < n) {
        const int rem = n - cur;
        // Candidate attachment for a cycle: any vertex, or only cycle-free
        // vertices in the cycle-disjoint regime.
        std::vector<Vertex> cyc_hosts;
        if (rem >= 2) {
            for (Vertex v = 0; v < cur; ++v)
                if (!cycle_disjoint || !on_cycle[v])
                    cyc_hosts.push_back(v);
        }
        const bool try_cycle = !cyc_hosts.empty() && rng() % 2 == 0;
        if (try_cycle) {
            Vertex a = cyc_hosts[rng() % cyc_hosts.size()];
            const int max_len = std::min(rem + 1, 8);
            int len = 3 + static_cast<int>(rng() % (max_len - 2));
            std::vector<Vertex> ring{a};
            for (int i = 0; i < len - 1; ++i)
                ring.push_back(cur++);
            for (int i = 0; i < len; ++i)
                edges.emplace_back(ring[i], ring[(i + 1) % len]);
            for (Vertex v : ring)
                on_cycle[v] = 1;
        } else {
            Vertex a = static_cast<Vertex>(rng() % cur);
            edges.emplace_back(a, cur++);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

int pair_index(int n, int u, int v) {
    // (u,v), u < v, in lexicographic order.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

} // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n * (n - 1) / 2 > 64)
        throw InvalidInputError("edge mask requires n*(n-1)/2 <= 64");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int idx = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++idx)
            if (mask >> idx & 1)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::uint64_t edge_mask_of(const Graph& g) {
    const int n = g.order();
    if (n * (n - 1) / 2 > 64)
        throw InvalidInputError("edge mask requires n*(n-1)/2 <= 64");
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges())
        mask |= std::uint64_t{1} << pair_index(n, u, v);
    return mask;
}

std::uint64_t canonical_edge_mask(const Graph& g) {
    const int n = g.order();
    if (n > 8)
        throw InvalidInputError("canonical_edge_mask requires n <= 8");
    const auto edges = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (const auto& [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b)
                std::swap(a, b);
            mask |= std::uint64_t{1} << pair_index(n, a, b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only) {
    if (n < 1 || n > 7)
        throw InvalidInputError("nonisomorphic_graphs supports 1 <= n <= 7");
    std::vector<std::uint64_t> masks{0}; // n = 1
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t base : masks) {
            Graph small = graph_from_edge_mask(k - 1, base);
            auto edges = small.edges();
            // Attach vertex k-1 with every possible neighborhood.
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
                auto ext = edges;
                for (int v = 0; v < k - 1; ++v)
                    if (nbrs >> v & 1)
                        ext.emplace_back(v, k - 1);
                next.insert(canonical_edge_mask(Graph::from_edges(k, ext)));
            }
        }
        masks.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    for (std::uint64_t mask : masks) {
        Graph g = graph_from_edge_mask(n, mask);
        if (!connected_only || is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::string ahu_string(const Graph& t, Vertex root, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex c : t.neighbors(root))
        if (c != parent)
            kids.push_back(ahu_string(t, c, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids)
        out += k;
    out += ")";
    return out;
}

std::vector<Vertex> centroids(const Graph& t) {
    const int n = t.order();
    if (n == 1)
        return {0};
    // Subtree sizes from a rooted BFS; centroid minimizes the largest
    // component of t - v.
    std::vector<int> sz(n, 1);
    std::vector<Vertex> bfs{0}, parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t h = 0; h < bfs.size(); ++h)
        for (Vertex c : t.neighbors(bfs[h]))
            if (!seen[c]) {
                seen[c] = 1;
                parent[c] = bfs[h];
                bfs.push_back(c);
            }
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
        if (parent[*it] >= 0)
            sz[parent[*it]] += sz[*it];
    std::vector<Vertex> best;
    int best_weight = n + 1;
    for (Vertex v = 0; v < n; ++v) {
        int w = v == 0 ? 0 : n - sz[v];
        for (Vertex c : t.neighbors(v))
            if (parent[c] == v)
                w = std::max(w, sz[c]);
        if (w < best_weight) {
            best_weight = w;
            best = {v};
        } else if (w == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

} // namespace

std::string tree_canonical_form(const Graph& t) {
    if (!is_tree(t))
        throw InvalidInputError("tree_canonical_form requires a tree");
    std::string best;
    for (Vertex c : centroids(t)) {
        std::string s = ahu_string(t, c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

std::vector<Graph> free_trees(int n) {
    if (n < 1)
        throw InvalidInputError("free_trees requires n >= 1");
    std::vector<Graph> trees{Graph::from_edges(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& t : trees) {
            auto edges = t.edges();
            for (Vertex v = 0; v < k - 1; ++v) {
                auto ext = edges;
                ext.emplace_back(v, k - 1);
                Graph bigger = Graph::from_edges(k, ext);
                next.emplace(tree_canonical_form(bigger), bigger);
            }
        }
        trees.clear();
        for (auto& [key, t] : next)
            trees.push_back(std::move(t));
    }
    return trees;
}

} // namespace diss
