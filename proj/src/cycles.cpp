#include "diss/cycles.hpp"

#include <algorithm>
#include <functional>

#include "diss/blocks.hpp"
#include "diss/errors.hpp"

namespace diss {
namespace {

// Orders a cycle block's vertices along the cycle, canonical rotation:
// minimum vertex first, smaller cycle neighbor second.
std::vector<Vertex> cycle_block_order(const BlockDecomposition::Block& blk) {
    std::vector<Vertex> order;
    Vertex start = blk.vertices.front(); // sorted, so the minimum
    auto nbrs = [&](Vertex u) {
        std::vector<Vertex> out;
        for (auto [a, b] : blk.edges) {
            if (a == u)
                out.push_back(b);
            else if (b == u)
                out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    order.push_back(start);
    Vertex prev = start;
    Vertex cur = nbrs(start).front();
    while (cur != start) {
        order.push_back(cur);
        auto nb = nbrs(cur);
        Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

bool is_cycle_disjoint(const Graph& g) {
    BlockDecomposition bd = block_decomposition(g);
    std::vector<int> cycle_blocks_at(g.order(), 0);
    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
        const auto& blk = bd.blocks[b];
        if (blk.vertices.size() == 1)
            continue; // isolated vertex
        if (bd.block_is_k2(b))
            continue;
        if (!bd.block_is_cycle(b))
            return false;
        for (Vertex v : blk.vertices)
            if (++cycle_blocks_at[v] > 1)
                return false;
    }
    return true;
}

InducedCycleSet enumerate_induced_cycles_general(const Graph& g, std::size_t cap) {
    InducedCycleSet out;
    const int n = g.order();
    std::vector<char> in_path(n, 0);
    std::vector<Vertex> path;

    // Extend chordless paths with vertices > start; a neighbor of the start
    // can only close the cycle, never extend it.
    std::function<bool(Vertex)> extend = [&](Vertex start) -> bool {
        Vertex tail = path.back();
        for (Vertex w : g.neighbors(tail)) {
            if (w <= start || in_path[w])
                continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord)
                continue;
            if (g.has_edge(w, start)) {
                if (path.size() >= 2 && path[1] < w) {
                    if (out.cycles.size() >= cap) {
                        out.truncated = true;
                        return false;
                    }
                    auto cyc = path;
                    cyc.push_back(w);
                    out.cycles.push_back(std::move(cyc));
                }
                continue;
            }
            path.push_back(w);
            in_path[w] = 1;
            bool ok = extend(start);
            in_path[w] = 0;
            path.pop_back();
            if (!ok)
                return false;
        }
        return true;
    };

    for (Vertex s = 0; s < n && !out.truncated; ++s) {
        path.assign(1, s);
        in_path.assign(n, 0);
        in_path[s] = 1;
        for (Vertex v1 : g.neighbors(s)) {
            if (v1 <= s)
                continue;
            path.push_back(v1);
            in_path[v1] = 1;
            if (!extend(s)) {
                in_path[v1] = 0;
                path.pop_back();
                break;
            }
            in_path[v1] = 0;
            path.pop_back();
        }
    }
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

InducedCycleSet enumerate_induced_cycles(const Graph& g, std::size_t cap) {
    if (is_cycle_disjoint(g)) {
        InducedCycleSet out;
        BlockDecomposition bd = block_decomposition(g);
        for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
            if (!bd.block_is_cycle(b))
                continue;
            if (out.cycles.size() >= cap) {
                out.truncated = true;
                return out;
            }
            out.cycles.push_back(cycle_block_order(bd.blocks[b]));
        }
        std::sort(out.cycles.begin(), out.cycles.end());
        return out;
    }
    return enumerate_induced_cycles_general(g, cap);
}

int c1_count(const Graph& g, std::size_t cap) {
    InducedCycleSet cs = enumerate_induced_cycles(g, cap);
    if (cs.truncated)
        throw CycleCapExceededError("induced-cycle enumeration exceeded the configured cap");
    int c1 = 0;
    for (const auto& cyc : cs.cycles)
        if (cyc.size() % 3 == 1)
            ++c1;
    return c1;
}

namespace {

// Exact maximum independent set on a small conflict graph.
int mis_size(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> alive(n, 1);
    int best = 0;
    std::function<void(int, int)> go = [&](int chosen, int remaining) {
        if (chosen + remaining <= best)
            return;
        int v = -1, dmax = -1;
        for (int u = 0; u < n; ++u) {
            if (!alive[u])
                continue;
            int d = 0;
            for (int w : adj[u])
                if (alive[w])
                    ++d;
            if (d > dmax) {
                dmax = d;
                v = u;
            }
        }
        if (v < 0) {
            best = std::max(best, chosen);
            return;
        }
        if (dmax == 0) {
            best = std::max(best, chosen + remaining);
            return;
        }
        // Include v.
        std::vector<int> removed{v};
        alive[v] = 0;
        for (int w : adj[v]) {
            if (alive[w]) {
                alive[w] = 0;
                removed.push_back(w);
            }
        }
        go(chosen + 1, remaining - static_cast<int>(removed.size()));
        for (int w : removed)
            alive[w] = 1;
        // Exclude v.
        alive[v] = 0;
        go(chosen, remaining - 1);
        alive[v] = 1;
    };
    go(0, n);
    return best;
}

} // namespace

int max_disjoint_c1_packing(const Graph& g, std::size_t cap, std::size_t limit) {
    InducedCycleSet cs = enumerate_induced_cycles(g, cap);
    if (cs.truncated)
        throw CycleCapExceededError("induced-cycle enumeration exceeded the configured cap");
    std::vector<const std::vector<Vertex>*> c1_cycles;
    for (const auto& cyc : cs.cycles)
        if (cyc.size() % 3 == 1)
            c1_cycles.push_back(&cyc);
    if (c1_cycles.size() > limit)
        throw SearchLimitExceededError("too many length-1-mod-3 cycles for exact packing");

    const int k = static_cast<int>(c1_cycles.size());
    std::vector<std::vector<std::uint64_t>> vsets(k);
    const int words = (g.order() + 63) / 64;
    for (int i = 0; i < k; ++i) {
        vsets[i].assign(words, 0);
        for (Vertex v : *c1_cycles[i])
            vsets[i][v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::vector<std::vector<int>> conflict(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool share = false;
            for (int w = 0; w < words && !share; ++w)
                share = (vsets[i][w] & vsets[j][w]) != 0;
            if (share) {
                conflict[i].push_back(j);
                conflict[j].push_back(i);
            }
        }
    }
    return mis_size(conflict);
}

} // namespace diss
