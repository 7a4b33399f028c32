#include "diss/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <limits>
#include <unordered_map>

namespace diss {

bool is_dissociation_set(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.order() || in[v])
            return false;
        in[v] = 1;
    }
    for (Vertex v : set) {
        int deg = 0;
        for (Vertex w : g.neighbors(v))
            if (in[w] && ++deg > 1)
                return false;
    }
    return true;
}

std::vector<Vertex> greedy_dissociation_set(const Graph& g) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> ddeg(g.order(), 0); // degree within the chosen set
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        int deg = 0;
        bool ok = true;
        for (Vertex w : g.neighbors(v)) {
            if (in[w]) {
                if (ddeg[w] >= 1 || ++deg > 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            continue;
        in[v] = 1;
        ddeg[v] = deg;
        for (Vertex w : g.neighbors(v))
            if (in[w])
                ++ddeg[w];
        out.push_back(v);
    }
    return out;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct MaskSolver {
    std::vector<Mask> nbr;      // open neighborhood masks
    std::unordered_map<Mask, int> memo;
    long long nodes = 0;
    long long node_limit;
    Clock::time_point deadline;
    const Graph* g;

    bool over_budget() {
        if (nodes > node_limit)
            return true;
        if ((nodes & 0xfff) == 0 && Clock::now() > deadline)
            return true;
        return false;
    }

    Mask component_of(Mask mask, Vertex s) const {
        Mask comp = Mask{1} << s;
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= nbr[v] & mask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int solve(Mask mask) {
        if (mask == 0)
            return 0;
        if (auto it = memo.find(mask); it != memo.end())
            return it->second;
        ++nodes;
        if (over_budget())
            throw BudgetExceededError("solver budget exceeded", {});

        // Split off the component of the lowest vertex.
        Vertex lo = std::countr_zero(mask);
        Mask comp = component_of(mask, lo);
        int result;
        if (comp != mask) {
            result = solve(comp) + solve(mask & ~comp);
        } else {
            // Connected: branch on a vertex of maximum degree.
            Vertex v = -1;
            int dmax = -1;
            Mask m2 = mask;
            while (m2) {
                int u = std::countr_zero(m2);
                m2 &= m2 - 1;
                int d = std::popcount(nbr[u] & mask);
                if (d > dmax) {
                    dmax = d;
                    v = u;
                }
            }
            if (dmax <= 1) {
                // Matching plus isolated vertices: take everything.
                result = std::popcount(mask);
            } else {
                // v excluded.
                result = solve(mask & ~(Mask{1} << v));
                // v in D with no neighbor in D.
                Mask closed = nbr[v] | (Mask{1} << v);
                result = std::max(result, 1 + solve(mask & ~closed));
                // v in D paired with neighbor u.
                Mask cand = nbr[v] & mask;
                while (cand) {
                    int u = std::countr_zero(cand);
                    cand &= cand - 1;
                    Mask kill = closed | nbr[u] | (Mask{1} << u);
                    result = std::max(result, 2 + solve(mask & ~kill));
                }
            }
        }
        memo.emplace(mask, result);
        return result;
    }

    // Re-derives the branch decisions using the completed memo table.
    void reconstruct(Mask mask, std::vector<Vertex>& out) {
        if (mask == 0)
            return;
        int target = solve(mask);
        Vertex lo = std::countr_zero(mask);
        Mask comp = component_of(mask, lo);
        if (comp != mask) {
            reconstruct(comp, out);
            reconstruct(mask & ~comp, out);
            return;
        }
        (void)target;
        Vertex v = -1;
        int dmax = -1;
        Mask m2 = mask;
        while (m2) {
            int u = std::countr_zero(m2);
            m2 &= m2 - 1;
            int d = std::popcount(nbr[u] & mask);
            if (d > dmax) {
                dmax = d;
                v = u;
            }
        }
        if (dmax <= 1) {
            m2 = mask;
            while (m2) {
                out.push_back(std::countr_zero(m2));
                m2 &= m2 - 1;
            }
            return;
        }
        if (solve(mask & ~(Mask{1} << v)) == target) {
            reconstruct(mask & ~(Mask{1} << v), out);
            return;
        }
        Mask closed = nbr[v] | (Mask{1} << v);
        if (1 + solve(mask & ~closed) == target) {
            out.push_back(v);
            reconstruct(mask & ~closed, out);
            return;
        }
        Mask cand = nbr[v] & mask;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            Mask kill = closed | nbr[u] | (Mask{1} << u);
            if (2 + solve(mask & ~kill) == target) {
                out.push_back(v);
                out.push_back(u);
                reconstruct(mask & ~kill, out);
                return;
            }
        }
        throw InternalError("solver reconstruction failed");
    }
};

} // namespace

DissociationCertificate diss_exact(const Graph& g, const SolverLimits& limits) {
    if (g.order() > 64)
        throw InvalidInputError("diss_exact requires n <= 64");
    if (g.order() == 0)
        return {.vertices = {}, .size = 0, .optimal = true, .avoided = {}};
    MaskSolver s;
    s.g = &g;
    s.nbr = adjacency_masks(g);
    s.node_limit = limits.node_limit;
    s.deadline = Clock::now() + std::chrono::milliseconds(limits.time_limit_ms);
    Mask all = (g.order() == 64) ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
    int best;
    try {
        best = s.solve(all);
    } catch (BudgetExceededError&) {
        DissociationCertificate inc;
        inc.vertices = greedy_dissociation_set(g);
        inc.size = static_cast<int>(inc.vertices.size());
        inc.optimal = false;
        throw BudgetExceededError("solver budget exceeded", std::move(inc));
    }
    DissociationCertificate cert;
    s.reconstruct(all, cert.vertices);
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = best;
    cert.optimal = true;
    if (static_cast<int>(cert.vertices.size()) != best || !is_dissociation_set(g, cert.vertices))
        throw InternalError("solver produced an invalid certificate");
    return cert;
}

DissociationCertificate diss_exact_avoiding(const Graph& g, Vertex u, const SolverLimits& limits) {
    if (u < 0 || u >= g.order())
        throw InvalidInputError("avoided vertex out of range");
    std::vector<Vertex> old_ids;
    Graph h = g.without_vertex(u, &old_ids);
    DissociationCertificate cert = diss_exact(h, limits);
    for (Vertex& v : cert.vertices)
        v = old_ids[v];
    cert.avoided = u;
    return cert;
}

DissociationCertificate diss_forest_dp(const Graph& g) {
    if (!is_forest(g))
        throw InvalidInputError("diss_forest_dp requires a forest");
    const int n = g.order();
    constexpr int NEG = std::numeric_limits<int>::min() / 4;
    enum { OUT = 0, IN_FREE = 1, IN_MATCHED = 2 };

    std::vector<std::array<int, 3>> dp(n);
    std::vector<Vertex> order;   // BFS order, roots first
    std::vector<Vertex> parent(n, -1);
    std::vector<char> seen(n, 0);
    order.reserve(n);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r])
            continue;
        seen[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            Vertex u = order[head++];
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    order.push_back(v);
                }
            }
        }
    }

    // matched_child[v]: the child paired with v when v is IN_MATCHED.
    std::vector<Vertex> matched_child(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        int sum_best = 0, sum_out = 0, best_gain = NEG;
        Vertex best_c = -1;
        for (Vertex c : g.neighbors(v)) {
            if (c == parent[v])
                continue;
            sum_best += std::max({dp[c][OUT], dp[c][IN_FREE], dp[c][IN_MATCHED]});
            sum_out += dp[c][OUT];
            if (dp[c][IN_FREE] - dp[c][OUT] > best_gain) {
                best_gain = dp[c][IN_FREE] - dp[c][OUT];
                best_c = c;
            }
        }
        dp[v][OUT] = sum_best;
        dp[v][IN_FREE] = 1 + sum_out;
        dp[v][IN_MATCHED] = (best_c >= 0) ? 1 + sum_out + best_gain : NEG;
        matched_child[v] = best_c;
    }

    DissociationCertificate cert;
    std::vector<int> state(n, -1);
    for (Vertex v : order) {
        if (parent[v] == -1) {
            int s = OUT;
            if (dp[v][IN_FREE] > dp[v][s])
                s = IN_FREE;
            if (dp[v][IN_MATCHED] > dp[v][s])
                s = IN_MATCHED;
            state[v] = s;
        } else {
            Vertex p = parent[v];
            switch (state[p]) {
            case OUT: {
                int s = OUT;
                if (dp[v][IN_FREE] > dp[v][s])
                    s = IN_FREE;
                if (dp[v][IN_MATCHED] > dp[v][s])
                    s = IN_MATCHED;
                state[v] = s;
                break;
            }
            case IN_FREE:
                state[v] = OUT;
                break;
            case IN_MATCHED:
                state[v] = (matched_child[p] == v) ? IN_FREE : OUT;
                break;
            }
        }
        if (state[v] != OUT)
            cert.vertices.push_back(v);
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = static_cast<int>(cert.vertices.size());
    cert.optimal = true;
    if (!is_dissociation_set(g, cert.vertices))
        throw InternalError("forest DP produced an invalid certificate");
    return cert;
}

} // namespace diss
