#include "diss/constructive.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "diss/blocks.hpp"
#include "diss/cycles.hpp"
#include "diss/errors.hpp"

namespace diss {

namespace {
constexpr int NEG = std::numeric_limits<int>::min() / 4;
enum { OUT = 0, IN_FREE = 1, IN_MATCHED = 2 };
} // namespace

std::optional<Vertex> find_dense_block_vertex(const Graph& g) {
    BlockDecomposition bd = block_decomposition(g);
    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<char> dense(nb, 0), cyc(nb, 0);
    for (int b = 0; b < nb; ++b) {
        const auto& blk = bd.blocks[b];
        cyc[b] = bd.block_is_cycle(b);
        dense[b] = blk.vertices.size() >= 3 && blk.edges.size() > blk.vertices.size();
    }
    std::optional<Vertex> found;
    for (Vertex v = 0; v < g.order() && !found; ++v) {
        int cycle_blocks = 0;
        for (int b : bd.blocks_of_vertex[v]) {
            if (cyc[b] && ++cycle_blocks >= 2) {
                found = v;
                break;
            }
            if (dense[b]) {
                int bdeg = 0;
                for (auto [x, y] : bd.blocks[b].edges)
                    if (x == v || y == v)
                        ++bdeg;
                if (bdeg >= 3) {
                    found = v;
                    break;
                }
            }
        }
    }
    if (!found)
        return std::nullopt;
    // The deletion argument needs components(g-u) to grow by at most d(u)-2
    // within u's component; check it before handing the vertex out.
    const int before = static_cast<int>(components(g).size());
    const int after = static_cast<int>(components(g.without_vertex(*found)).size());
    if (after - (before - 1) > g.degree(*found) - 2)
        throw InternalError("dense-block vertex violates the component inequality");
    return found;
}

namespace {

// One feasible outcome of the cycle-path DP: total value plus the chosen
// subtree state for each non-anchor cycle vertex.
struct RunResult {
    int value = NEG;
    std::vector<int> sub;
};

// Path DP along the non-anchor vertices w_1..w_p of a cycle block.
// States track whether w_i is in D and its current degree inside D.
// v_in: the anchor is in D (its edges to w_1/w_p are live);
// b1/b2: w_1 / w_p is in D and pairs with the anchor through that edge.
RunResult cycle_run(const std::vector<std::array<int, 3>>& dpw, bool v_in, bool b1, bool b2) {
    const int p = static_cast<int>(dpw.size());
    enum { S_OUT = 0, S_D0 = 1, S_D1 = 2 };
    std::vector<std::array<int, 3>> val(p);
    std::vector<std::array<int, 3>> bp_prev(p), bp_sub(p);
    for (auto& a : val)
        a = {NEG, NEG, NEG};

    if (v_in) {
        if (b1) {
            val[0][S_D1] = dpw[0][IN_FREE];
            bp_sub[0][S_D1] = IN_FREE;
        } else {
            val[0][S_OUT] = dpw[0][OUT];
            bp_sub[0][S_OUT] = OUT;
        }
    } else {
        val[0][S_OUT] = dpw[0][OUT];
        bp_sub[0][S_OUT] = OUT;
        val[0][S_D0] = dpw[0][IN_FREE];
        bp_sub[0][S_D0] = IN_FREE;
        val[0][S_D1] = dpw[0][IN_MATCHED];
        bp_sub[0][S_D1] = IN_MATCHED;
    }

    for (int i = 1; i < p; ++i) {
        // w_i out of D: any predecessor state.
        int best_prev = S_OUT;
        for (int s : {S_D0, S_D1})
            if (val[i - 1][s] > val[i - 1][best_prev])
                best_prev = s;
        if (val[i - 1][best_prev] > NEG / 2) {
            val[i][S_OUT] = val[i - 1][best_prev] + dpw[i][OUT];
            bp_prev[i][S_OUT] = best_prev;
            bp_sub[i][S_OUT] = OUT;
        }
        // w_i in D, degree 0: predecessor out, subtree unmatched.
        if (val[i - 1][S_OUT] > NEG / 2) {
            val[i][S_D0] = val[i - 1][S_OUT] + dpw[i][IN_FREE];
            bp_prev[i][S_D0] = S_OUT;
            bp_sub[i][S_D0] = IN_FREE;
        }
        // w_i in D, degree 1: matched in its subtree, or paired with w_{i-1}.
        int a = (val[i - 1][S_OUT] > NEG / 2 && dpw[i][IN_MATCHED] > NEG / 2)
                    ? val[i - 1][S_OUT] + dpw[i][IN_MATCHED]
                    : NEG;
        int b = (val[i - 1][S_D0] > NEG / 2) ? val[i - 1][S_D0] + dpw[i][IN_FREE] : NEG;
        if (a >= b && a > NEG / 2) {
            val[i][S_D1] = a;
            bp_prev[i][S_D1] = S_OUT;
            bp_sub[i][S_D1] = IN_MATCHED;
        } else if (b > NEG / 2) {
            val[i][S_D1] = b;
            bp_prev[i][S_D1] = S_D0;
            bp_sub[i][S_D1] = IN_FREE;
        }
    }

    int final_state;
    if (v_in) {
        final_state = b2 ? S_D0 : S_OUT;
    } else {
        final_state = S_OUT;
        for (int s : {S_D0, S_D1})
            if (val[p - 1][s] > val[p - 1][final_state])
                final_state = s;
    }
    if (val[p - 1][final_state] <= NEG / 2)
        return {};

    RunResult out;
    out.value = val[p - 1][final_state];
    out.sub.assign(p, OUT);
    int cur = final_state;
    for (int i = p - 1; i >= 0; --i) {
        out.sub[i] = bp_sub[i][cur];
        if (i > 0)
            cur = bp_prev[i][cur];
    }
    return out;
}

struct BlockRec {
    int prev_state = OUT;
    std::vector<std::pair<Vertex, int>> assigned; // child vertex -> its dp state
};

// Cycle order of a block starting at `anchor`, deterministic direction
// (smaller neighbor of the anchor first).
std::vector<Vertex> cycle_order_from(const BlockDecomposition::Block& blk, Vertex anchor) {
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
    std::vector<Vertex> order{anchor};
    Vertex prev = anchor, cur = nbrs(anchor).front();
    while (cur != anchor) {
        order.push_back(cur);
        auto nb = nbrs(cur);
        Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

DissociationCertificate cactus_exact(const Graph& g) {
    BlockDecomposition bd = block_decomposition(g);
    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
        if (bd.blocks[b].vertices.size() == 1)
            continue;
        if (!bd.block_is_k2(b) && !bd.block_is_cycle(b))
            throw InvalidInputError("cactus_exact: block is neither a K2 nor a cycle");
    }

    const int n = g.order();
    std::vector<std::vector<int>> child_blocks(n);
    std::vector<Vertex> order; // BFS over the block forest, roots first
    std::vector<char> seen(n, 0);
    std::vector<char> claimed(bd.blocks.size(), 0);
    std::vector<Vertex> roots;
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r])
            continue;
        roots.push_back(r);
        seen[r] = 1;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            Vertex v = order[head++];
            for (int b : bd.blocks_of_vertex[v]) {
                if (claimed[b] || bd.blocks[b].vertices.size() == 1)
                    continue;
                claimed[b] = 1;
                child_blocks[v].push_back(b);
                for (Vertex w : bd.blocks[b].vertices) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
                }
            }
        }
    }

    std::vector<std::array<int, 3>> dp(n);
    std::vector<std::vector<std::array<BlockRec, 3>>> recs(n);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        std::array<int, 3> agg = {0, 1, NEG};
        recs[v].resize(child_blocks[v].size());
        for (std::size_t t = 0; t < child_blocks[v].size(); ++t) {
            int b = child_blocks[v][t];
            std::array<int, 3> next = {NEG, NEG, NEG};
            auto& rec = recs[v][t];
            if (bd.block_is_k2(b)) {
                Vertex c = bd.blocks[b].vertices[0] == v ? bd.blocks[b].vertices[1]
                                                        : bd.blocks[b].vertices[0];
                int best_state = OUT;
                for (int s : {IN_FREE, IN_MATCHED})
                    if (dp[c][s] > dp[c][best_state])
                        best_state = s;
                next[OUT] = agg[OUT] + dp[c][best_state];
                rec[OUT] = {OUT, {{c, best_state}}};
                next[IN_FREE] = agg[IN_FREE] + dp[c][OUT];
                rec[IN_FREE] = {IN_FREE, {{c, OUT}}};
                int via_out = agg[IN_MATCHED] > NEG / 2 ? agg[IN_MATCHED] + dp[c][OUT] : NEG;
                int via_pair = agg[IN_FREE] + dp[c][IN_FREE];
                if (via_out >= via_pair) {
                    next[IN_MATCHED] = via_out;
                    rec[IN_MATCHED] = {IN_MATCHED, {{c, OUT}}};
                } else {
                    next[IN_MATCHED] = via_pair;
                    rec[IN_MATCHED] = {IN_FREE, {{c, IN_FREE}}};
                }
            } else {
                std::vector<Vertex> cyc = cycle_order_from(bd.blocks[b], v);
                const int p = static_cast<int>(cyc.size()) - 1;
                std::vector<std::array<int, 3>> dpw(p);
                for (int i = 0; i < p; ++i)
                    dpw[i] = dp[cyc[i + 1]];
                auto assigned_of = [&](const RunResult& r) {
                    std::vector<std::pair<Vertex, int>> a;
                    for (int i = 0; i < p; ++i)
                        a.emplace_back(cyc[i + 1], r.sub[i]);
                    return a;
                };
                RunResult r_out = cycle_run(dpw, false, false, false);
                RunResult r00 = cycle_run(dpw, true, false, false);
                RunResult r10 = cycle_run(dpw, true, true, false);
                RunResult r01 = cycle_run(dpw, true, false, true);

                next[OUT] = agg[OUT] + r_out.value;
                rec[OUT] = {OUT, assigned_of(r_out)};
                if (r00.value > NEG / 2) {
                    next[IN_FREE] = agg[IN_FREE] + r00.value;
                    rec[IN_FREE] = {IN_FREE, assigned_of(r00)};
                }
                const RunResult& r_pair = (r10.value >= r01.value) ? r10 : r01;
                int via_self = (agg[IN_MATCHED] > NEG / 2 && r00.value > NEG / 2)
                                   ? agg[IN_MATCHED] + r00.value
                                   : NEG;
                int via_cycle = (r_pair.value > NEG / 2) ? agg[IN_FREE] + r_pair.value : NEG;
                if (via_self >= via_cycle && via_self > NEG / 2) {
                    next[IN_MATCHED] = via_self;
                    rec[IN_MATCHED] = {IN_MATCHED, assigned_of(r00)};
                } else if (via_cycle > NEG / 2) {
                    next[IN_MATCHED] = via_cycle;
                    rec[IN_MATCHED] = {IN_FREE, assigned_of(r_pair)};
                }
            }
            agg = next;
        }
        dp[v] = agg;
    }

    DissociationCertificate cert;
    std::vector<std::pair<Vertex, int>> stack;
    for (Vertex r : roots) {
        int s = OUT;
        for (int cand : {IN_FREE, IN_MATCHED})
            if (dp[r][cand] > dp[r][s])
                s = cand;
        stack.emplace_back(r, s);
    }
    while (!stack.empty()) {
        auto [v, s] = stack.back();
        stack.pop_back();
        if (s != OUT)
            cert.vertices.push_back(v);
        int cur = s;
        for (int t = static_cast<int>(child_blocks[v].size()) - 1; t >= 0; --t) {
            const BlockRec& rec = recs[v][t][cur];
            for (const auto& [w, ws] : rec.assigned)
                stack.emplace_back(w, ws);
            cur = rec.prev_state;
        }
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = static_cast<int>(cert.vertices.size());
    cert.optimal = true;
    if (!is_dissociation_set(g, cert.vertices))
        throw InternalError("cactus DP produced an invalid certificate");
    int expected = 0;
    for (Vertex r : roots)
        expected += std::max({dp[r][OUT], dp[r][IN_FREE], dp[r][IN_MATCHED]});
    if (cert.size != expected)
        throw InternalError("cactus DP witness size mismatch");
    return cert;
}

DissociationCertificate certify_bound_set(const Graph& g) {
    std::vector<Vertex> alive(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        alive[v] = v;
    for (;;) {
        std::vector<Vertex> ids;
        Graph h = g.induced(alive, &ids);
        auto u = find_dense_block_vertex(h);
        if (!u)
            break;
        alive.erase(std::find(alive.begin(), alive.end(), ids[*u]));
    }
    std::vector<Vertex> ids;
    Graph h = g.induced(alive, &ids);
    DissociationCertificate inner = cactus_exact(h);
    DissociationCertificate cert;
    for (Vertex v : inner.vertices)
        cert.vertices.push_back(ids[v]);
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.size = static_cast<int>(cert.vertices.size());
    cert.optimal = false;
    if (!is_dissociation_set(g, cert.vertices))
        throw InternalError("certify_bound_set produced an invalid certificate");
    return cert;
}

} // namespace diss
