#include "diss/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_set>

#include "json.hpp"

#include "diss/blocks.hpp"
#include "diss/cycles.hpp"
#include "diss/errors.hpp"

namespace diss {

void SpikedCycleSpec::validate() const {
    const int k = static_cast<int>(spikes.size());
    if (ell < 3 || ell < k)
        throw InvalidInputError("spiked cycle requires ell >= max(3, k)");
    if (k < 1)
        throw InvalidInputError("spiked cycle requires at least one spike");
    for (int j = 0; j < k; ++j) {
        if (spikes[j] < 1 || spikes[j] > ell)
            throw InvalidInputError("spike position out of range");
        if (j > 0 && spikes[j] <= spikes[j - 1])
            throw InvalidInputError("spike positions must be strictly increasing");
    }
}

Graph build_spiked_cycle(const SpikedCycleSpec& spec) {
    spec.validate();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < spec.ell; ++i)
        edges.emplace_back(i, (i + 1) % spec.ell);
    for (int j = 0; j < static_cast<int>(spec.spikes.size()); ++j)
        edges.emplace_back(spec.spikes[j] - 1, spec.ell + j);
    return Graph::from_edges(spec.order(), edges);
}

bool is_good(const SpikedCycleSpec& spec) {
    spec.validate();
    const int k = static_cast<int>(spec.spikes.size());
    if (k == 1)
        return spec.ell % 3 == 1;
    // Cyclic gaps between consecutive spikes: exactly one of length 1 mod 3,
    // all others 2 mod 3. The property is rotation-invariant, so the 1-gap
    // need not be the wrap-around one.
    int ones = 0, twos = 0;
    for (int j = 0; j < k; ++j) {
        int gap = j + 1 < k ? spec.spikes[j + 1] - spec.spikes[j]
                            : spec.ell + spec.spikes.front() - spec.spikes.back();
        if (gap % 3 == 1)
            ++ones;
        else if (gap % 3 == 2)
            ++twos;
    }
    return ones == 1 && twos == k - 1;
}

bool is_very_good(const SpikedCycleSpec& spec) {
    return is_good(spec) && spec.ell % 3 != 1;
}

bool is_extremal_tree(const Graph& t) {
    if (!is_tree(t))
        throw InvalidInputError("is_extremal_tree requires a tree");
    const int n = t.order();
    if (n % 3 != 0)
        return false;
    // Rooted subtree sizes; T-y components are the child subtrees plus the
    // part above y.
    std::vector<Vertex> order{0}, parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex u = order[head];
        for (Vertex v : t.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                order.push_back(v);
            }
        }
    }
    std::vector<int> sz(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0)
            sz[parent[*it]] += sz[*it];
    for (Vertex y = 0; y < n; ++y) {
        int bad = 0;
        for (Vertex c : t.neighbors(y))
            if (parent[c] == y && sz[c] % 3 != 0)
                ++bad;
        if (y != 0 && (n - sz[y]) % 3 != 0)
            ++bad;
        if (bad > 2)
            return false;
    }
    return true;
}

Graph apply_operation(const Graph& g, const ConstructionStep& step) {
    const int n = g.order();
    if (step.attach < 0 || step.attach >= n)
        throw InvalidInputError("attachment vertex out of range");
    auto edges = g.edges();
    using Op = ConstructionStep::Op;
    switch (step.op) {
    case Op::O1:
        edges.emplace_back(n, n + 1);
        edges.emplace_back(n + 1, n + 2);
        edges.emplace_back(n + 2, step.attach);
        return Graph::from_edges(n + 3, edges);
    case Op::O2:
        edges.emplace_back(n, n + 1);
        edges.emplace_back(n, n + 2);
        edges.emplace_back(n, step.attach);
        return Graph::from_edges(n + 3, edges);
    case Op::O3: {
        if (step.ell < 3 || step.ell % 3 == 0)
            throw InvalidInputError("O3 requires a cycle length >= 3 and not 0 mod 3");
        for (int i = 0; i < step.ell; ++i)
            edges.emplace_back(n + i, n + (i + 1) % step.ell);
        edges.emplace_back(n, step.attach);
        return Graph::from_edges(n + step.ell, edges);
    }
    case Op::O4: {
        if (!is_very_good(step.spec))
            throw InvalidInputError("O4 requires a very good spiked cycle");
        if (step.piece_attach < 0 || step.piece_attach >= step.spec.order())
            throw InvalidInputError("O4 piece attachment out of range");
        Graph piece = build_spiked_cycle(step.spec);
        for (const auto& [u, v] : piece.edges())
            edges.emplace_back(n + u, n + v);
        edges.emplace_back(n + step.piece_attach, step.attach);
        return Graph::from_edges(n + piece.order(), edges);
    }
    }
    throw InvalidInputError("unknown operation");
}

namespace {

Graph base_graph(const BaseSpec& base) {
    switch (base.kind) {
    case BaseSpec::Kind::P3:
        return Graph::from_edges(3, {{0, 1}, {1, 2}});
    case BaseSpec::Kind::Cycle: {
        if (base.ell < 3 || base.ell % 3 == 0)
            throw InvalidInputError("base cycle length must be >= 3 and not 0 mod 3");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < base.ell; ++i)
            edges.emplace_back(i, (i + 1) % base.ell);
        return Graph::from_edges(base.ell, edges);
    }
    case BaseSpec::Kind::SpikedCycle:
        if (!is_very_good(base.spec))
            throw InvalidInputError("base spiked cycle must be very good");
        return build_spiked_cycle(base.spec);
    }
    throw InvalidInputError("unknown base kind");
}

} // namespace

Graph generate_member(const ConstructionTrace& trace) {
    Graph g = base_graph(trace.base);
    for (const auto& step : trace.steps)
        g = apply_operation(g, step);
    if (!is_connected(g) || !is_cycle_disjoint(g))
        throw InternalError("trace replay left the extremal family");
    return g;
}

namespace {

// Random very good spiked cycle with order <= budget (needs budget >= 5):
// k-1 gaps of 2 mod 3 plus a wrap gap of 1 mod 3, k not 1 mod 3.
SpikedCycleSpec random_very_good_spec(int budget, std::mt19937_64& rng) {
    std::vector<int> ks;
    for (int k = 2; 3 * k - 1 <= budget; ++k)
        if (k % 3 != 1)
            ks.push_back(k);
    if (ks.empty())
        throw InvalidInputError("budget too small for a very good spiked cycle");
    int k = ks[rng() % ks.size()];
    std::vector<int> gaps(k, 2);
    gaps.back() = 1; // wrap gap
    int slack = (budget - (3 * k - 1)) / 3;
    int extra = slack > 0 ? static_cast<int>(rng() % (slack + 1)) : 0;
    for (int i = 0; i < extra; ++i)
        gaps[rng() % k] += 3;
    const int ell = std::accumulate(gaps.begin(), gaps.end(), 0);
    SpikedCycleSpec spec;
    spec.ell = ell;
    int offset = static_cast<int>(rng() % gaps.back()); // rotate within the wrap gap
    int pos = 1 + offset;
    for (int j = 0; j < k; ++j) {
        spec.spikes.push_back(pos);
        pos += gaps[j];
    }
    if (!is_very_good(spec))
        throw InternalError("random spiked-cycle sampler produced a bad spec");
    return spec;
}

int random_cycle_length(int budget, std::mt19937_64& rng) {
    std::vector<int> ls;
    for (int l = 4; l <= budget; ++l)
        if (l % 3 != 0)
            ls.push_back(l);
    return ls[rng() % ls.size()];
}

} // namespace

std::pair<Graph, ConstructionTrace> random_member(Family family, int size_budget,
                                                  std::uint64_t seed) {
    if (size_budget < 3)
        throw InvalidInputError("size budget must be at least 3");
    std::mt19937_64 rng(seed);
    ConstructionTrace trace;
    using Op = ConstructionStep::Op;

    if (family == Family::T) {
        trace.base.kind = BaseSpec::Kind::P3;
    } else {
        std::vector<int> kinds{0}; // P3
        if (size_budget >= 4)
            kinds.push_back(1);
        if (size_budget >= 5)
            kinds.push_back(2);
        switch (kinds[rng() % kinds.size()]) {
        case 0:
            trace.base.kind = BaseSpec::Kind::P3;
            break;
        case 1:
            trace.base.kind = BaseSpec::Kind::Cycle;
            trace.base.ell = random_cycle_length(size_budget, rng);
            break;
        case 2:
            trace.base.kind = BaseSpec::Kind::SpikedCycle;
            trace.base.spec = random_very_good_spec(size_budget, rng);
            break;
        }
    }

    Graph g = base_graph(trace.base);
    while (size_budget - g.order() >= 3) {
        const int rem = size_budget - g.order();
        ConstructionStep step;
        std::vector<Op> ops{Op::O1, Op::O2};
        if (family == Family::C) {
            if (rem >= 4)
                ops.push_back(Op::O3);
            if (rem >= 5)
                ops.push_back(Op::O4);
        }
        step.op = ops[rng() % ops.size()];
        step.attach = static_cast<Vertex>(rng() % g.order());
        if (step.op == Op::O3)
            step.ell = random_cycle_length(rem, rng);
        if (step.op == Op::O4) {
            step.spec = random_very_good_spec(rem, rng);
            step.piece_attach = static_cast<int>(rng() % step.spec.order());
        }
        g = apply_operation(g, step);
        trace.steps.push_back(std::move(step));
    }
    return {std::move(g), std::move(trace)};
}

namespace {

// Walks a cycle block in order; deterministic start/direction.
std::vector<Vertex> block_cycle_order(const BlockDecomposition::Block& blk) {
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
    std::vector<Vertex> order{blk.vertices.front()};
    Vertex prev = order[0], cur = nbrs(order[0]).front();
    while (cur != order[0]) {
        order.push_back(cur);
        auto nb = nbrs(cur);
        Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

std::optional<RecognizedSpikedCycle> recognize_spiked_cycle(const Graph& g) {
    if (g.order() < 4 || !is_connected(g))
        return std::nullopt;
    BlockDecomposition bd = block_decomposition(g);
    int cycle_block = -1;
    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b) {
        if (bd.block_is_cycle(b)) {
            if (cycle_block >= 0)
                return std::nullopt;
            cycle_block = b;
        } else if (bd.blocks[b].vertices.size() > 2) {
            return std::nullopt;
        }
    }
    if (cycle_block < 0)
        return std::nullopt;
    const auto& cyc_vertices = bd.blocks[cycle_block].vertices;
    std::vector<char> on_cycle(g.order(), 0);
    for (Vertex v : cyc_vertices)
        on_cycle[v] = 1;
    std::vector<Vertex> spike_of(g.order(), -1); // cycle vertex -> its leaf
    int k = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (on_cycle[v])
            continue;
        if (g.degree(v) != 1)
            return std::nullopt;
        Vertex u = g.neighbors(v)[0];
        if (!on_cycle[u] || spike_of[u] >= 0)
            return std::nullopt;
        spike_of[u] = v;
        ++k;
    }
    if (k < 1)
        return std::nullopt;

    const int ell = static_cast<int>(cyc_vertices.size());
    std::vector<Vertex> base = block_cycle_order(bd.blocks[cycle_block]);

    auto spec_for = [&](int rot, int dir) {
        std::vector<Vertex> order(ell);
        for (int i = 0; i < ell; ++i)
            order[i] = base[((rot + dir * i) % ell + ell) % ell];
        SpikedCycleSpec spec;
        spec.ell = ell;
        std::vector<Vertex> layout = order;
        for (int i = 0; i < ell; ++i) {
            if (spike_of[order[i]] >= 0)
                spec.spikes.push_back(i + 1);
        }
        for (int p : spec.spikes)
            layout.push_back(spike_of[order[p - 1]]);
        return RecognizedSpikedCycle{std::move(spec), std::move(layout)};
    };

    // Prefer a rotation/direction under which the positional goodness
    // predicate holds; fall back to the identity labeling.
    for (int dir : {1, -1})
        for (int rot = 0; rot < ell; ++rot) {
            auto cand = spec_for(rot, dir);
            if (is_good(cand.spec))
                return cand;
        }
    return spec_for(0, 1);
}

namespace {

using Mask = std::uint64_t;

struct PeelContext {
    const Graph* g = nullptr;
    std::vector<Mask> nbr;
    std::unordered_set<Mask> failed;
};

struct MemberResult {
    ConstructionTrace trace;
    std::vector<Vertex> replay_id; // g vertex -> id in the replayed graph
};

std::vector<Vertex> mask_vertices(Mask mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::optional<MemberResult> member_rec(PeelContext& ctx, Mask mask);

// Attempts to peel the `piece` component off across bridge (a, b) with
// b inside the piece; on success appends the step and extends the mapping.
std::optional<MemberResult> try_peel(PeelContext& ctx, Mask rest, Mask piece, Vertex a, Vertex b) {
    std::vector<Vertex> piece_ids;
    Graph ph = ctx.g->induced(mask_vertices(piece), &piece_ids);
    auto local = [&](Vertex gv) {
        return static_cast<Vertex>(std::lower_bound(piece_ids.begin(), piece_ids.end(), gv) -
                                   piece_ids.begin());
    };
    const Vertex bl = local(b);
    const int pn = ph.order();

    ConstructionStep step;
    std::vector<std::pair<Vertex, int>> piece_layout; // g vertex -> offset within piece ids
    using Op = ConstructionStep::Op;

    if (pn == 3 && ph.size() == 2) {
        Vertex center = -1;
        for (Vertex v = 0; v < 3; ++v)
            if (ph.degree(v) == 2)
                center = v;
        if (ph.degree(bl) == 1) {
            step.op = Op::O1;
            Vertex far = 3 - bl - center;
            piece_layout = {{piece_ids[far], 0}, {piece_ids[center], 1}, {piece_ids[bl], 2}};
        } else {
            step.op = Op::O2;
            std::vector<Vertex> leaves;
            for (Vertex v = 0; v < 3; ++v)
                if (v != center)
                    leaves.push_back(v);
            piece_layout = {{piece_ids[center], 0},
                            {piece_ids[leaves[0]], 1},
                            {piece_ids[leaves[1]], 2}};
        }
    } else if (ph.size() == pn && ph.max_degree() == 2 && pn >= 3) {
        if (pn % 3 == 0)
            return std::nullopt;
        step.op = Op::O3;
        step.ell = pn;
        // Cycle order starting at b, smaller neighbor first.
        Vertex prev = bl, cur = std::min(ph.neighbors(bl)[0], ph.neighbors(bl)[1]);
        piece_layout.emplace_back(piece_ids[bl], 0);
        int idx = 1;
        while (cur != bl) {
            piece_layout.emplace_back(piece_ids[cur], idx++);
            auto nb = ph.neighbors(cur);
            Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
    } else {
        auto rec = recognize_spiked_cycle(ph);
        if (!rec || !is_very_good(rec->spec))
            return std::nullopt;
        step.op = Op::O4;
        step.spec = rec->spec;
        for (int i = 0; i < pn; ++i) {
            piece_layout.emplace_back(piece_ids[rec->layout[i]], i);
            if (rec->layout[i] == bl)
                step.piece_attach = i;
        }
    }

    auto rest_result = member_rec(ctx, rest);
    if (!rest_result)
        return std::nullopt;
    const int n0 = std::popcount(rest);
    step.attach = rest_result->replay_id[a];
    rest_result->trace.steps.push_back(std::move(step));
    for (const auto& [gv, off] : piece_layout)
        rest_result->replay_id[gv] = n0 + off;
    return rest_result;
}

std::optional<MemberResult> member_rec(PeelContext& ctx, Mask mask) {
    if (ctx.failed.count(mask))
        return std::nullopt;
    std::vector<Vertex> ids;
    Graph h = ctx.g->induced(mask_vertices(mask), &ids);
    const int n = h.order();

    // Base elements of the family.
    if (n == 3 && h.size() == 2) {
        MemberResult res;
        res.trace.base.kind = BaseSpec::Kind::P3;
        res.replay_id.assign(ctx.g->order(), -1);
        Vertex center = -1;
        for (Vertex v = 0; v < 3; ++v)
            if (h.degree(v) == 2)
                center = v;
        int idx = 0;
        for (Vertex v = 0; v < 3; ++v)
            if (v != center)
                res.replay_id[ids[v]] = (idx++ == 0) ? 0 : 2;
        res.replay_id[ids[center]] = 1;
        return res;
    }
    if (n >= 3 && h.size() == n && h.max_degree() == 2 && is_connected(h)) {
        if (n % 3 == 0) {
            ctx.failed.insert(mask);
            return std::nullopt;
        }
        MemberResult res;
        res.trace.base.kind = BaseSpec::Kind::Cycle;
        res.trace.base.ell = n;
        res.replay_id.assign(ctx.g->order(), -1);
        Vertex prev = 0, cur = h.neighbors(0)[0];
        res.replay_id[ids[0]] = 0;
        int idx = 1;
        while (cur != 0) {
            res.replay_id[ids[cur]] = idx++;
            auto nb = h.neighbors(cur);
            Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        return res;
    }
    if (auto rec = recognize_spiked_cycle(h); rec && is_very_good(rec->spec)) {
        MemberResult res;
        res.trace.base.kind = BaseSpec::Kind::SpikedCycle;
        res.trace.base.spec = rec->spec;
        res.replay_id.assign(ctx.g->order(), -1);
        for (int i = 0; i < n; ++i)
            res.replay_id[ids[rec->layout[i]]] = i;
        return res;
    }

    // Peel a base-like piece off across a bridge, trying both orientations.
    BlockDecomposition bd = block_decomposition(h);
    for (const auto& blk : bd.blocks) {
        if (blk.vertices.size() != 2)
            continue;
        Vertex u = ids[blk.vertices[0]], v = ids[blk.vertices[1]];
        // Remove the bridge by splitting into the two components it joins.
        Mask side_u;
        {
            // Flood fill on g restricted to mask, forbidding the edge (u,v).
            Mask comp = Mask{1} << u;
            Mask frontier = comp;
            while (frontier) {
                Mask next = 0;
                Mask f = frontier;
                while (f) {
                    int w = std::countr_zero(f);
                    f &= f - 1;
                    Mask step_nbrs = ctx.nbr[w] & mask & ~comp;
                    if (w == u)
                        step_nbrs &= ~(Mask{1} << v);
                    if (w == v)
                        step_nbrs &= ~(Mask{1} << u);
                    next |= step_nbrs;
                }
                comp |= next;
                frontier = next;
            }
            side_u = comp;
        }
        Mask side_v = mask & ~side_u;
        if (auto res = try_peel(ctx, side_u, side_v, u, v))
            return res;
        if (auto res = try_peel(ctx, side_v, side_u, v, u))
            return res;
    }
    ctx.failed.insert(mask);
    return std::nullopt;
}

} // namespace

std::optional<ConstructionTrace> membership_in_C(const Graph& g) {
    if (!is_connected(g))
        throw InvalidInputError("membership_in_C requires a connected graph");
    if (!is_cycle_disjoint(g))
        throw InvalidInputError("membership_in_C requires a cycle-disjoint graph");
    if (g.order() > 64)
        throw InvalidInputError("membership_in_C requires n <= 64");
    PeelContext ctx;
    ctx.g = &g;
    ctx.nbr = adjacency_masks(g);
    Mask all = (g.order() == 64) ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
    auto res = member_rec(ctx, all);
    if (!res)
        return std::nullopt;
    return res->trace;
}

bool has_avoiding_maximum_set(const Graph& g, Vertex u, const SolverLimits& limits) {
    return diss_exact_avoiding(g, u, limits).size == diss_exact(g, limits).size;
}

namespace {

nlohmann::json spec_to_json(const SpikedCycleSpec& spec) {
    return {{"ell", spec.ell}, {"spikes", spec.spikes}};
}

SpikedCycleSpec spec_from_json(const nlohmann::json& j) {
    SpikedCycleSpec spec;
    spec.ell = j.at("ell").get<int>();
    spec.spikes = j.at("spikes").get<std::vector<int>>();
    return spec;
}

} // namespace

nlohmann::json trace_to_json(const ConstructionTrace& trace) {
    nlohmann::json base;
    switch (trace.base.kind) {
    case BaseSpec::Kind::P3:
        base = {{"kind", "P3"}};
        break;
    case BaseSpec::Kind::Cycle:
        base = {{"kind", "cycle"}, {"ell", trace.base.ell}};
        break;
    case BaseSpec::Kind::SpikedCycle:
        base = {{"kind", "spiked_cycle"}, {"spec", spec_to_json(trace.base.spec)}};
        break;
    }
    nlohmann::json steps = nlohmann::json::array();
    using Op = ConstructionStep::Op;
    for (const auto& s : trace.steps) {
        nlohmann::json js{{"attach", s.attach}};
        switch (s.op) {
        case Op::O1:
            js["op"] = "O1";
            break;
        case Op::O2:
            js["op"] = "O2";
            break;
        case Op::O3:
            js["op"] = "O3";
            js["ell"] = s.ell;
            break;
        case Op::O4:
            js["op"] = "O4";
            js["spec"] = spec_to_json(s.spec);
            js["piece_attach"] = s.piece_attach;
            break;
        }
        steps.push_back(std::move(js));
    }
    return {{"base", std::move(base)}, {"steps", std::move(steps)}};
}

ConstructionTrace trace_from_json(const nlohmann::json& j) {
    ConstructionTrace trace;
    const auto& base = j.at("base");
    const std::string kind = base.at("kind").get<std::string>();
    if (kind == "P3") {
        trace.base.kind = BaseSpec::Kind::P3;
    } else if (kind == "cycle") {
        trace.base.kind = BaseSpec::Kind::Cycle;
        trace.base.ell = base.at("ell").get<int>();
    } else if (kind == "spiked_cycle") {
        trace.base.kind = BaseSpec::Kind::SpikedCycle;
        trace.base.spec = spec_from_json(base.at("spec"));
    } else {
        throw ParseError("unknown trace base kind: " + kind);
    }
    using Op = ConstructionStep::Op;
    for (const auto& js : j.at("steps")) {
        ConstructionStep s;
        s.attach = js.at("attach").get<int>();
        const std::string op = js.at("op").get<std::string>();
        if (op == "O1") {
            s.op = Op::O1;
        } else if (op == "O2") {
            s.op = Op::O2;
        } else if (op == "O3") {
            s.op = Op::O3;
            s.ell = js.at("ell").get<int>();
        } else if (op == "O4") {
            s.op = Op::O4;
            s.spec = spec_from_json(js.at("spec"));
            s.piece_attach = js.at("piece_attach").get<int>();
        } else {
            throw ParseError("unknown trace operation: " + op);
        }
        trace.steps.push_back(std::move(s));
    }
    return trace;
}

} // namespace diss
