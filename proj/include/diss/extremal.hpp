#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "diss/graph.hpp"
#include "diss/solver.hpp"

namespace diss {

// Spiked cycle: cycle of length ell with pendant leaves at the 1-based
// positions in `spikes` (strictly increasing, at most one per position).
struct SpikedCycleSpec {
    int ell = 0;
    std::vector<int> spikes;

    int order() const { return ell + static_cast<int>(spikes.size()); }
    void validate() const; // throws InvalidInputError
};

// Cycle vertices are 0..ell-1 (position i at vertex i-1); the j-th spike leaf
// is vertex ell+j.
Graph build_spiked_cycle(const SpikedCycleSpec& spec);

// k=1 with ell = 1 mod 3, or k>=2 with exactly one of the k cyclic spike
// gaps = 1 mod 3 and all others = 2 mod 3 (rotation-invariant).
bool is_good(const SpikedCycleSpec& spec);

// Good with ell != 1 mod 3 (forces k >= 2).
bool is_very_good(const SpikedCycleSpec& spec);

// Extremal trees: n = 0 mod 3 and for every vertex y at most two components
// of T-y have order not 0 mod 3. Equivalent to diss(T) = 2n/3.
bool is_extremal_tree(const Graph& t);

// One construction step; each attaches a new piece to vertex `attach` of the
// current graph by a single bridge.
//   O1: path u-v-w (ids n,n+1,n+2), bridge w-attach
//   O2: center v (id n) with leaves u,u' (n+1,n+2), bridge v-attach
//   O3: cycle of length ell != 0 mod 3 (ids n..n+ell-1, cycle order),
//       bridge n-attach
//   O4: very good spiked cycle (ids n+i per build_spiked_cycle layout),
//       bridge (n+piece_attach)-attach
struct ConstructionStep {
    enum class Op { O1, O2, O3, O4 };
    Op op = Op::O1;
    Vertex attach = 0;
    int ell = 0;             // O3 only
    SpikedCycleSpec spec;    // O4 only
    int piece_attach = 0;    // O4 only: index within the spiked-cycle layout
};

struct BaseSpec {
    enum class Kind { P3, Cycle, SpikedCycle };
    Kind kind = Kind::P3;
    int ell = 0;             // Cycle only
    SpikedCycleSpec spec;    // SpikedCycle only
};

struct ConstructionTrace {
    BaseSpec base;
    std::vector<ConstructionStep> steps;
};

Graph apply_operation(const Graph& g, const ConstructionStep& step);

// Replays base then steps; validates every invariant along the way.
Graph generate_member(const ConstructionTrace& trace);

enum class Family { T, C };

// Random base plus random valid steps while the next piece fits in
// size_budget. Family T: base P3, steps O1/O2 only. Deterministic per seed.
std::pair<Graph, ConstructionTrace> random_member(Family family, int size_budget,
                                                  std::uint64_t seed);

// Spiked-cycle recognition: exactly one cycle block, every off-cycle vertex a
// leaf on a distinct cycle vertex. Returns the spec (rotation normalized so a
// good labeling is used when one exists) and layout[i] = graph vertex of
// build_spiked_cycle id i.
struct RecognizedSpikedCycle {
    SpikedCycleSpec spec;
    std::vector<Vertex> layout;
};
std::optional<RecognizedSpikedCycle> recognize_spiked_cycle(const Graph& g);

// Inverse peeling with backtracking (Theorem-3-style recognition of the
// extremal cycle-disjoint family). Requires g connected and cycle-disjoint;
// returns a trace whose replay is isomorphic to g, or nothing.
std::optional<ConstructionTrace> membership_in_C(const Graph& g);

// True iff some maximum dissociation set of g avoids u.
bool has_avoiding_maximum_set(const Graph& g, Vertex u, const SolverLimits& limits = {});

nlohmann::json trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const nlohmann::json& j);

} // namespace diss
