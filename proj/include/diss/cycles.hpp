#pragma once

#include <cstddef>
#include <vector>

#include "diss/graph.hpp"

namespace diss {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;
inline constexpr std::size_t kDefaultPackingLimit = 2'000;

// Chordless cycles in canonical rotation: minimum id first, then the smaller
// of its two cycle neighbors. `truncated` is set when the cap was hit, in
// which case `cycles` is incomplete and consumers must fail, not under-count.
struct InducedCycleSet {
    std::vector<std::vector<Vertex>> cycles;
    bool truncated = false;
};

// True iff every block is a K2 or a cycle and no vertex lies in two cycle
// blocks; components of such graphs are cacti with pairwise disjoint cycles.
bool is_cycle_disjoint(const Graph& g);

// All chordless cycles (fast path: on cycle-disjoint graphs these are exactly
// the cycle blocks). Cycles are sorted lexicographically.
InducedCycleSet enumerate_induced_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Same result by canonical-extension DFS regardless of structure; the fast
// path is cross-checked against this in tests.
InducedCycleSet enumerate_induced_cycles_general(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Number of chordless cycles of length 1 mod 3. Throws CycleCapExceededError
// when enumeration truncates.
int c1_count(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Maximum number of pairwise vertex-disjoint chordless cycles of length
// 1 mod 3 (exact, branch and bound on the conflict graph). Throws
// SearchLimitExceededError when more than `limit` such cycles exist.
int max_disjoint_c1_packing(const Graph& g, std::size_t cap = kDefaultCycleCap,
                            std::size_t limit = kDefaultPackingLimit);

} // namespace diss
