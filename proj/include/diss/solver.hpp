#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diss/errors.hpp"
#include "diss/graph.hpp"

namespace diss {

struct SolverLimits {
    long long node_limit = 200'000'000;
    long long time_limit_ms = 120'000;
};

struct DissociationCertificate {
    std::vector<Vertex> vertices; // sorted ascending
    int size = 0;
    bool optimal = false;
    std::optional<Vertex> avoided;
};

// Search budget ran out; carries the best dissociation set found so far.
struct BudgetExceededError : Error {
    BudgetExceededError(std::string msg, DissociationCertificate inc)
        : Error(std::move(msg)), incumbent(std::move(inc)) {}
    DissociationCertificate incumbent;
};

// Independent O(m) witness checker: D induces maximum degree <= 1.
bool is_dissociation_set(const Graph& g, std::span<const Vertex> set);

// Exact maximum dissociation set by branch-and-reduce with memoization over
// vertex subsets (requires n <= 64). Deterministic: lowest-id tie-breaking.
DissociationCertificate diss_exact(const Graph& g, const SolverLimits& limits = {});

// Maximum dissociation set excluding u; equals diss_exact on g - u.
DissociationCertificate diss_exact_avoiding(const Graph& g, Vertex u,
                                            const SolverLimits& limits = {});

// Linear-time three-state DP on forests (OUT / in-D-unmatched / in-D-matched).
DissociationCertificate diss_forest_dp(const Graph& g);

// Greedy maximal dissociation set; lower bound used as budget-exceeded incumbent.
std::vector<Vertex> greedy_dissociation_set(const Graph& g);

} // namespace diss
