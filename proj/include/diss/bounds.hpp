#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "diss/cycles.hpp"
#include "diss/graph.hpp"
#include "diss/solver.hpp"

#include "json.hpp"

namespace diss {

using Rational = boost::multiprecision::cpp_rational;

struct BoundRow {
    bool applicable = false;
    Rational value;
    std::string reason; // set when inapplicable
};

// Exact rational lower bounds on diss(G). e1 = n - (m + k + c1)/3; the packing
// variant replaces c1 by the disjoint-cycle packing number nu1. The e0 rows
// are the classical comparison bounds; the outerplanar row is not evaluated.
struct BoundReport {
    int n = 0, m = 0, k = 0, c1 = 0, nu1 = 0;
    Rational e1;
    Rational e1_packing;
    BoundRow e0_degree;         // n / ceil((Delta+1)/2)
    BoundRow e0_inverse_degree; // (4/3) * sum 1/(d(u)+1), no isolated vertex
    BoundRow e0_goharasc;       // sum 1/(d(u)+1) + sum_{uv} 1/C(|N[u] u N[v]|,2)
    BoundRow e0_outerplanar;    // always "not evaluated"
    BoundRow e0_tree;           // 2n/3, forests only
    BoundRow e0_density;        // 2n/(t+2) - m/((t+1)(t+2)), t = ceil(m/n)-1
    BoundRow e0_two_thirds;     // 2n/3 - m/6
};

Rational bound_e1(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);

BoundReport bounds_report(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);

struct InequalityCheck {
    Rational bound;
    int diss = 0;
    Rational slack; // diss - bound, always >= 0
    bool tight = false;
};

InequalityCheck check_inequality(const Graph& g, const SolverLimits& limits = {},
                                 std::size_t cycle_cap = kDefaultCycleCap);

Rational ceil_rational_as_int(const Rational& r); // smallest integer >= r

nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json rational_to_json(const Rational& r); // {num, den}
std::string rational_to_string(const Rational& r);  // "num/den" or "num"
double rational_to_double(const Rational& r);

} // namespace diss
