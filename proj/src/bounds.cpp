#include "diss/bounds.hpp"

#include <algorithm>

#include "json.hpp"

#include "diss/errors.hpp"

namespace diss {

using Int = boost::multiprecision::cpp_int;

Rational bound_e1(const Graph& g, std::size_t cycle_cap) {
    const int n = g.order();
    const int m = g.size();
    const int k = static_cast<int>(components(g).size());
    const int c1 = c1_count(g, cycle_cap);
    return Rational(n) - Rational(m + k + c1, 3);
}

namespace {

BoundRow applicable(Rational v) {
    return {true, std::move(v), {}};
}

BoundRow inapplicable(std::string reason) {
    return {false, Rational(0), std::move(reason)};
}

} // namespace

BoundReport bounds_report(const Graph& g, std::size_t cycle_cap) {
    BoundReport r;
    r.n = g.order();
    r.m = g.size();
    r.k = static_cast<int>(components(g).size());
    r.c1 = c1_count(g, cycle_cap);
    r.nu1 = max_disjoint_c1_packing(g, cycle_cap);
    r.e1 = Rational(r.n) - Rational(r.m + r.k + r.c1, 3);
    r.e1_packing = Rational(r.n) - Rational(r.m + r.k + r.nu1, 3);

    if (r.n == 0) {
        r.e0_degree = inapplicable("empty graph");
        r.e0_inverse_degree = inapplicable("empty graph");
        r.e0_goharasc = inapplicable("empty graph");
    } else {
        const int delta = g.max_degree();
        r.e0_degree = applicable(Rational(r.n) / Rational((delta + 2) / 2)); // ceil((delta+1)/2)

        bool has_isolated = false;
        Rational inv_sum(0);
        for (Vertex u = 0; u < r.n; ++u) {
            if (g.degree(u) == 0)
                has_isolated = true;
            inv_sum += Rational(1, g.degree(u) + 1);
        }
        r.e0_inverse_degree = has_isolated
                                  ? inapplicable("graph has an isolated vertex")
                                  : applicable(Rational(4, 3) * inv_sum);

        Rational goh = inv_sum;
        for (const auto& [u, v] : g.edges()) {
            // |N[u] u N[v]| via merged sorted neighbor lists.
            std::vector<Vertex> uni(g.neighbors(u).begin(), g.neighbors(u).end());
            uni.insert(uni.end(), g.neighbors(v).begin(), g.neighbors(v).end());
            uni.push_back(u);
            uni.push_back(v);
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            const long long s = static_cast<long long>(uni.size());
            goh += Rational(2, s * (s - 1));
        }
        r.e0_goharasc = applicable(goh);
    }

    r.e0_outerplanar = inapplicable("not evaluated");
    r.e0_tree = is_forest(g) ? applicable(Rational(2 * r.n, 3))
                             : inapplicable("graph is not a forest");
    if (r.m >= 1) {
        const long long t = (r.m + r.n - 1) / r.n - 1; // ceil(m/n) - 1
        r.e0_density = applicable(Rational(2 * r.n, t + 2) -
                                  Rational(r.m, (t + 1) * (t + 2)));
    } else {
        r.e0_density = inapplicable("graph has no edges");
    }
    r.e0_two_thirds = applicable(Rational(2 * r.n, 3) - Rational(r.m, 6));
    return r;
}

InequalityCheck check_inequality(const Graph& g, const SolverLimits& limits,
                                 std::size_t cycle_cap) {
    InequalityCheck out;
    out.bound = bound_e1(g, cycle_cap);
    out.diss = diss_exact(g, limits).size;
    out.slack = Rational(out.diss) - out.bound;
    if (out.slack < 0)
        throw InternalError("dissociation number fell below the lower bound");
    out.tight = (out.slack == 0);
    return out;
}

Rational ceil_rational_as_int(const Rational& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den;
    if (q * den < num)
        ++q;
    return Rational(q);
}

nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", static_cast<long long>(numerator(r))},
            {"den", static_cast<long long>(denominator(r))}};
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

namespace {

nlohmann::json row_to_json(const BoundRow& row) {
    if (!row.applicable)
        return {{"applicable", false}, {"reason", row.reason}};
    return {{"applicable", true}, {"value", rational_to_json(row.value)}};
}

} // namespace

nlohmann::json bound_report_to_json(const BoundReport& r) {
    return {{"n", r.n},
            {"m", r.m},
            {"k", r.k},
            {"c1", r.c1},
            {"nu1", r.nu1},
            {"e1", rational_to_json(r.e1)},
            {"e1_packing", rational_to_json(r.e1_packing)},
            {"e0_degree", row_to_json(r.e0_degree)},
            {"e0_inverse_degree", row_to_json(r.e0_inverse_degree)},
            {"e0_goharasc", row_to_json(r.e0_goharasc)},
            {"e0_outerplanar", row_to_json(r.e0_outerplanar)},
            {"e0_tree", row_to_json(r.e0_tree)},
            {"e0_density", row_to_json(r.e0_density)},
            {"e0_two_thirds", row_to_json(r.e0_two_thirds)}};
}

} // namespace diss
