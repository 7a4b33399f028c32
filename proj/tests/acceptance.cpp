// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 11 exercises the CLI binary, whose path is argv[1].

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diss/bounds.hpp"
#include "diss/constructive.hpp"
#include "diss/cycles.hpp"
#include "diss/extremal.hpp"
#include "diss/generators.hpp"
#include "diss/graph_io.hpp"
#include "diss/solver.hpp"
#include "fixtures.hpp"

using namespace diss;

namespace {

struct Record {
    Graph g;
    BoundReport report;
    int diss = 0;
};

std::vector<Record> g_suite1; // all labeled n <= 6 plus connected non-iso n = 7
std::vector<Record> g_suite2; // 10,000 random G(n,p), n in [8,14]

Record make_record(Graph g) {
    Record r;
    r.report = bounds_report(g);
    r.diss = diss_exact(g).size;
    r.g = std::move(g);
    return r;
}

void build_suites() {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask)
            g_suite1.push_back(make_record(graph_from_edge_mask(n, mask)));
    }
    for (Graph& g : nonisomorphic_graphs(7, true))
        g_suite1.push_back(make_record(std::move(g)));

    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 10'000; ++i) {
        int n = 8 + static_cast<int>(rng() % 7);
        double p = 0.1 * (1 + static_cast<int>(rng() % 5));
        g_suite2.push_back(make_record(random_gnp(n, p, rng)));
    }
}

// 1. Main inequality, exhaustive.
bool criterion1() {
    for (const Record& r : g_suite1)
        if (Rational(r.diss) < r.report.e1)
            return false;
    return true;
}

// 2. Main inequality plus packing variant, randomized.
bool criterion2() {
    for (const Record& r : g_suite2) {
        if (Rational(r.diss) < r.report.e1)
            return false;
        if (Rational(r.diss) < r.report.e1_packing)
            return false;
    }
    return true;
}

// 3. Constructive certificate: valid, meets ceil of the bound, fast on cacti.
bool criterion3() {
    auto check = [](const Record& r) {
        DissociationCertificate cert = certify_bound_set(r.g);
        return is_dissociation_set(r.g, cert.vertices) &&
               static_cast<int>(cert.vertices.size()) == cert.size &&
               Rational(cert.size) >= ceil_rational_as_int(r.report.e1);
    };
    for (const Record& r : g_suite1)
        if (!check(r))
            return false;
    for (const Record& r : g_suite2)
        if (!check(r))
            return false;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        int n = 150 + static_cast<int>(rng() % 51);
        Graph g = random_cactus(n, rng);
        auto t0 = std::chrono::steady_clock::now();
        DissociationCertificate cert = certify_bound_set(g);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (ms > 1000 || !is_dissociation_set(g, cert.vertices) ||
            Rational(cert.size) < ceil_rational_as_int(bound_e1(g)))
            return false;
    }
    return true;
}

// 4. diss(C_l) = floor(2l/3).
bool criterion4() {
    for (int l = 3; l <= 15; ++l)
        if (diss_exact(fixtures::cycle(l)).size != 2 * l / 3)
            return false;
    return true;
}

// 5. Spiked-cycle bound (2n-1)/3 with equality exactly for good ones.
bool criterion5() {
    for (int ell = 3; ell <= 12; ++ell) {
        std::vector<int> positions;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ell); ++mask) {
            if (std::popcount(mask) > 5)
                continue;
            SpikedCycleSpec spec;
            spec.ell = ell;
            for (int i = 0; i < ell; ++i)
                if (mask >> i & 1)
                    spec.spikes.push_back(i + 1);
            Graph g = build_spiked_cycle(spec);
            const int n = g.order();
            const int d = diss_exact(g).size;
            if (3 * d < 2 * n - 1)
                return false;
            if ((3 * d == 2 * n - 1) != is_good(spec))
                return false;
        }
    }
    return true;
}

// 6. Extremal-tree triple equivalence on all free trees n <= 12.
bool criterion6() {
    if (!is_extremal_tree(fixtures::path(3)) || !is_extremal_tree(fixtures::path(6)) ||
        is_extremal_tree(fixtures::star(3)))
        return false;
    for (int n = 2; n <= 12; ++n) {
        for (const Graph& t : free_trees(n)) {
            bool a = is_extremal_tree(t);
            bool b = n % 3 == 0 && 3 * diss_forest_dp(t).size == 2 * n;
            auto trace = membership_in_C(t);
            bool c = trace.has_value();
            if (c) {
                if (trace->base.kind != BaseSpec::Kind::P3)
                    c = false;
                for (const auto& s : trace->steps)
                    if (s.op != ConstructionStep::Op::O1 && s.op != ConstructionStep::Op::O2)
                        c = false;
            }
            if (a != b || b != c)
                return false;
        }
    }
    return true;
}

// 7. Membership in the closure family iff the bound is tight
//    (connected cycle-disjoint inputs, members and perturbed non-members).
bool criterion7() {
    std::mt19937_64 rng(4242);
    int checked = 0;
    while (checked < 500) {
        Graph g = (checked % 2 == 0) ? random_member(Family::C, 18, rng()).first
                                     : random_cactus(3 + static_cast<int>(rng() % 16), rng);
        if (!is_connected(g) || !is_cycle_disjoint(g))
            continue;
        ++checked;
        bool member = membership_in_C(g).has_value();
        bool tight = check_inequality(g).tight;
        if (member != tight)
            return false;
    }
    return true;
}

// 8. Generated members: equality plus an avoiding maximum set for every vertex.
bool criterion8() {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 200; ++i) {
        auto [g, trace] = random_member(Family::C, 18, rng());
        if (!check_inequality(g).tight)
            return false;
        for (Vertex u = 0; u < g.order(); ++u)
            if (!has_avoiding_maximum_set(g, u))
                return false;
    }
    return true;
}

// 9. Figure-derived fixtures.
bool criterion9() {
    Graph fig2 = fixtures::spiked20();
    if (!is_very_good(fixtures::spiked20_spec()))
        return false;
    auto chk2 = check_inequality(fig2);
    if (chk2.diss != 13 || chk2.bound != Rational(13) || !chk2.tight)
        return false;
    if (is_good({15, {2, 9, 11, 13}})) // spike at position 4 removed
        return false;
    Graph left = fixtures::two_triangles();
    if (is_cycle_disjoint(left))
        return false;
    auto chkl = check_inequality(left);
    if (chkl.diss != 4 || chkl.bound != Rational(4) || !chkl.tight)
        return false;
    auto chkr = check_inequality(fixtures::diamond());
    return chkr.diss == 2 && chkr.bound == Rational(2) && chkr.tight;
}

// 10. Every applicable comparison bound stays below the true value.
bool criterion10() {
    auto rows = [](const Record& r) {
        const BoundRow* all[] = {&r.report.e0_degree,   &r.report.e0_inverse_degree,
                                 &r.report.e0_goharasc, &r.report.e0_tree,
                                 &r.report.e0_density,  &r.report.e0_two_thirds};
        for (const BoundRow* row : all)
            if (row->applicable && row->value > Rational(r.diss))
                return false;
        return true;
    };
    for (const Record& r : g_suite1)
        if (!rows(r))
            return false;
    for (const Record& r : g_suite2)
        if (!rows(r))
            return false;
    for (int n = 2; n <= 12; ++n)
        for (const Graph& t : free_trees(n))
            if (Rational(2 * n, 3) > Rational(diss_forest_dp(t).size))
                return false;
    return true;
}

// 11. CLI determinism: identical seeds give byte-identical artifacts.
std::string run_capture(const std::string& cmd) {
    std::string full = cmd + " > /tmp/diss_accept_out.txt 2>/dev/null";
    if (std::system(full.c_str()) != 0)
        return "<<command failed>>";
    std::ifstream in("/tmp/diss_accept_out.txt");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion11(const std::string& cli) {
    {
        std::ofstream f("/tmp/diss_accept_c5.txt");
        f << write_graph(fixtures::cycle(5), GraphFormat::EdgeList);
    }
    const std::string survey =
        cli + " survey --gen gnp --n 10 --p 0.3 --count 50 --seed 5";
    std::string a = run_capture(survey);
    std::string b = run_capture(survey);
    if (a != b || a == "<<command failed>>" || a.find("tight") == std::string::npos)
        return false;
    const std::string trees = cli + " survey --gen tree --n 12 --count 100 --seed 3";
    std::string t1 = run_capture(trees);
    if (t1 != run_capture(trees))
        return false;
    // 100 rows plus header, no negative slack (column check: tight flag 0/1).
    if (std::count(t1.begin(), t1.end(), '\n') != 101)
        return false;
    const std::string exact = cli + " exact /tmp/diss_accept_c5.txt";
    std::string e1 = run_capture(exact);
    if (e1 != run_capture(exact))
        return false;
    return e1.find("\"diss\": 3") != std::string::npos;
}

int g_failures = 0;

void report(int num, bool ok, const std::string& what) {
    std::cout << "criterion " << num << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << std::endl;
    if (!ok)
        ++g_failures;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    build_suites();
    report(1, criterion1(), "main inequality on all labeled n<=6 and connected non-iso n=7");
    report(2, criterion2(), "main inequality and packing variant on 10,000 random graphs");
    report(3, criterion3(), "constructive certificate valid, >= ceil(bound), fast on cacti");
    report(4, criterion4(), "diss(C_l) = floor(2l/3) for 3 <= l <= 15");
    report(5, criterion5(), "spiked-cycle bound (2n-1)/3 tight exactly for good ones");
    report(6, criterion6(), "extremal-tree triple equivalence on all free trees n<=12");
    report(7, criterion7(), "family membership iff tight on 500 cycle-disjoint graphs");
    report(8, criterion8(), "members are tight with avoiding maximum sets at every vertex");
    report(9, criterion9(), "figure fixtures: very good spike pattern and tight bounds");
    report(10, criterion10(), "comparison bounds never exceed the true value");
    report(11, criterion11(argv[1]), "CLI output is byte-identical across repeated runs");
    return g_failures == 0 ? 0 : 1;
}
