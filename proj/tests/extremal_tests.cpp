#include "doctest.h"

#include <bit>
#include <random>

#include "diss/bounds.hpp"
#include "diss/cycles.hpp"
#include "diss/errors.hpp"
#include "diss/extremal.hpp"
#include "diss/generators.hpp"
#include "diss/solver.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diss;

TEST_CASE("building spiked cycles") {
    Graph g = fixtures::spiked20();
    CHECK(g.order() == 20);
    CHECK(g.size() == 20);
    CHECK(is_cycle_disjoint(g));

    Graph small = build_spiked_cycle({4, {1}});
    CHECK(small.order() == 5);
    CHECK(small.size() == 5);

    CHECK_THROWS_AS(build_spiked_cycle({3, {1, 2, 3, 4}}), InvalidInputError);
    CHECK_THROWS_AS(build_spiked_cycle({5, {2, 2}}), InvalidInputError);
    CHECK_THROWS_AS(build_spiked_cycle({5, {}}), InvalidInputError);
}

TEST_CASE("goodness predicates") {
    CHECK(is_good(fixtures::spiked20_spec()));
    CHECK(is_very_good(fixtures::spiked20_spec()));
    CHECK(!is_good({15, {2, 9, 11, 13}})); // spike at 4 removed
    CHECK(is_good({4, {1}}));
    CHECK(!is_very_good({4, {1}})); // l = 1 mod 3
    CHECK(!is_good({5, {1, 3}}));   // wrap gap 3 = 0 mod 3
}

TEST_CASE("extremal tree recognition") {
    CHECK(is_extremal_tree(fixtures::path(3)));
    CHECK(is_extremal_tree(fixtures::path(6)));
    CHECK(!is_extremal_tree(fixtures::star(3)));
    CHECK(!is_extremal_tree(fixtures::path(4))); // n not 0 mod 3
    CHECK_THROWS_AS(is_extremal_tree(fixtures::cycle(6)), InvalidInputError);
}

TEST_CASE("operations") {
    Graph p3 = fixtures::path(3);
    Graph p6 = apply_operation(p3, {ConstructionStep::Op::O1, 2});
    CHECK(p6.order() == 6);
    CHECK(p6.size() == 5);
    CHECK(is_tree(p6));
    CHECK(p6.max_degree() == 2); // a path

    Graph with_c4 = apply_operation(p3, {ConstructionStep::Op::O3, 0, 4});
    CHECK(with_c4.order() == 7);
    CHECK(with_c4.size() == 7);
    CHECK(c1_count(with_c4) == 1);
    CHECK(bound_e1(with_c4) == Rational(4));

    CHECK_THROWS_AS(apply_operation(p3, {ConstructionStep::Op::O3, 0, 6}), InvalidInputError);
    CHECK_THROWS_AS(apply_operation(p3, {ConstructionStep::Op::O1, 9}), InvalidInputError);
    ConstructionStep bad_o4{ConstructionStep::Op::O4, 0};
    bad_o4.spec = {4, {1}}; // good but not very good
    CHECK_THROWS_AS(apply_operation(p3, bad_o4), InvalidInputError);
}

TEST_CASE("generating members keeps the bound tight") {
    ConstructionTrace t;
    t.base.kind = BaseSpec::Kind::Cycle;
    t.base.ell = 5;
    t.steps.push_back({ConstructionStep::Op::O1, 0});
    Graph g = generate_member(t);
    CHECK(g.order() == 8);
    auto chk = check_inequality(g);
    CHECK(chk.diss == 5);
    CHECK(chk.tight);

    ConstructionTrace fig;
    fig.base.kind = BaseSpec::Kind::SpikedCycle;
    fig.base.spec = fixtures::spiked20_spec();
    Graph f = generate_member(fig);
    CHECK(f.edges() == fixtures::spiked20().edges());
}

TEST_CASE("random members") {
    auto [tiny, tiny_trace] = random_member(Family::T, 3, 42);
    CHECK(tiny.order() == 3);
    CHECK(tiny.size() == 2);

    auto [t9, t9_trace] = random_member(Family::T, 9, 1);
    CHECK(t9.order() == 9);
    REQUIRE(is_tree(t9));
    CHECK(is_extremal_tree(t9));
    CHECK(diss_forest_dp(t9).size == 6);

    auto [c20, c20_trace] = random_member(Family::C, 20, 7);
    CHECK(c20.order() <= 20);
    CHECK(is_cycle_disjoint(c20));
    CHECK(check_inequality(c20).tight);

    // Deterministic per seed.
    auto again = random_member(Family::C, 20, 7);
    CHECK(again.first.edges() == c20.edges());
}

TEST_CASE("spiked cycle recognition") {
    auto rec = recognize_spiked_cycle(fixtures::spiked20());
    REQUIRE(rec.has_value());
    CHECK(rec->spec.ell == 15);
    CHECK(rec->spec.spikes.size() == 5);
    CHECK(is_very_good(rec->spec));
    // The layout maps the build of the recognized spec back onto the graph.
    Graph rebuilt = build_spiked_cycle(rec->spec);
    for (const auto& [u, v] : rebuilt.edges())
        CHECK(fixtures::spiked20().has_edge(rec->layout[u], rec->layout[v]));

    CHECK(!recognize_spiked_cycle(fixtures::cycle(5)).has_value());
    CHECK(!recognize_spiked_cycle(fixtures::path(6)).has_value());
    CHECK(!recognize_spiked_cycle(fixtures::two_triangles()).has_value());

    // Goodness is rotation-invariant: both labelings of the same graph agree.
    CHECK(is_good({6, {1, 3}}));
    Graph rot = build_spiked_cycle({6, {2, 4}});
    auto rec2 = recognize_spiked_cycle(rot);
    REQUIRE(rec2.has_value());
    CHECK(is_very_good(rec2->spec));
}

TEST_CASE("membership fixtures") {
    CHECK(!membership_in_C(fixtures::cycle(6)).has_value());
    CHECK(membership_in_C(fixtures::cycle(5)).has_value());

    auto fig = membership_in_C(fixtures::spiked20());
    REQUIRE(fig.has_value());
    CHECK(fig->base.kind == BaseSpec::Kind::SpikedCycle);
    CHECK(fig->steps.empty());

    auto p6 = membership_in_C(fixtures::path(6));
    REQUIRE(p6.has_value());
    CHECK(p6->base.kind == BaseSpec::Kind::P3);
    REQUIRE(p6->steps.size() == 1);
    CHECK(p6->steps[0].op == ConstructionStep::Op::O1);

    CHECK(!membership_in_C(fixtures::star(3)).has_value());
    CHECK_THROWS_AS(membership_in_C(fixtures::diamond()), InvalidInputError);
}

TEST_CASE("membership traces replay to the same graph") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 40; ++iter) {
        auto [g, trace] = random_member(Family::C, 16, rng());
        auto found = membership_in_C(g);
        REQUIRE(found.has_value());
        Graph replay = generate_member(*found);
        REQUIRE(replay.order() == g.order());
        REQUIRE(replay.size() == g.size());
        CHECK(diss_exact(replay).size == diss_exact(g).size);
        if (g.order() <= 8)
            CHECK(canonical_edge_mask(replay) == canonical_edge_mask(g));
    }
}

TEST_CASE("avoiding maximum sets") {
    CHECK(has_avoiding_maximum_set(fixtures::path(3), 1));
    CHECK(!has_avoiding_maximum_set(fixtures::path(2), 0));
    CHECK(!has_avoiding_maximum_set(fixtures::path(2), 1));
}

TEST_CASE("small slice of the spiked-cycle bound") {
    for (int ell = 3; ell <= 8; ++ell) {
        for (std::uint64_t spikes = 1; spikes < (std::uint64_t{1} << ell); ++spikes) {
            if (std::popcount(spikes) > 3)
                continue;
            SpikedCycleSpec spec;
            spec.ell = ell;
            for (int i = 0; i < ell; ++i)
                if (spikes >> i & 1)
                    spec.spikes.push_back(i + 1);
            Graph g = build_spiked_cycle(spec);
            const int n = g.order();
            int d = diss_exact(g).size;
            CHECK(Rational(3 * d) >= Rational(2 * n - 1));
            CHECK((Rational(3 * d) == Rational(2 * n - 1)) == is_good(spec));
        }
    }
}

TEST_CASE("trace JSON round trip") {
    ConstructionTrace t;
    t.base.kind = BaseSpec::Kind::SpikedCycle;
    t.base.spec = fixtures::spiked20_spec();
    t.steps.push_back({ConstructionStep::Op::O1, 3});
    t.steps.push_back({ConstructionStep::Op::O3, 1, 5});
    ConstructionStep o4{ConstructionStep::Op::O4, 2};
    o4.spec = {3, {1, 3}};
    o4.piece_attach = 1;
    t.steps.push_back(o4);

    auto j = trace_to_json(t);
    ConstructionTrace back = trace_from_json(j);
    CHECK(trace_to_json(back) == j);
    CHECK(generate_member(back).edges() == generate_member(t).edges());
    CHECK_THROWS(trace_from_json(nlohmann::json{{"base", {{"kind", "nope"}}}}));
}
