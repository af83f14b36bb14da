#include "doctest.h"

#include "builders.hpp"
#include "vcss/structure.hpp"

using namespace vcss;
using namespace vcss::testing;

TEST_CASE("K5 is structured") {
    auto rep = analyze_structure(complete_graph(5));
    CHECK(rep.simple);
    CHECK(rep.two_connected);
    CHECK(rep.violations.empty());
    CHECK(rep.is_structured());
}

TEST_CASE("two K4 blocks sharing an edge expose an irrelevant edge") {
    // {0,1,2,3} and {0,1,4,5} complete, glued on the edge 01.
    std::vector<std::pair<int, int>> es;
    for (int a : {0, 1, 2, 3})
        for (int b : {0, 1, 2, 3})
            if (a < b) es.emplace_back(a, b);
    for (int a : {0, 1, 4, 5})
        for (int b : {0, 1, 4, 5})
            if (a < b && !(a == 0 && b == 1)) es.emplace_back(a, b);
    Multigraph g(6, es);
    auto rep = analyze_structure(g);
    CHECK(rep.two_connected);
    bool irrelevant = false;
    for (const auto& v : rep.violations)
        if (v.kind == StructureViolation::Kind::IrrelevantEdge && v.cut == std::pair{0, 1})
            irrelevant = true;
    CHECK(irrelevant);
    CHECK_FALSE(rep.is_structured());
}

TEST_CASE("five-cycle with two chords from one vertex is removable") {
    Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
    auto rep = analyze_structure(g);
    bool removable = false;
    for (const auto& v : rep.violations)
        if (v.kind == StructureViolation::Kind::RemovableFiveCycle) removable = true;
    CHECK(removable);
}

TEST_CASE("find_isolated_pair") {
    Multigraph g = isolated_pair_host();
    SUBCASE("embedded K_{2,3} pair") {
        auto w = find_isolated_pair(g, 8, 9);
        REQUIRE(w.has_value());
        CHECK(w->isolated == std::vector<int>{8, 9});
        CHECK(w->guards == std::array<int, 3>{0, 1, 2});
    }
    SUBCASE("large neighborhoods are never isolated") {
        CHECK_FALSE(find_isolated_pair(g, 0, 9).has_value());
        CHECK_FALSE(find_isolated_pair(g, 3, 4).has_value());
    }
    SUBCASE("adjacent vertices are never isolated") {
        Multigraph h(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
        CHECK_FALSE(find_isolated_pair(h, 0, 1).has_value());
    }
}

TEST_CASE("enumerate_forbidden_cycles") {
    SUBCASE("guarded pair raises its 4-cycles") {
        auto fc = enumerate_forbidden_cycles(isolated_pair_host());
        // pair {8,9} with guards {0,1,2}: 4-cycles (8,a,9,b) for guard pairs.
        CHECK(fc.four_cycles.size() == 3);
        CHECK(fc.six_cycles.empty());
        for (const auto& w : fc.four_witnesses) CHECK(w.isolated == std::vector<int>{8, 9});
    }
    SUBCASE("guarded triple raises its 6-cycle") {
        auto fc = enumerate_forbidden_cycles(isolated_triple_host());
        REQUIRE(fc.six_cycles.size() == 1);
        CHECK(fc.six_cycles[0] == std::array<int, 6>{0, 1, 2, 3, 4, 5});
        CHECK(fc.six_witnesses[0].isolated == std::vector<int>{0, 2, 4});
        CHECK(fc.four_cycles.empty());
    }
    SUBCASE("an outside chord breaks isolation") {
        // 6-cycle plus an edge from an odd-position vertex to an external K4.
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
        for (int a = 6; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) es.emplace_back(a, b);
        es.emplace_back(0, 6); // vertex 0 now has an outside neighbor
        es.emplace_back(1, 7);
        es.emplace_back(3, 8);
        es.emplace_back(5, 9);
        Multigraph g(10, es);
        auto fc = enumerate_forbidden_cycles(g);
        CHECK(fc.six_cycles.empty());
    }
    SUBCASE("all six-cycles through an unattached K33 side are forbidden") {
        // K_{3,3} sides {0,1,2} / {3,4,5}; side two gets outside edges.
        std::vector<std::pair<int, int>> es;
        for (int a : {0, 1, 2})
            for (int b : {3, 4, 5}) es.emplace_back(a, b);
        for (int a = 6; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) es.emplace_back(a, b);
        es.emplace_back(3, 6);
        es.emplace_back(4, 7);
        es.emplace_back(5, 8);
        Multigraph g(10, es);
        auto fc = enumerate_forbidden_cycles(g);
        CHECK(fc.six_cycles.size() == 6); // every hamiltonian cycle of the K33
        for (const auto& w : fc.six_witnesses) CHECK(w.isolated == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("is_cycle_restricted") {
    SUBCASE("hamiltonian cycle on eight vertices passes") {
        Multigraph g = complete_graph(8);
        EdgeSet s(g);
        for (int i = 0; i < 8; ++i) s.insert(*g.edge_between(i, (i + 1) % 8));
        CHECK(is_cycle_restricted(s).ok);
    }
    SUBCASE("triangle component fails") {
        std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 0}};
        for (int i = 0; i < 5; ++i) es.emplace_back(3 + i, 3 + (i + 1) % 5);
        Multigraph g(8, es);
        auto rep = is_cycle_restricted(EdgeSet::full(g));
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].kind == CycleRestrictedReport::Kind::TriangleComponent);
    }
    SUBCASE("guarded 6-cycle component with no boundary edges fails") {
        Multigraph g = isolated_triple_host();
        // Cover: the 6-cycle, plus a 4-cycle on the K4 tail. Guards reach
        // degree two on the cycle itself; no member edge crosses.
        EdgeSet s(g);
        for (int i = 0; i < 6; ++i) s.insert(*g.edge_between(i, (i + 1) % 6));
        for (auto [a, b] : {std::pair{6, 7}, {7, 8}, {8, 9}, {9, 6}})
            s.insert(*g.edge_between(a, b));
        auto rep = is_cycle_restricted(s);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].kind == CycleRestrictedReport::Kind::SixCycleBoundary);
        CHECK(rep.violations[0].boundary_size == 0);
        // The same cover is triangle-component-free: the restriction is
        // strictly stronger than triangle-freeness.
        bool any_triangle = false;
        for (const auto& v : rep.violations)
            any_triangle |= v.kind == CycleRestrictedReport::Kind::TriangleComponent;
        CHECK_FALSE(any_triangle);
    }
    SUBCASE("guarded 4-cycle component fails") {
        Multigraph g = isolated_pair_host();
        EdgeSet s(g);
        // Component (8,0,9,1) plus a 6-cycle covering 2..7.
        s.insert(*g.edge_between(8, 0));
        s.insert(*g.edge_between(0, 9));
        s.insert(*g.edge_between(9, 1));
        s.insert(*g.edge_between(1, 8));
        for (int i = 2; i < 8; ++i)
            s.insert(*g.edge_between(i, i == 7 ? 2 : i + 1));
        auto rep = is_cycle_restricted(s);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].kind == CycleRestrictedReport::Kind::FourCycleComponent);
    }
    SUBCASE("non-covers are rejected") {
        Multigraph g = cycle_graph(5);
        EdgeSet s = EdgeSet::of(g, {0, 1});
        CHECK_THROWS_AS(is_cycle_restricted(s), PreconditionViolated);
    }
}

TEST_CASE("cycle enumeration respects its cap") {
    Multigraph g = complete_graph(9);
    CHECK_THROWS_AS(enumerate_cycles(g, 6, 10, [](const std::vector<int>&) { return true; }),
                    ResourceExhausted);
}
