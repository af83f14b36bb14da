#include "doctest.h"

#include <random>

#include "builders.hpp"
#include "brute.hpp"
#include "vcss/blocks.hpp"
#include "vcss/graph_io.hpp"
#include "vcss/multigraph.hpp"

using namespace vcss;
using namespace vcss::testing;

TEST_CASE("components: two disjoint 4-cycles") {
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                        {4, 5}, {5, 6}, {6, 7}, {7, 4}};
    Multigraph g(8, es);
    auto r = components(EdgeSet::full(g));
    CHECK(r.count() == 2);
    CHECK(r.vertices[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(r.vertices[1] == std::vector<int>{4, 5, 6, 7});
    CHECK(r.isolated.empty());
}

TEST_CASE("components: empty set reports isolated vertices") {
    Multigraph g(5, {{0, 1}, {2, 3}});
    auto r = components(EdgeSet(g));
    CHECK(r.count() == 0);
    CHECK(r.isolated.size() == 5);
}

TEST_CASE("components: theta graph is one component") {
    // Hubs 0 and 5 joined by three internally disjoint paths; 7 edges.
    Multigraph g(6, {{0, 1}, {1, 5}, {0, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
    REQUIRE(g.edge_count() == 7);
    // Union-find reference.
    std::vector<int> parent(6);
    for (int i = 0; i < 6; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges()) parent[find(e.a)] = find(e.b);
    int roots = 0;
    for (int v = 0; v < 6; ++v) roots += find(v) == v;
    CHECK(roots == 1);
    CHECK(components(EdgeSet::full(g)).count() == 1);
}

TEST_CASE("block decomposition: cycle, joined cycles, star") {
    SUBCASE("5-cycle is a single block") {
        Multigraph g = cycle_graph(5);
        auto d = block_cut_decomposition(EdgeSet::full(g));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].blocks.size() == 1);
        CHECK(d.components[0].bridges.empty());
        CHECK(d.bridge_count == 0);
    }
    SUBCASE("two 5-cycles joined by a 2-edge path") {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
        for (int i = 0; i < 5; ++i) es.emplace_back(5 + i, 5 + (i + 1) % 5);
        es.emplace_back(0, 10);
        es.emplace_back(10, 5);
        Multigraph g(11, es);
        REQUIRE(g.edge_count() == 12);
        auto d = block_cut_decomposition(EdgeSet::full(g));
        REQUIRE(d.components.size() == 1);
        const auto& c = d.components[0];
        CHECK(c.blocks.size() == 2);
        CHECK(c.bridges.size() == 2);
        CHECK(c.blocks[0].leaf);
        CHECK(c.blocks[1].leaf);
        CHECK(c.cut_vertices == std::vector<int>{0, 5, 10});
    }
    SUBCASE("star has only bridges") {
        Multigraph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        auto d = block_cut_decomposition(EdgeSet::full(g));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].blocks.empty());
        CHECK(d.components[0].bridges.size() == 4);
    }
    SUBCASE("parallel pair forms a two-vertex block, not a bridge") {
        Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
        auto d = block_cut_decomposition(EdgeSet::full(g));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].blocks.size() == 1);
        CHECK(d.components[0].blocks[0].edges == std::vector<int>{0, 1});
        CHECK(d.components[0].bridges == std::vector<int>{2});
    }
}

TEST_CASE("is_2vc") {
    CHECK_FALSE(is_2vc(complete_graph(3)));
    CHECK(is_2vc(complete_graph(4)));
    // 4-cycle with a pendant vertex
    Multigraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    CHECK_FALSE(is_2vc(g));
}

TEST_CASE("find_matching_across") {
    SUBCASE("alternating 6-cycle sides admit a perfect cross matching") {
        Multigraph g = cycle_graph(6);
        auto m = find_matching_across(g, {0, 2, 4}, {1, 3, 5}, 3);
        REQUIRE(m.has_value());
        CHECK(m->size() == 3);
        std::vector<char> used(6, 0);
        for (int e : *m) {
            CHECK_FALSE(used[g.edge(e).a]);
            CHECK_FALSE(used[g.edge(e).b]);
            used[g.edge(e).a] = used[g.edge(e).b] = 1;
        }
    }
    SUBCASE("matching bounded by the smaller side") {
        Multigraph g = complete_graph(5);
        CHECK_FALSE(find_matching_across(g, {0, 1, 2, 3}, {4}, 2).has_value());
        CHECK(find_matching_across(g, {0, 1, 2, 3}, {4}, 1).has_value());
    }
}

TEST_CASE("boundary") {
    Multigraph g = cycle_graph(4);
    EdgeSet s = EdgeSet::full(g);
    CHECK(boundary(s, {0, 1, 2, 3}).size() == 0);
    EdgeSet one = EdgeSet::of(g, {0});
    CHECK(boundary(one, {0}).ids() == std::vector<int>{0});
    // 6-cycle component inside a larger set with two incident outside edges.
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 4; ++i) es.emplace_back(6 + i, 6 + (i + 1) % 4);
    es.emplace_back(0, 6); // ids 10, 11
    es.emplace_back(3, 8);
    Multigraph h(10, es);
    EdgeSet t = EdgeSet::full(h);
    auto b = boundary(t, {0, 1, 2, 3, 4, 5});
    CHECK(b.ids() == std::vector<int>{10, 11});
}

TEST_CASE("boundary is symmetric in the bipartition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Multigraph g = complete_graph(6);
        EdgeSet s(g);
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) s.insert(e);
        std::vector<int> w, rest;
        for (int v = 0; v < 6; ++v) (rng() & 1 ? w : rest).push_back(v);
        CHECK(boundary(s, w).ids() == boundary(s, rest).ids());
    }
}

TEST_CASE("block edges plus bridges partition every component") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) es.emplace_back(a, b);
        Multigraph g(n, es);
        EdgeSet s(g);
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng() & 1) s.insert(e);
        auto d = block_cut_decomposition(s);
        int total = 0;
        for (const auto& c : d.components) {
            int here = static_cast<int>(c.bridges.size());
            for (const auto& b : c.blocks) here += static_cast<int>(b.edges.size());
            CHECK(here == static_cast<int>(c.edges.size()));
            total += here;
        }
        CHECK(total == s.size());
    }
}

TEST_CASE("is_2vc implies min degree two and no cut vertex") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2 == 0) es.emplace_back(a, b);
        Multigraph g(n, es);
        if (!is_2vc(g)) continue;
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) >= 2);
        auto d = block_cut_decomposition(EdgeSet::full(g));
        CHECK(d.components[0].cut_vertices.empty());
    }
}

TEST_CASE("graph file round trip") {
    Multigraph g = load_graph("p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(save_graph(g) == "p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");

    Multigraph iso = load_graph("c empty\np 3 0\n");
    CHECK(iso.vertex_count() == 3);
    CHECK(iso.edge_count() == 0);

    CHECK_THROWS_AS(load_graph("p 4 1\ne 0 9\n"), ParseError);
    CHECK_THROWS_AS(load_graph("p 4 2\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(load_graph("e 0 1\n"), ParseError);

    // Round trip with comments and odd whitespace: structure survives.
    std::string text = "c header comment\np 5 3\ne 0 4\nc middle\ne   1   2\ne 3 4\n";
    Multigraph h = load_graph(text);
    CHECK(save_graph(load_graph(save_graph(h))) == save_graph(h));
}

TEST_CASE("edge set serialization resolves parallel edges") {
    Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
    EdgeSet s = EdgeSet::of(g, {0, 1, 2});
    std::string text = save_edge_set(s);
    EdgeSet back = load_edge_set(g, text);
    CHECK(back == s);
}

TEST_CASE("multigraph basics") {
    Multigraph g(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(g.simple());
    CHECK(g.has_parallel(0));
    CHECK(g.has_parallel(1));
    CHECK_FALSE(g.has_parallel(2));
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), GraphError);
}
