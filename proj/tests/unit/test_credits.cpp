#include "doctest.h"

#include "builders.hpp"
#include "vcss/credits.hpp"
#include "vcss/rational.hpp"

using namespace vcss;
using namespace vcss::testing;

TEST_CASE("rational arithmetic is exact and ordered") {
    Rational a(23, 72), b(1, 4);
    CHECK((a + b) == Rational(41, 72));
    CHECK((a - b) == Rational(5, 72));
    CHECK((a * Rational(6)) == Rational(23, 12));
    CHECK(Rational(95, 72) == Rational(190, 144));
    CHECK(a > b);
    CHECK(Rational(-1, 3) < Rational(0));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    Rational huge(1'000'000'007, 1);
    Rational tiny(1, 999'999'937);
    CHECK_THROWS_AS((void)(huge * huge * huge), RationalOverflow);
    CHECK((huge * tiny).num() == 1'000'000'007);
}

TEST_CASE("credit assignment per component size") {
    SUBCASE("five-cycle component") {
        Multigraph g = cycle_graph(5);
        CreditLedger lg = assign_credits(EdgeSet::full(g), Scheme::Standard);
        CHECK(lg.total == Rational(115, 72));
        CHECK(cost(EdgeSet::full(g), Scheme::Standard) == Rational(475, 72));
    }
    SUBCASE("large two-connected component contributes two") {
        Multigraph g = cycle_graph(8);
        CreditLedger lg = assign_credits(EdgeSet::full(g), Scheme::Standard);
        CHECK(lg.total == Rational(2));
        REQUIRE(lg.entries.size() == 2);
    }
    SUBCASE("six-cycle differs between the schemes") {
        Multigraph g = cycle_graph(6);
        CHECK(assign_credits(EdgeSet::full(g), Scheme::Standard).total == Rational(23, 12));
        CHECK(assign_credits(EdgeSet::full(g), Scheme::Legacy).total == Rational(2));
    }
    SUBCASE("complex component: component, blocks, bridges") {
        // Two 5-cycles joined by a two-bridge path.
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
        for (int i = 0; i < 5; ++i) es.emplace_back(5 + i, 5 + (i + 1) % 5);
        es.emplace_back(0, 10);
        es.emplace_back(10, 5);
        Multigraph g(11, es);
        EdgeSet s = EdgeSet::full(g);
        CHECK(assign_credits(s, Scheme::Standard).total == Rational(7, 2));
        // No small components, so the two schemes coincide.
        CHECK(cost(s, Scheme::Standard) == cost(s, Scheme::Legacy));
        CHECK(cost(s, Scheme::Standard) == Rational(31, 2));
    }
    SUBCASE("legacy threshold sits at five edges") {
        Multigraph g = cycle_graph(4);
        CHECK(assign_credits(EdgeSet::full(g), Scheme::Legacy).total == Rational(4, 3));
        CHECK(assign_credits(EdgeSet::full(g), Scheme::Standard).total == Rational(23, 18));
    }
}

namespace {

// Before: three cycle components, C8 / middle cycle / C8. After: the same
// plus two connector bridges, mirroring how a merge leaves the middle cycle
// as a block attached at single vertices.
struct MergeFixture {
    Multigraph g;
    EdgeSet before;
    EdgeSet after;
    std::vector<int> scope;

    explicit MergeFixture(int mid_len) : g(build(mid_len)), before(g), after(g) {
        for (int e = 0; e < g.edge_count() - 2; ++e) before.insert(e);
        after = before;
        after.insert(g.edge_count() - 2);
        after.insert(g.edge_count() - 1);
        for (int i = 0; i < mid_len; ++i) scope.push_back(8 + i);
    }

    static Multigraph build(int mid_len) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 8; ++i) es.emplace_back(i, (i + 1) % 8);
        for (int i = 0; i < mid_len; ++i) es.emplace_back(8 + i, 8 + (i + 1) % mid_len);
        int right = 8 + mid_len;
        for (int i = 0; i < 8; ++i) es.emplace_back(right + i, right + (i + 1) % 8);
        es.emplace_back(0, 8);         // connectors, last two edge ids
        es.emplace_back(9, right);
        return Multigraph(16 + mid_len, es);
    }
};

} // namespace

TEST_CASE("delta_contribution matches the reducer's accounting") {
    SUBCASE("a large component absorbed into a merge loses its component credit") {
        MergeFixture f(8); // the other side is also an 8-cycle: large
        auto lb = assign_credits(f.before, Scheme::Standard);
        auto la = assign_credits(f.after, Scheme::Standard);
        CHECK(delta_contribution(lb, la, f.scope) == Rational(-1));
    }
    SUBCASE("a 4-cycle becoming a block") {
        MergeFixture f(4);
        auto lb = assign_credits(f.before, Scheme::Standard);
        auto la = assign_credits(f.after, Scheme::Standard);
        CHECK(delta_contribution(lb, la, f.scope) == Rational(-4 * 23, 72) + Rational(1));
        CHECK(delta_contribution(lb, la, f.scope) == Rational(-5, 18));
    }
    SUBCASE("a 6-cycle becoming a block") {
        MergeFixture f(6);
        auto lb = assign_credits(f.before, Scheme::Standard);
        auto la = assign_credits(f.after, Scheme::Standard);
        CHECK(delta_contribution(lb, la, f.scope) == Rational(-11, 12));
    }
}
