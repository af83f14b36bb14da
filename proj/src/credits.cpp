#include "vcss/credits.hpp"

#include <algorithm>

namespace vcss {

namespace {

const Rational kSmallPerEdge{23, 72};
const Rational kLegacySmallPerEdge{1, 3};
const Rational kBridgeCredit{1, 4};

int large_threshold(Scheme scheme) { return scheme == Scheme::Standard ? 7 : 6; }

} // namespace

CreditLedger assign_credits(const BlockDecomposition& d, const Multigraph& g, Scheme scheme) {
    CreditLedger ledger;
    ledger.scheme = scheme;
    Rational per_edge = scheme == Scheme::Standard ? kSmallPerEdge : kLegacySmallPerEdge;
    for (const auto& c : d.components) {
        if (c.edge_total() < large_threshold(scheme)) {
            LedgerEntry e{LedgerEntry::Kind::Component, c.min_vertex(),
                          per_edge * Rational(c.edge_total()), c.vertices};
            ledger.total += e.credit;
            ledger.entries.push_back(std::move(e));
            continue;
        }
        LedgerEntry comp{LedgerEntry::Kind::Component, c.min_vertex(), Rational(1), c.vertices};
        ledger.total += comp.credit;
        ledger.entries.push_back(std::move(comp));
        for (const auto& b : c.blocks) {
            LedgerEntry e{LedgerEntry::Kind::Block, b.edges.front(), Rational(1), b.vertices};
            ledger.total += e.credit;
            ledger.entries.push_back(std::move(e));
        }
        for (int br : c.bridges) {
            LedgerEntry e{LedgerEntry::Kind::Bridge, br, kBridgeCredit,
                          {std::min(g.edge(br).a, g.edge(br).b),
                           std::max(g.edge(br).a, g.edge(br).b)}};
            ledger.total += e.credit;
            ledger.entries.push_back(std::move(e));
        }
    }
    return ledger;
}

CreditLedger assign_credits(const EdgeSet& s, Scheme scheme) {
    return assign_credits(block_cut_decomposition(s), s.host(), scheme);
}

Rational cost(const EdgeSet& s, Scheme scheme) {
    return Rational(s.size()) + assign_credits(s, scheme).total;
}

Rational delta_contribution(const CreditLedger& before, const CreditLedger& after,
                            const std::vector<int>& scope_vertices) {
    std::vector<char> in_scope;
    int top = 0;
    for (int v : scope_vertices) top = std::max(top, v + 1);
    in_scope.assign(top, 0);
    for (int v : scope_vertices) in_scope[v] = 1;
    auto inside = [&](const LedgerEntry& e) {
        for (int v : e.vertices)
            if (v >= static_cast<int>(in_scope.size()) || !in_scope[v]) return false;
        return true;
    };

    Rational delta;
    for (const auto& e : after.entries)
        if (inside(e)) delta += e.credit;
    for (const auto& e : before.entries)
        if (inside(e)) delta -= e.credit;
    return delta;
}

} // namespace vcss
