#ifndef VCSS_CREDITS_HPP
#define VCSS_CREDITS_HPP

// Exact-rational credit assignment over a cover's block decomposition. Every
// accept/reject decision in the reducer compares these totals, so the
// arithmetic is exact end to end.

#include <vector>

#include "vcss/blocks.hpp"
#include "vcss/multigraph.hpp"
#include "vcss/rational.hpp"

namespace vcss {

enum class Scheme {
    Standard, // small <= 6 edges at 23/72 per edge; large >= 7 edges
    Legacy,   // small <= 5 edges at 1/3 per edge; large >= 6 edges
};

struct LedgerEntry {
    enum class Kind { Component, Block, Bridge };
    Kind kind;
    int key; // component/block: smallest vertex / smallest edge id; bridge: edge id
    Rational credit;
    std::vector<int> vertices; // support, ascending
};

struct CreditLedger {
    Scheme scheme = Scheme::Standard;
    std::vector<LedgerEntry> entries;
    Rational total;
};

CreditLedger assign_credits(const EdgeSet& s, Scheme scheme);
CreditLedger assign_credits(const BlockDecomposition& d, const Multigraph& g, Scheme scheme);

// |S| + credit total.
Rational cost(const EdgeSet& s, Scheme scheme);

// After-minus-before restricted to entries whose support lies inside the
// scope. Entries spanning past the scope (a merged component, a bridge into
// it) are excluded: those are exactly the terms the reducer accounts
// separately.
Rational delta_contribution(const CreditLedger& before, const CreditLedger& after,
                            const std::vector<int>& scope_vertices);

} // namespace vcss

#endif
