#ifndef VCSS_CANONICAL_HPP
#define VCSS_CANONICAL_HPP

// Rewrite a cycle-restricted cover into strongly canonical form of the same
// size (every small component a cycle, every leaf-block of a complex
// component on at least five vertices), then prune to minimality.

#include <string>
#include <vector>

#include "vcss/multigraph.hpp"
#include "vcss/structure.hpp"

namespace vcss {

struct RewriteStep {
    std::string rule; // drop-chord | bowtie | k23 | leaf-3 | leaf-4
    int removed_edge;
    int added_edge;
    std::pair<int, int> potential_before; // (components, bridges)
    std::pair<int, int> potential_after;
};

struct Canonicalized {
    EdgeSet cover;
    std::vector<RewriteStep> trace;
};

struct CanonicalCheck {
    bool ok = false;
    std::string why;
};

// Strong form: cycle-restricted, small components (<= 6 edges) are cycles,
// leaf-blocks in complex components have >= 5 vertices.
CanonicalCheck check_strongly_canonical(const EdgeSet& s, const ForbiddenCycles& fc);
// Weak form: components with <= 5 edges are cycles, same leaf-block rule.
CanonicalCheck check_canonical(const EdgeSet& s);

Canonicalized to_strongly_canonical(const EdgeSet& f, const ForbiddenCycles& fc);

// Greedily drop edges (ascending id, repeated passes) while the strong form
// survives; the result admits no single-edge removal.
EdgeSet prune_to_minimal(const EdgeSet& s, const ForbiddenCycles& fc);

} // namespace vcss

#endif
