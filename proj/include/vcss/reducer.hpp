#ifndef VCSS_REDUCER_HPP
#define VCSS_REDUCER_HPP

// Removal of small components from a strongly canonical cover without
// raising its cost: shortcut pairs, merging paths, and the three case
// reductions, each validated at runtime with exact rational deltas.

#include <optional>
#include <string>
#include <vector>

#include "vcss/blocks.hpp"
#include "vcss/credits.hpp"
#include "vcss/multigraph.hpp"
#include "vcss/structure.hpp"

namespace vcss {

struct ShortcutPair {
    int u = -1, v = -1;       // pair inside the cycle component
    int x = -1, y = -1;       // matched landing vertices outside it
    int edge_ux = -1, edge_vy = -1;
    std::vector<int> path_vertices; // u .. v, spanning the component
    std::vector<int> path_edges;    // host edges; first and last on the cycle
};

struct MergingPath {
    std::vector<int> vertices; // left endpoint, internals, right endpoint
    std::vector<int> edges;
    std::optional<ShortcutPair> left_witness;  // pair {u_L, v_L}, matching into u_1 / w_L
    std::optional<ShortcutPair> right_witness; // mirror image
};

struct ReduceStep {
    int case_id = 0;    // 1, 2, 3
    std::string branch; // which sub-argument fired
    int size_before = 0, size_after = 0;
    int comp_before = 0, comp_after = 0;
    Rational cost_before, cost_after;
    Rational delta() const { return cost_after - cost_before; }
};

struct ReduceResult {
    EdgeSet cover;
    std::vector<ReduceStep> trace;
};

// Shortcut pair of a 4- or 5-cycle component whose matching uses the given
// outside vertex; exhaustive search, deterministic order.
ShortcutPair find_shortcut_pair(const EdgeSet& s, const std::vector<int>& cycle_vertices,
                                int anchor);
// Shortcut pair of a 4- or 5-cycle component landing in two distinct other
// components.
ShortcutPair find_shortcut_pair_distinct(const EdgeSet& s, const std::vector<int>& cycle_vertices);
// Constructive shortcut pair of a 6-cycle component of a cycle-restricted
// cover, via a cross matching of size three.
ShortcutPair find_shortcut_pair_six(const EdgeSet& s, const std::vector<int>& cycle_vertices);

// One reduction round per case; each returns the rewritten cover and records
// a step. Preconditions follow the dispatch rules of remove_all_small.
EdgeSet reduce_case1(const EdgeSet& s, const ForbiddenCycles& fc, ReduceStep* step = nullptr);
EdgeSet reduce_case2(const EdgeSet& s, const ForbiddenCycles& fc, ReduceStep* step = nullptr);
EdgeSet reduce_case3(const EdgeSet& s, const ForbiddenCycles& fc, ReduceStep* step = nullptr);

// Remove every small component: 6-cycles first, then 4/5-cycles seeing two
// or more components, then the single-neighbor ones.
ReduceResult remove_all_small(const EdgeSet& s, const ForbiddenCycles& fc);

} // namespace vcss

#endif
