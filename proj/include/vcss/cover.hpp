#ifndef VCSS_COVER_HPP
#define VCSS_COVER_HPP

// Minimum 2-edge-covers and minimum T-free 2-edge-covers. Two independent
// routes: matching duality for the unrestricted problem, and an exact
// branch-and-bound for the T-free one, with a greedy heuristic behind the
// same interface for instances the exact solver cannot afford.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "vcss/errors.hpp"
#include "vcss/multigraph.hpp"

namespace vcss {

// A set of triangles none of whose edges has a parallel copy in the host.
// That restriction is what keeps 2-matching reasoning sound on multigraphs
// and is enforced at construction.
class TriangleSet {
public:
    explicit TriangleSet(const Multigraph& host) : host_(&host) {}
    TriangleSet(const Multigraph& host, std::vector<std::array<int, 3>> triples);

    // All triangles of the host whose vertices all satisfy keep(v).
    template <typename Pred>
    static TriangleSet all_triangles(const Multigraph& host, Pred keep);
    static TriangleSet all_triangles(const Multigraph& host) {
        return all_triangles(host, [](int) { return true; });
    }

    const Multigraph& host() const { return *host_; }
    const std::vector<std::array<int, 3>>& triples() const { return triples_; }
    const std::vector<std::array<int, 3>>& triple_edges() const { return edges_; }
    bool empty() const { return triples_.empty(); }
    int size() const { return static_cast<int>(triples_.size()); }
    bool contains(std::array<int, 3> triple) const;

private:
    void validate_and_resolve();

    const Multigraph* host_;
    std::vector<std::array<int, 3>> triples_; // each sorted; list sorted
    std::vector<std::array<int, 3>> edges_;   // resolved edge ids per triple
};

template <typename Pred>
TriangleSet TriangleSet::all_triangles(const Multigraph& host, Pred keep) {
    std::vector<std::array<int, 3>> ts;
    int n = host.vertex_count();
    for (int a = 0; a < n; ++a) {
        if (!keep(a)) continue;
        auto na = host.neighbors(a);
        for (int b : na) {
            if (b <= a || !keep(b)) continue;
            for (int c : na) {
                if (c <= b || !keep(c)) continue;
                if (host.adjacent(b, c)) ts.push_back({a, b, c});
            }
        }
    }
    return TriangleSet(host, std::move(ts));
}

struct SolverBudget {
    std::int64_t max_nodes = 10'000'000;
};

struct CoverStats {
    std::int64_t nodes = 0;
    bool exact = true;
};

// Exact minimum 2-edge-cover via maximum 2-matching duality.
EdgeSet min_2_edge_cover(const Multigraph& g);

// Exact minimum T-free 2-edge-cover by branch and bound.
EdgeSet exact_min_tfree_2_edge_cover(const Multigraph& g, const TriangleSet& t,
                                     const SolverBudget& budget = {},
                                     CoverStats* stats = nullptr);

// Documented greedy stand-in for large instances: maximum 2-matching, break
// T-triangle components, repair deficiencies. Marked approximate in stats.
EdgeSet heuristic_tfree_2_edge_cover(const Multigraph& g, const TriangleSet& t,
                                     CoverStats* stats = nullptr);

// Raise a T-free 2-matching to a T-free 2-edge-cover by greedy repair.
EdgeSet tfree_2matching_to_cover(const Multigraph& g, const TriangleSet& t, const EdgeSet& m);

// First component of S that is exactly a T-triangle, as its vertex triple.
std::optional<std::array<int, 3>> find_ttriangle_component(const EdgeSet& s,
                                                           const TriangleSet& t);

// Property harness for the 2-matching/triangle interaction on multigraphs:
// given a 2-matching M and a triangle (as a vertex triple) with exactly two
// of its edges in M, reports whether M avoids every T-triangle sharing an
// edge with it. Always true when the TriangleSet invariant holds.
bool validate_appendix_precondition(const Multigraph& g, const TriangleSet& t, const EdgeSet& m,
                                    std::array<int, 3> triangle);

} // namespace vcss

#endif
