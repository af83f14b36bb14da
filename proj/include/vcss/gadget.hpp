#ifndef VCSS_GADGET_HPP
#define VCSS_GADGET_HPP

// The host surgery behind the cycle-restricted cover computation: contract
// the chosen 6-cycles, replace the chosen isolated pairs by a guard gadget,
// and move covers back and forth across the surgery.

#include <array>
#include <optional>
#include <vector>

#include "vcss/cover.hpp"
#include "vcss/multigraph.hpp"
#include "vcss/structure.hpp"

namespace vcss {

struct Families {
    // Vertex-disjoint 6-cycles with an isolated triple, greedy lexicographic.
    std::vector<std::array<int, 6>> six_cycles;
    // Vertex-disjoint 4-cycles with an isolated pair, avoiding the 6-cycles'
    // vertices, with no host edge joining two chosen pairs.
    std::vector<std::array<int, 4>> four_cycles;
    std::vector<IsolationWitness> pair_witnesses; // pair + guards per 4-cycle
    bool empty() const { return six_cycles.empty() && four_cycles.empty(); }
};

Families select_maximal_families(const Multigraph& g,
                                 std::int64_t cycle_cap = 1'000'000);

struct ContractedCycle {
    std::array<int, 6> cycle; // host vertices
    int merged_vertex;        // vertex id in the reduced graph
    std::vector<int> dropped_edges; // host edge ids inside the cycle's vertex set
};

struct PairGadget {
    std::array<int, 2> removed;      // u1 < u2 (host)
    std::array<int, 3> guards;       // v1 < v2 < v3 (host)
    std::array<int, 4> cycle;        // the chosen 4-cycle (host)
    std::array<int, 3> guard_images; // reduced-graph vertex of each guard
    std::array<int, 3> vprime;       // new vertices (reduced graph)
    int hub;                         // new vertex w (reduced graph)
    std::array<std::vector<int>, 3> bundle_edges;  // reduced edge ids v_i -- v'_i
    std::array<std::vector<int>, 3> removed_edges; // host edge ids u_j -- v_i
    std::array<int, 3> hub_edges;    // reduced edge ids v'_i -- w
    // Guards that were contracted in step one or sit on another chosen
    // 4-cycle, kept for audit.
    std::vector<std::pair<int, std::string>> guard_overlaps;
};

struct GadgetMap {
    std::vector<ContractedCycle> contracted;
    std::vector<PairGadget> pairs;
    std::vector<int> vertex_image;  // host vertex -> reduced vertex (-1 removed)
    std::vector<int> edge_image;    // host edge -> reduced edge (-1 dropped)
    std::vector<int> edge_preimage; // reduced edge -> host edge (-1 new)
};

struct ReducedHost {
    const Multigraph* host = nullptr;
    Multigraph graph;       // the reduced graph
    TriangleSet triangles;  // triangles avoiding merged vertices
    GadgetMap map;
    Families families;
    ForbiddenCycles host_forbidden; // computed once; reused by project/lift
};

ReducedHost build_gprime(const Multigraph& g, const Families& families,
                         std::int64_t cycle_cap = 1'000'000);

// Push a cycle-restricted cover of the host through the surgery; the result
// is a T-free 2-edge-cover of the reduced graph with
// |result| <= |F| - 6*(#contracted) + 2*(#pairs).
EdgeSet project_cover(const EdgeSet& f, const ReducedHost& rh);

// Pull a T-free 2-edge-cover of the reduced graph back to a cycle-restricted
// cover of the host with |result| <= |F'| + 6*(#contracted) - 2*(#pairs).
EdgeSet lift_cover(const EdgeSet& fprime, const ReducedHost& rh);

enum class CoverBackend { Exact, Heuristic };

struct CycleRestrictedOptions {
    CoverBackend backend = CoverBackend::Exact;
    SolverBudget budget{};
    // Run the reduction even below the small-instance cutoff instead of
    // delegating to the exact oracle.
    bool force_reduction = false;
    std::int64_t cycle_cap = 1'000'000;
    CoverStats* stats = nullptr;
};

EdgeSet compute_cycle_restricted_cover(const Multigraph& g, double epsilon,
                                       const CycleRestrictedOptions& options = {});

} // namespace vcss

#endif
