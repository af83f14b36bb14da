#ifndef VCSS_STRUCTURE_HPP
#define VCSS_STRUCTURE_HPP

// Structuredness of the input graph, isolated pairs/triples, the forbidden
// cycle patterns and the cycle-restricted property of covers.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vcss/blocks.hpp"
#include "vcss/errors.hpp"
#include "vcss/multigraph.hpp"

namespace vcss {

struct StructureViolation {
    enum class Kind { IrrelevantEdge, NonIsolatingTwoCut, RemovableFiveCycle };
    Kind kind;
    int edge = -1;                 // IrrelevantEdge
    std::pair<int, int> cut{-1, -1}; // NonIsolatingTwoCut
    std::vector<int> cycle;        // RemovableFiveCycle
};

struct StructureReport {
    bool simple = false;
    bool two_connected = false;
    std::vector<StructureViolation> violations;
    bool is_structured() const { return simple && two_connected && violations.empty(); }
};

// Exhaustive scan over vertex pairs and 5-cycles.
StructureReport analyze_structure(const Multigraph& g);

struct IsolationWitness {
    std::vector<int> isolated;   // the pair or triple W, ascending
    std::array<int, 3> guards;   // v1 < v2 < v3
};

// Guard triple disjoint from {u1,u2} covering N(u1) and N(u2), if any.
std::optional<IsolationWitness> find_isolated_pair(const Multigraph& g, int u1, int u2);

struct ForbiddenCycles {
    // 4-cycles whose vertex set contains an isolated pair; cycle stored in
    // canonical traversal order with its witness.
    std::vector<std::array<int, 4>> four_cycles;
    std::vector<IsolationWitness> four_witnesses;
    // 6-cycles (u1..u6) whose alternating triple {u1,u3,u5} is isolated by
    // {u2,u4,u6}.
    std::vector<std::array<int, 6>> six_cycles;
    std::vector<IsolationWitness> six_witnesses;
};

// Exhaustive enumeration of cycles of length <= 6; throws ResourceExhausted
// past the cycle cap.
ForbiddenCycles enumerate_forbidden_cycles(const Multigraph& g,
                                           std::int64_t cycle_cap = 1'000'000);

struct CycleRestrictedReport {
    enum class Kind { TriangleComponent, FourCycleComponent, SixCycleBoundary };
    struct Violation {
        Kind kind;
        std::vector<int> vertices;
        int boundary_size = -1; // SixCycleBoundary only
    };
    bool ok = false;
    std::vector<Violation> violations;
};

// Checks (a) no triangle component, (b) no component that is a 4-cycle with
// an isolated pair of the host, (c) every 6-cycle with an isolated triple of
// the host has at least two member edges on its boundary.
// Throws PreconditionViolated if S is not a 2-edge-cover.
CycleRestrictedReport is_cycle_restricted(const EdgeSet& s, const ForbiddenCycles& fc);
CycleRestrictedReport is_cycle_restricted(const EdgeSet& s);

// Enumerate simple cycles of exact length k in canonical orientation
// (smallest vertex first, second < last). The callback returns false to stop.
void enumerate_cycles(const Multigraph& g, int k, std::int64_t cycle_cap,
                      const std::function<bool(const std::vector<int>&)>& emit);

} // namespace vcss

#endif
