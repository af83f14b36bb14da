#ifndef VCSS_ORACLE_HPP
#define VCSS_ORACLE_HPP

// Independent brute-force optima for desk-scale instances. These are the
// reference values every other module is measured against, so they share no
// solver machinery with the modules they check.

#include "vcss/cover.hpp"
#include "vcss/multigraph.hpp"
#include "vcss/structure.hpp"

namespace vcss {

struct OracleBudget {
    std::int64_t max_nodes = 10'000'000;
    int max_vertices_opt = 14;    // cap for the spanning-subgraph optimum
    int max_vertices_cover = 13;  // cap for cover optima
    std::int64_t cycle_cap = 1'000'000;
};

// Minimum 2-vertex-connected spanning subgraph, exact. Hamiltonian-cycle
// early exit, then branch and bound over edge subsets.
EdgeSet exact_opt_2vcss(const Multigraph& g, const OracleBudget& budget = {});

// Minimum cycle-restricted 2-edge-cover, exact.
EdgeSet exact_min_cycle_restricted_cover(const Multigraph& g, const OracleBudget& budget = {});

// Hamiltonian cycle as an edge set, if one exists (bitmask DP, n <= 24).
std::optional<EdgeSet> find_hamiltonian_cycle(const Multigraph& g);

} // namespace vcss

#endif
