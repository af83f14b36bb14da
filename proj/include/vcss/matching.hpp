#ifndef VCSS_MATCHING_HPP
#define VCSS_MATCHING_HPP

// General-graph maximum matching and the simple-2-matching reduction built on
// top of it. These back the matching-duality route to minimum 2-edge-covers;
// the branch-and-bound cover solver is the independent second route.

#include <vector>

#include "vcss/multigraph.hpp"

namespace vcss {

// Maximum cardinality matching on a simple graph given as adjacency lists;
// returns mate[] with -1 for exposed vertices.
std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj);

// Maximum simple 2-matching (every vertex covered by at most two member
// edges, parallel edges usable independently).
EdgeSet max_two_matching(const Multigraph& g);

} // namespace vcss

#endif
