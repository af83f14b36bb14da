#ifndef VCSS_BLOCKS_HPP
#define VCSS_BLOCKS_HPP

// Connected components, block/bridge/cut-vertex decomposition and the basic
// set queries every other module consumes. All outputs are ordered by
// smallest vertex or edge id so runs are reproducible.

#include <optional>
#include <vector>

#include "vcss/multigraph.hpp"

namespace vcss {

struct ComponentsResult {
    // Parallel arrays, ordered by smallest vertex index.
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<int>> edges;
    std::vector<int> isolated; // degree 0 in S
    int count() const { return static_cast<int>(vertices.size()); }
};

ComponentsResult components(const EdgeSet& s);

struct Block {
    std::vector<int> vertices;      // ascending
    std::vector<int> edges;         // ascending
    std::vector<int> cut_vertices;  // cut vertices of the component inside this block
    bool leaf = false;              // exactly one cut vertex
};

struct BCComponent {
    std::vector<int> vertices;
    std::vector<int> edges;
    std::vector<Block> blocks;     // ordered by smallest edge id
    std::vector<int> bridges;      // ascending edge ids
    std::vector<int> cut_vertices; // ascending
    bool two_connected = false;    // no cut vertex and > 3 vertices
    int min_vertex() const { return vertices.front(); }
    int edge_total() const { return static_cast<int>(edges.size()); }
};

struct BlockDecomposition {
    std::vector<BCComponent> components; // ordered by smallest vertex index
    std::vector<int> isolated;
    int comp_count = 0;   // components with at least one edge
    int bridge_count = 0; // over all components
};

BlockDecomposition block_cut_decomposition(const EdgeSet& s);

// 2-vertex-connectivity of the whole graph: connected, no cut vertex, and
// more than three vertices.
bool is_2vc(const Multigraph& g);
// Same check for the spanning subgraph (V, S).
bool is_2vc(const EdgeSet& s);

// Members of S with exactly one endpoint in W.
EdgeSet boundary(const EdgeSet& s, const std::vector<int>& w);

// A matching of size exactly k between V1 and V2 ({V1,V2} partitions V),
// as edge ids, or nothing if none exists.
std::optional<std::vector<int>> find_matching_across(const Multigraph& g,
                                                     const std::vector<int>& v1,
                                                     const std::vector<int>& v2, int k);

} // namespace vcss

#endif
