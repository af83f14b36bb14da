#include "vcss/blocks.hpp"

#include <algorithm>
#include <cassert>

namespace vcss {

ComponentsResult components(const EdgeSet& s) {
    const Multigraph& g = s.host();
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    ComponentsResult out;
    for (int v = 0; v < n; ++v) {
        if (s.degree(v) == 0) {
            out.isolated.push_back(v);
            continue;
        }
        if (comp[v] != -1) continue;
        int id = out.count();
        out.vertices.emplace_back();
        out.edges.emplace_back();
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.vertices[id].push_back(u);
            for (int e : g.incident(u)) {
                if (!s.contains(e)) continue;
                int w = g.edge(e).other(u);
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.vertices[id].begin(), out.vertices[id].end());
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!s.contains(e)) continue;
        out.edges[comp[g.edge(e).a]].push_back(e);
    }
    return out;
}

namespace {

// Iterative lowpoint DFS over the S-subgraph of one component. Pops
// biconnected edge classes at articulation points; a one-edge class is a
// bridge, anything bigger is a block. Parallel edges are distinguished by
// edge id, so a doubled edge correctly forms a two-edge class.
struct BlockDfs {
    const Multigraph& g;
    const EdgeSet& s;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    int timer = 0;

    BlockDfs(const Multigraph& graph, const EdgeSet& set)
        : g(graph), s(set), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    struct Frame {
        int v;
        int parent_edge;
        size_t next = 0;
        int children = 0;
    };

    void run(int root, std::vector<std::vector<int>>& classes) {
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int e = inc[f.next++];
                if (!s.contains(e) || e == f.parent_edge) continue;
                int w = g.edge(e).other(f.v);
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    f.children++;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (low[done.v] >= disc[p.v]) {
                        // p.v separates this subtree: pop one class.
                        std::vector<int> cls;
                        while (true) {
                            int e = edge_stack.back();
                            edge_stack.pop_back();
                            cls.push_back(e);
                            if (e == done.parent_edge) break;
                        }
                        classes.push_back(std::move(cls));
                    }
                }
            }
        }
    }
};

} // namespace

BlockDecomposition block_cut_decomposition(const EdgeSet& s) {
    const Multigraph& g = s.host();
    ComponentsResult comps = components(s);
    BlockDecomposition out;
    out.isolated = comps.isolated;
    out.comp_count = comps.count();

    for (int ci = 0; ci < comps.count(); ++ci) {
        BCComponent c;
        c.vertices = comps.vertices[ci];
        c.edges = comps.edges[ci];

        std::vector<std::vector<int>> classes;
        BlockDfs dfs(g, s);
        dfs.run(c.vertices.front(), classes);

        // A vertex is a cut vertex iff it appears in two or more classes.
        std::vector<int> appear(g.vertex_count(), 0);
        std::vector<char> seen(g.vertex_count(), 0);
        for (auto& cls : classes) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int e : cls) {
                for (int v : {g.edge(e).a, g.edge(e).b}) {
                    if (!seen[v]) {
                        seen[v] = 1;
                        appear[v]++;
                    }
                }
            }
        }
        for (int v : c.vertices)
            if (appear[v] >= 2) c.cut_vertices.push_back(v);

        std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        });
        for (auto& cls : classes) {
            if (cls.size() == 1) {
                c.bridges.push_back(cls.front());
                continue;
            }
            Block b;
            b.edges = cls;
            std::sort(b.edges.begin(), b.edges.end());
            std::fill(seen.begin(), seen.end(), 0);
            for (int e : b.edges)
                for (int v : {g.edge(e).a, g.edge(e).b})
                    if (!seen[v]) {
                        seen[v] = 1;
                        b.vertices.push_back(v);
                    }
            std::sort(b.vertices.begin(), b.vertices.end());
            for (int v : b.vertices)
                if (appear[v] >= 2) b.cut_vertices.push_back(v);
            b.leaf = b.cut_vertices.size() == 1;
            c.blocks.push_back(std::move(b));
        }
        std::sort(c.bridges.begin(), c.bridges.end());
        out.bridge_count += static_cast<int>(c.bridges.size());
        c.two_connected =
            c.cut_vertices.empty() && static_cast<int>(c.vertices.size()) > 3;
        out.components.push_back(std::move(c));
    }
    return out;
}

bool is_2vc(const EdgeSet& s) {
    const Multigraph& g = s.host();
    if (g.vertex_count() <= 3) return false;
    BlockDecomposition d = block_cut_decomposition(s);
    return d.isolated.empty() && d.comp_count == 1 &&
           static_cast<int>(d.components[0].vertices.size()) == g.vertex_count() &&
           d.components[0].cut_vertices.empty();
}

bool is_2vc(const Multigraph& g) { return is_2vc(EdgeSet::full(g)); }

EdgeSet boundary(const EdgeSet& s, const std::vector<int>& w) {
    const Multigraph& g = s.host();
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : w) in[v] = 1;
    EdgeSet out(g);
    for (int e : s.ids())
        if (in[g.edge(e).a] != in[g.edge(e).b]) out.insert(e);
    return out;
}

namespace {

// Kuhn's augmenting-path search on the bipartite cross graph, vertices in
// ascending order throughout.
bool try_kuhn(int u, const std::vector<std::vector<int>>& adj, std::vector<char>& used,
              std::vector<int>& match_of) {
    for (int v : adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        if (match_of[v] == -1 || try_kuhn(match_of[v], adj, used, match_of)) {
            match_of[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_matching_across(const Multigraph& g,
                                                     const std::vector<int>& v1,
                                                     const std::vector<int>& v2, int k) {
    int n = g.vertex_count();
    std::vector<char> side2(n, 0);
    for (int v : v2) side2[v] = 1;
    std::vector<std::vector<int>> adj(n);
    for (int u : v1) {
        for (int w : g.neighbors(u))
            if (side2[w]) adj[u].push_back(w);
    }
    std::vector<int> match_of(n, -1);
    int matched = 0;
    std::vector<int> left = v1;
    std::sort(left.begin(), left.end());
    for (int u : left) {
        std::vector<char> used(n, 0);
        if (try_kuhn(u, adj, used, match_of)) ++matched;
        if (matched >= k) break;
    }
    if (matched < k) return std::nullopt;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
        if (match_of[v] != -1) pairs.emplace_back(match_of[v], v);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> edges;
    for (int i = 0; i < k; ++i) {
        auto id = g.edge_between(pairs[i].first, pairs[i].second);
        edges.push_back(*id);
    }
    return edges;
}

} // namespace vcss
