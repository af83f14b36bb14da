#include "vcss/matching.hpp"

#include <algorithm>
#include <cassert>

namespace vcss {

namespace {

// Classic blossom-shrinking search. base[] tracks contracted blossoms, p[]
// the alternating forest; one BFS per exposed root.
struct Blossom {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, p, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(int n_, const std::vector<std::vector<int>>& adj_)
        : n(n_), adj(adj_), match(n_, -1), p(n_, -1), base(n_), used(n_, 0),
          in_blossom(n_, 0) {}

    int lca(int a, int b) {
        std::vector<char> mark(n, 0);
        while (true) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        while (true) {
            b = base[b];
            if (mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<int>& q) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
        (void)q;
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::vector<int> q{root};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, to, q);
                    mark_path(to, cur, v, q);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

} // namespace

std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj) {
    Blossom b(n, adj);
    b.run();
    return b.match;
}

EdgeSet max_two_matching(const Multigraph& g) {
    // Tutte gadget: two copies per vertex, a two-vertex gadget per edge.
    // A maximum matching of the gadget graph of size m + k yields a maximum
    // 2-matching of size k.
    int n = g.vertex_count();
    int m = g.edge_count();
    int total = 2 * n + 2 * m;
    auto copy_of = [&](int v, int i) { return 2 * v + i; };
    auto end_a = [&](int e) { return 2 * n + 2 * e; };
    auto end_b = [&](int e) { return 2 * n + 2 * e + 1; };

    std::vector<std::vector<int>> adj(total);
    for (int e = 0; e < m; ++e) {
        int a = g.edge(e).a, b = g.edge(e).b;
        adj[end_a(e)].push_back(end_b(e));
        adj[end_b(e)].push_back(end_a(e));
        for (int i = 0; i < 2; ++i) {
            adj[copy_of(a, i)].push_back(end_a(e));
            adj[end_a(e)].push_back(copy_of(a, i));
            adj[copy_of(b, i)].push_back(end_b(e));
            adj[end_b(e)].push_back(copy_of(b, i));
        }
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());

    std::vector<int> mate = max_matching(total, adj);

    // Normalize half-used gadgets: if only one side of an edge gadget is tied
    // to a vertex copy, tie the gadget internally instead. Size is unchanged
    // and afterwards each gadget is either internal or fully attached.
    for (int e = 0; e < m; ++e) {
        int ea = end_a(e), eb = end_b(e);
        bool a_in = mate[ea] != -1 && mate[ea] != eb;
        bool b_in = mate[eb] != -1 && mate[eb] != ea;
        if (a_in && !b_in) {
            assert(mate[eb] == -1);
            mate[mate[ea]] = -1;
            mate[ea] = eb;
            mate[eb] = ea;
        } else if (b_in && !a_in) {
            assert(mate[ea] == -1);
            mate[mate[eb]] = -1;
            mate[eb] = ea;
            mate[ea] = eb;
        }
    }

    EdgeSet out(g);
    for (int e = 0; e < m; ++e) {
        int ea = end_a(e), eb = end_b(e);
        if (mate[ea] != -1 && mate[ea] != eb && mate[eb] != -1 && mate[eb] != ea)
            out.insert(e);
    }
    return out;
}

} // namespace vcss
