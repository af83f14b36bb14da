#include "vcss/oracle.hpp"

#include <algorithm>
#include <functional>

#include "vcss/blocks.hpp"

namespace vcss {

std::optional<EdgeSet> find_hamiltonian_cycle(const Multigraph& g) {
    int n = g.vertex_count();
    if (n < 4) return std::nullopt;
    if (n > 22) throw ResourceExhausted("hamiltonian search capped at 22 vertices");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return std::nullopt;

    std::vector<std::uint32_t> adj(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edge(e).a] |= 1u << g.edge(e).b;
        adj[g.edge(e).b] |= 1u << g.edge(e).a;
    }
    // dp[mask] = end vertices of simple paths from 0 spanning exactly mask.
    std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
    dp[1] = 1;
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        while (ends) {
            int v = __builtin_ctz(ends);
            ends &= ends - 1;
            std::uint32_t nxt = adj[v] & ~mask;
            while (nxt) {
                int w = __builtin_ctz(nxt);
                nxt &= nxt - 1;
                dp[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    std::uint32_t closers = dp[full] & adj[0];
    if (!closers) return std::nullopt;

    // Reconstruct one cycle, preferring the smallest end vertex each step.
    std::vector<int> order;
    int cur = __builtin_ctz(closers);
    std::uint32_t mask = full;
    while (true) {
        order.push_back(cur);
        if (mask == 1) break;
        std::uint32_t prev_mask = mask & ~(1u << cur);
        std::uint32_t cands = dp[prev_mask] & adj[cur];
        cur = __builtin_ctz(cands);
        mask = prev_mask;
    }
    EdgeSet out(g);
    for (size_t i = 0; i < order.size(); ++i) {
        int a = order[i], b = order[(i + 1) % order.size()];
        out.insert(*g.edge_between(a, b));
    }
    return out;
}

namespace {

// Shared branch-and-bound over edge subsets: keep every vertex at degree two
// or more, then repair the validity predicate's violations by branching on
// the edges any valid superset must contain.
struct SubsetSearch {
    const Multigraph& g;
    std::int64_t max_nodes;
    std::int64_t nodes = 0;

    EdgeSet included;
    std::vector<char> excluded;
    int deficiency = 0;
    int best_size;
    EdgeSet best;
    bool found = false;

    // Returns candidate edges any valid superset must intersect, or empty if
    // `included` is already valid.
    std::function<std::vector<int>(const EdgeSet&)> violation_candidates;

    explicit SubsetSearch(const Multigraph& graph, std::int64_t budget)
        : g(graph), max_nodes(budget), included(graph), excluded(graph.edge_count(), 0),
          best(graph) {
        deficiency = 2 * g.vertex_count();
        best_size = g.edge_count() + 1;
    }

    void include(int e) {
        for (int v : {g.edge(e).a, g.edge(e).b})
            if (included.degree(v) < 2) --deficiency;
        included.insert(e);
    }
    void uninclude(int e) {
        included.erase(e);
        for (int v : {g.edge(e).a, g.edge(e).b})
            if (included.degree(v) < 2) ++deficiency;
    }
    bool available(int e) const { return !included.contains(e) && !excluded[e]; }

    void run() {
        if (++nodes > max_nodes) throw ResourceExhausted("oracle budget exceeded");
        if (included.size() + (deficiency + 1) / 2 >= best_size) return;

        if (deficiency > 0) {
            int pick = -1;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (included.degree(v) >= 2) continue;
                if (pick == -1 || included.degree(v) < included.degree(pick)) pick = v;
            }
            std::vector<int> cands;
            for (int e : g.incident(pick))
                if (available(e)) cands.push_back(e);
            if (static_cast<int>(cands.size()) < 2 - included.degree(pick)) return;
            ladder(cands);
            return;
        }

        std::vector<int> cands = violation_candidates(included);
        if (cands.empty()) {
            if (included.size() < best_size) {
                best_size = included.size();
                best = included;
                found = true;
            }
            return;
        }
        std::vector<int> avail;
        for (int e : cands)
            if (available(e)) avail.push_back(e);
        ladder(avail);
    }

    void ladder(const std::vector<int>& cands) {
        size_t flipped = 0;
        for (size_t i = 0; i < cands.size(); ++i) {
            include(cands[i]);
            run();
            uninclude(cands[i]);
            excluded[cands[i]] = 1;
            ++flipped;
        }
        for (size_t i = 0; i < flipped; ++i) excluded[cands[i]] = 0;
    }
};

std::vector<int> cross_component_edges(const Multigraph& g, const EdgeSet& s) {
    ComponentsResult comps = components(s);
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (int i = 0; i < comps.count(); ++i)
        for (int v : comps.vertices[i]) comp_of[v] = i;
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (s.contains(e)) continue;
        if (comp_of[g.edge(e).a] != comp_of[g.edge(e).b]) out.push_back(e);
    }
    return out;
}

// Edges joining different components of S - v (usable to remove the cut).
std::vector<int> cut_cover_edges(const Multigraph& g, const EdgeSet& s, int cut) {
    int n = g.vertex_count();
    std::vector<int> part(n, -1);
    int parts = 0;
    for (int start = 0; start < n; ++start) {
        if (start == cut || part[start] != -1) continue;
        int id = parts++;
        std::vector<int> stack{start};
        part[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                if (!s.contains(e)) continue;
                int w = g.edge(e).other(v);
                if (w == cut || part[w] != -1) continue;
                part[w] = id;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (s.contains(e)) continue;
        int a = g.edge(e).a, b = g.edge(e).b;
        if (a == cut || b == cut) continue;
        if (part[a] != part[b]) out.push_back(e);
    }
    return out;
}

} // namespace

EdgeSet exact_opt_2vcss(const Multigraph& g, const OracleBudget& budget) {
    int n = g.vertex_count();
    if (n > budget.max_vertices_opt)
        throw ResourceExhausted("instance above the optimum oracle cap");
    if (!is_2vc(g)) throw Infeasible("host graph is not 2-vertex-connected");

    if (auto ham = find_hamiltonian_cycle(g)) return *ham;

    SubsetSearch search(g, budget.max_nodes);
    search.best = EdgeSet::full(g);
    search.best_size = g.edge_count();
    search.found = true;
    search.violation_candidates = [&](const EdgeSet& s) -> std::vector<int> {
        BlockDecomposition d = block_cut_decomposition(s);
        if (d.comp_count > 1 || !d.isolated.empty()) return cross_component_edges(g, s);
        if (!d.components[0].cut_vertices.empty())
            return cut_cover_edges(g, s, d.components[0].cut_vertices.front());
        return {};
    };
    search.run();
    internal_check(search.found, "2VC host lost all solutions during search");
    return search.best;
}

EdgeSet exact_min_cycle_restricted_cover(const Multigraph& g, const OracleBudget& budget) {
    int n = g.vertex_count();
    if (n > budget.max_vertices_cover)
        throw ResourceExhausted("instance above the cover oracle cap");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) throw Infeasible("vertex of degree below two");

    ForbiddenCycles fc = enumerate_forbidden_cycles(g, budget.cycle_cap);

    SubsetSearch search(g, budget.max_nodes);
    {
        EdgeSet all = EdgeSet::full(g);
        bool cover_ok = true;
        for (int v = 0; v < n; ++v) cover_ok = cover_ok && all.degree(v) >= 2;
        if (cover_ok && is_cycle_restricted(all, fc).ok) {
            search.best = all;
            search.best_size = all.size();
            search.found = true;
        }
    }
    search.violation_candidates = [&](const EdgeSet& s) -> std::vector<int> {
        CycleRestrictedReport rep = is_cycle_restricted(s, fc);
        if (rep.ok) return {};
        const auto& viol = rep.violations.front();
        std::vector<char> in(g.vertex_count(), 0);
        for (int v : viol.vertices) in[v] = 1;
        std::vector<int> out;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (s.contains(e)) continue;
            if (in[g.edge(e).a] != in[g.edge(e).b]) out.push_back(e);
        }
        return out;
    };
    search.run();
    if (!search.found) throw Infeasible("no cycle-restricted 2-edge-cover exists");
    return search.best;
}

} // namespace vcss
