#include "vcss/cover.hpp"

#include <algorithm>
#include <cassert>

#include "vcss/blocks.hpp"
#include "vcss/matching.hpp"

namespace vcss {

TriangleSet::TriangleSet(const Multigraph& host, std::vector<std::array<int, 3>> triples)
    : host_(&host), triples_(std::move(triples)) {
    for (auto& t : triples_) std::sort(t.begin(), t.end());
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
    validate_and_resolve();
}

void TriangleSet::validate_and_resolve() {
    edges_.clear();
    edges_.reserve(triples_.size());
    for (const auto& t : triples_) {
        if (t[0] == t[1] || t[1] == t[2])
            throw PreconditionViolated("triangle with repeated vertex");
        std::array<int, 3> ids{};
        const std::array<std::pair<int, int>, 3> pairs{
            {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}};
        for (int i = 0; i < 3; ++i) {
            auto [a, b] = pairs[i];
            int mult = host_->multiplicity(a, b);
            if (mult == 0) throw PreconditionViolated("triple does not induce a triangle");
            if (mult > 1)
                throw PreconditionViolated("triangle edge has a parallel copy");
            ids[i] = *host_->edge_between(a, b);
        }
        edges_.push_back(ids);
    }
}

bool TriangleSet::contains(std::array<int, 3> triple) const {
    std::sort(triple.begin(), triple.end());
    return std::binary_search(triples_.begin(), triples_.end(), triple);
}

namespace {

void require_min_degree_two(const Multigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw Infeasible("vertex " + std::to_string(v) + " has degree below two");
}

// Is this component exactly the given triangle (three vertices, the three
// triangle edges and nothing else)?
bool component_is_triple(const Multigraph& g, const std::vector<int>& comp_vertices,
                         const std::vector<int>& comp_edges, const TriangleSet& t) {
    if (comp_vertices.size() != 3 || comp_edges.size() != 3) return false;
    std::array<int, 3> triple{comp_vertices[0], comp_vertices[1], comp_vertices[2]};
    if (!t.contains(triple)) return false;
    for (int e : comp_edges) {
        int a = g.edge(e).a, b = g.edge(e).b;
        if (a == b) return false;
    }
    return true;
}

struct TfreeSearch {
    const Multigraph& g;
    const TriangleSet& t;
    const SolverBudget& budget;
    CoverStats& stats;

    EdgeSet included;
    std::vector<char> excluded;
    int deficiency_total = 0; // sum over vertices of max(0, 2 - deg)
    int best_size;
    EdgeSet best;
    bool found = false;

    TfreeSearch(const Multigraph& graph, const TriangleSet& tset, const SolverBudget& b,
                CoverStats& st)
        : g(graph), t(tset), budget(b), stats(st), included(graph),
          excluded(graph.edge_count(), 0), best(graph) {
        deficiency_total = 2 * g.vertex_count();
        best_size = g.edge_count() + 1;
    }

    int vertex_deficiency(int v) const { return std::max(0, 2 - included.degree(v)); }

    void include(int e) {
        for (int v : {g.edge(e).a, g.edge(e).b})
            if (included.degree(v) < 2) --deficiency_total;
        included.insert(e);
    }
    void uninclude(int e) {
        included.erase(e);
        for (int v : {g.edge(e).a, g.edge(e).b})
            if (included.degree(v) < 2) ++deficiency_total;
    }

    // available = not included, not excluded
    bool available(int e) const { return !included.contains(e) && !excluded[e]; }

    void record_if_better() {
        if (included.size() < best_size) {
            best_size = included.size();
            best = included;
            found = true;
        }
    }

    void search() {
        if (++stats.nodes > budget.max_nodes)
            throw ResourceExhausted("cover solver budget exceeded");
        int lower = included.size() + (deficiency_total + 1) / 2;
        if (lower >= best_size) return;

        if (deficiency_total == 0) {
            auto bad = find_ttriangle_component(included, t);
            if (!bad) {
                record_if_better();
                return;
            }
            // Every valid superset attaches the triangle to something else:
            // branch over its boundary edges.
            std::vector<int> cands;
            std::vector<char> in_tri(g.vertex_count(), 0);
            for (int v : *bad) in_tri[v] = 1;
            for (int v : *bad)
                for (int e : g.incident(v))
                    if (available(e) && (in_tri[g.edge(e).a] != in_tri[g.edge(e).b]))
                        cands.push_back(e);
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            branch_ladder(cands);
            return;
        }

        // Most constrained deficient vertex, smallest (degree, id).
        int pick = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (vertex_deficiency(v) == 0) continue;
            if (pick == -1 || included.degree(v) < included.degree(pick)) pick = v;
        }
        std::vector<int> cands;
        for (int e : g.incident(pick))
            if (available(e)) cands.push_back(e);
        if (static_cast<int>(cands.size()) < vertex_deficiency(pick)) return;
        branch_ladder(cands);
    }

    // Branch i includes cands[i] and excludes cands[0..i-1]; some candidate
    // must be in any solution below this node.
    void branch_ladder(const std::vector<int>& cands) {
        size_t flipped = 0;
        for (size_t i = 0; i < cands.size(); ++i) {
            include(cands[i]);
            search();
            uninclude(cands[i]);
            excluded[cands[i]] = 1;
            ++flipped;
        }
        for (size_t i = 0; i < flipped; ++i) excluded[cands[i]] = 0;
    }
};

} // namespace

std::optional<std::array<int, 3>> find_ttriangle_component(const EdgeSet& s,
                                                           const TriangleSet& t) {
    ComponentsResult comps = components(s);
    for (int i = 0; i < comps.count(); ++i)
        if (component_is_triple(s.host(), comps.vertices[i], comps.edges[i], t))
            return std::array<int, 3>{comps.vertices[i][0], comps.vertices[i][1],
                                      comps.vertices[i][2]};
    return std::nullopt;
}

EdgeSet min_2_edge_cover(const Multigraph& g) {
    require_min_degree_two(g);
    EdgeSet m2 = max_two_matching(g);
    EdgeSet cover = m2;
    for (int v = 0; v < g.vertex_count(); ++v) {
        while (cover.degree(v) < 2) {
            int pick = -1;
            for (int e : g.incident(v))
                if (!cover.contains(e)) {
                    pick = e;
                    break;
                }
            internal_check(pick != -1, "cover repair ran out of incident edges");
            // The far endpoint must already be full, else the 2-matching was
            // not maximum.
            internal_check(m2.degree(g.edge(pick).other(v)) == 2,
                           "2-matching maximality violated during repair");
            cover.insert(pick);
        }
    }
    return cover;
}

EdgeSet exact_min_tfree_2_edge_cover(const Multigraph& g, const TriangleSet& t,
                                     const SolverBudget& budget, CoverStats* stats) {
    require_min_degree_two(g);
    CoverStats local;
    CoverStats& st = stats ? *stats : local;
    st.exact = true;

    TfreeSearch search(g, t, budget, st);
    // Seed the incumbent with the heuristic so pruning bites immediately.
    try {
        EdgeSet seed = heuristic_tfree_2_edge_cover(g, t);
        search.best = seed;
        search.best_size = seed.size();
        search.found = true;
    } catch (const Infeasible&) {
    }
    search.search();
    if (!search.found) throw Infeasible("no T-free 2-edge-cover exists");
    return search.best;
}

EdgeSet tfree_2matching_to_cover(const Multigraph& g, const TriangleSet& t, const EdgeSet& m) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (m.degree(v) > 2) throw PreconditionViolated("input is not a 2-matching");
    if (find_ttriangle_component(m, t))
        throw PreconditionViolated("input 2-matching has a T-triangle component");

    EdgeSet cover = m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        while (cover.degree(v) < 2) {
            int pick = -1;
            for (int e : g.incident(v)) {
                if (cover.contains(e)) continue;
                cover.insert(e);
                bool bad = find_ttriangle_component(cover, t).has_value();
                cover.erase(e);
                if (!bad) {
                    pick = e;
                    break;
                }
            }
            if (pick == -1)
                throw Infeasible("vertex " + std::to_string(v) +
                                 " cannot be repaired without forming a T-triangle");
            cover.insert(pick);
        }
    }
    return cover;
}

EdgeSet heuristic_tfree_2_edge_cover(const Multigraph& g, const TriangleSet& t,
                                     CoverStats* stats) {
    require_min_degree_two(g);
    if (stats) stats->exact = false;
    EdgeSet m2 = max_two_matching(g);
    // Break T-triangle components by dropping their smallest edge.
    while (auto bad = find_ttriangle_component(m2, t)) {
        ComponentsResult comps = components(m2);
        for (int i = 0; i < comps.count(); ++i) {
            if (comps.vertices[i] == std::vector<int>{(*bad)[0], (*bad)[1], (*bad)[2]}) {
                m2.erase(comps.edges[i].front());
                break;
            }
        }
    }
    return tfree_2matching_to_cover(g, t, m2);
}

bool validate_appendix_precondition(const Multigraph& g, const TriangleSet& t, const EdgeSet& m,
                                    std::array<int, 3> triangle) {
    std::sort(triangle.begin(), triangle.end());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (m.degree(v) > 2) throw PreconditionViolated("input is not a 2-matching");
    const std::array<std::pair<int, int>, 3> pairs{
        {{triangle[0], triangle[1]}, {triangle[1], triangle[2]}, {triangle[0], triangle[2]}}};
    int in_m = 0;
    std::vector<int> tri_edges;
    for (auto [a, b] : pairs) {
        if (g.multiplicity(a, b) == 0)
            throw PreconditionViolated("triple does not induce a triangle");
        for (int e : g.edges_between(a, b)) {
            tri_edges.push_back(e);
            if (m.contains(e)) ++in_m;
        }
    }
    if (in_m != 2) throw PreconditionViolated("triangle must have exactly two edges in M");

    // Look for a T-triangle fully inside M sharing an edge with the triangle.
    const auto& triples = t.triples();
    const auto& tedges = t.triple_edges();
    for (size_t i = 0; i < triples.size(); ++i) {
        bool inside = m.contains(tedges[i][0]) && m.contains(tedges[i][1]) &&
                      m.contains(tedges[i][2]);
        if (!inside) continue;
        for (int e : tedges[i])
            for (int f : tri_edges)
                if (e == f) return false;
    }
    return true;
}

} // namespace vcss
