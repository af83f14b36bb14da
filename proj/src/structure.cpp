#include "vcss/structure.hpp"

#include <algorithm>
#include <functional>

namespace vcss {

namespace {

// Connected component sizes of G minus a set of removed vertices.
std::vector<int> component_sizes_without(const Multigraph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> off(n, 0);
    for (int v : removed) off[v] = 1;
    std::vector<char> seen(n, 0);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (off[s] || seen[s]) continue;
        int size = 0;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int e : g.incident(v)) {
                int w = g.edge(e).other(v);
                if (!off[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        sizes.push_back(size);
    }
    return sizes;
}

} // namespace

void enumerate_cycles(const Multigraph& g, int k, std::int64_t cycle_cap,
                      const std::function<bool(const std::vector<int>&)>& emit) {
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    std::int64_t emitted = 0;
    bool stop = false;

    std::function<void(int)> extend = [&](int start) {
        if (stop) return;
        int v = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (g.adjacent(v, start) && path[1] < path.back()) {
                if (++emitted > cycle_cap)
                    throw ResourceExhausted("cycle enumeration cap exceeded");
                if (!emit(path)) stop = true;
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            extend(start);
            path.pop_back();
            on_path[w] = 0;
            if (stop) return;
        }
    };

    for (int s = 0; s < n && !stop; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
}

StructureReport analyze_structure(const Multigraph& g) {
    StructureReport rep;
    rep.simple = g.simple();
    rep.two_connected = is_2vc(g);
    int n = g.vertex_count();

    // Pairwise-removal scan for 2-vertex-cuts.
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (n - 2 <= 1) continue;
            auto sizes = component_sizes_without(g, {u, v});
            if (sizes.size() <= 1) continue;
            if (g.adjacent(u, v)) {
                StructureViolation sv;
                sv.kind = StructureViolation::Kind::IrrelevantEdge;
                sv.edge = *g.edge_between(u, v);
                sv.cut = {u, v};
                rep.violations.push_back(sv);
            }
            bool non_isolating = sizes.size() >= 3;
            if (sizes.size() == 2 && sizes[0] >= 2 && sizes[1] >= 2) non_isolating = true;
            if (non_isolating) {
                StructureViolation sv;
                sv.kind = StructureViolation::Kind::NonIsolatingTwoCut;
                sv.cut = {u, v};
                rep.violations.push_back(sv);
            }
        }
    }

    enumerate_cycles(g, 5, 1'000'000, [&](const std::vector<int>& cyc) {
        int low_degree = 0;
        for (int v : cyc)
            if (g.degree(v) == 2) ++low_degree;
        if (low_degree >= 2) {
            StructureViolation sv;
            sv.kind = StructureViolation::Kind::RemovableFiveCycle;
            sv.cycle = cyc;
            rep.violations.push_back(sv);
        }
        return true;
    });

    return rep;
}

std::optional<IsolationWitness> find_isolated_pair(const Multigraph& g, int u1, int u2) {
    if (u1 == u2) throw PreconditionViolated("isolated pair needs distinct vertices");
    if (g.adjacent(u1, u2)) return std::nullopt;
    std::vector<int> hood;
    for (int v : g.neighbors(u1)) hood.push_back(v);
    for (int v : g.neighbors(u2)) hood.push_back(v);
    std::sort(hood.begin(), hood.end());
    hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
    if (hood.size() > 3) return std::nullopt;
    for (int v : hood)
        if (v == u1 || v == u2) return std::nullopt;
    // Pad short neighborhoods with the smallest unused vertices so the guard
    // is a genuine triple.
    for (int v = 0; v < g.vertex_count() && hood.size() < 3; ++v) {
        if (v == u1 || v == u2) continue;
        if (std::find(hood.begin(), hood.end(), v) == hood.end()) hood.push_back(v);
    }
    if (hood.size() < 3) return std::nullopt;
    std::sort(hood.begin(), hood.end());
    IsolationWitness w;
    w.isolated = {std::min(u1, u2), std::max(u1, u2)};
    w.guards = {hood[0], hood[1], hood[2]};
    return w;
}

namespace {

// Is W (pairwise nonadjacent) isolated by guards = union of neighborhoods?
std::optional<IsolationWitness> isolation_of(const Multigraph& g, std::vector<int> w,
                                             const std::vector<int>& guard_candidates) {
    std::vector<int> hood;
    for (int u : w)
        for (int v : g.neighbors(u)) hood.push_back(v);
    std::sort(hood.begin(), hood.end());
    hood.erase(std::unique(hood.begin(), hood.end()), hood.end());
    if (hood.size() > 3) return std::nullopt;
    for (int v : hood)
        if (std::find(w.begin(), w.end(), v) != w.end()) return std::nullopt;
    std::vector<int> guards = hood;
    for (int v : guard_candidates) {
        if (guards.size() >= 3) break;
        if (std::find(w.begin(), w.end(), v) != w.end()) continue;
        if (std::find(guards.begin(), guards.end(), v) == guards.end()) guards.push_back(v);
    }
    if (guards.size() < 3) return std::nullopt;
    std::sort(guards.begin(), guards.end());
    std::sort(w.begin(), w.end());
    IsolationWitness out;
    out.isolated = w;
    out.guards = {guards[0], guards[1], guards[2]};
    return out;
}

} // namespace

ForbiddenCycles enumerate_forbidden_cycles(const Multigraph& g, std::int64_t cycle_cap) {
    ForbiddenCycles fc;
    enumerate_cycles(g, 4, cycle_cap, [&](const std::vector<int>& cyc) {
        // Only a pair inside the cycle can be isolated; try all six.
        for (int i = 0; i < 4; ++i) {
            bool done = false;
            for (int j = i + 1; j < 4 && !done; ++j) {
                if (g.adjacent(cyc[i], cyc[j])) continue;
                if (auto w = find_isolated_pair(g, cyc[i], cyc[j])) {
                    fc.four_cycles.push_back({cyc[0], cyc[1], cyc[2], cyc[3]});
                    fc.four_witnesses.push_back(*w);
                    done = true;
                }
            }
            if (done) break;
        }
        return true;
    });
    enumerate_cycles(g, 6, cycle_cap, [&](const std::vector<int>& cyc) {
        for (int off = 0; off < 2; ++off) {
            std::vector<int> triple{cyc[off], cyc[off + 2], cyc[off + 4]};
            if (g.adjacent(triple[0], triple[1]) || g.adjacent(triple[1], triple[2]) ||
                g.adjacent(triple[0], triple[2]))
                continue;
            std::vector<int> guard{cyc[(off + 1) % 6], cyc[(off + 3) % 6], cyc[(off + 5) % 6]};
            if (auto w = isolation_of(g, triple, guard)) {
                fc.six_cycles.push_back({cyc[0], cyc[1], cyc[2], cyc[3], cyc[4], cyc[5]});
                fc.six_witnesses.push_back(*w);
                break;
            }
        }
        return true;
    });
    return fc;
}

namespace {

bool component_is_cycle(const Multigraph& g, const std::vector<int>& vertices,
                        const std::vector<int>& edges, const EdgeSet& s) {
    if (vertices.size() != edges.size() || vertices.size() < 3) return false;
    for (int v : vertices)
        if (s.degree(v) != 2) return false;
    // Connected with all degrees two and |V| = |E| means one simple cycle;
    // a doubled-edge pair has |V| != |E| and is excluded above.
    for (int e : edges)
        if (g.edge(e).a == g.edge(e).b) return false;
    return true;
}

} // namespace

CycleRestrictedReport is_cycle_restricted(const EdgeSet& s, const ForbiddenCycles& fc) {
    const Multigraph& g = s.host();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.degree(v) < 2)
            throw PreconditionViolated("not a 2-edge-cover at vertex " + std::to_string(v));

    CycleRestrictedReport rep;
    ComponentsResult comps = components(s);
    for (int i = 0; i < comps.count(); ++i) {
        const auto& vs = comps.vertices[i];
        const auto& es = comps.edges[i];
        if (vs.size() == 3 && es.size() == 3) {
            rep.violations.push_back({CycleRestrictedReport::Kind::TriangleComponent, vs, -1});
            continue;
        }
        if (vs.size() == 4 && es.size() == 4 && component_is_cycle(g, vs, es, s)) {
            bool isolated = false;
            for (int a = 0; a < 4 && !isolated; ++a)
                for (int b = a + 1; b < 4 && !isolated; ++b)
                    if (!g.adjacent(vs[a], vs[b]) && find_isolated_pair(g, vs[a], vs[b]))
                        isolated = true;
            if (isolated)
                rep.violations.push_back(
                    {CycleRestrictedReport::Kind::FourCycleComponent, vs, -1});
        }
    }
    for (const auto& cyc : fc.six_cycles) {
        std::vector<int> w(cyc.begin(), cyc.end());
        int crossing = boundary(s, w).size();
        if (crossing < 2) {
            rep.violations.push_back(
                {CycleRestrictedReport::Kind::SixCycleBoundary, w, crossing});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

CycleRestrictedReport is_cycle_restricted(const EdgeSet& s) {
    return is_cycle_restricted(s, enumerate_forbidden_cycles(s.host()));
}

} // namespace vcss
