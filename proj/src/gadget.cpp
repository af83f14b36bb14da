#include "vcss/gadget.hpp"

#include <algorithm>
#include <cassert>

#include "vcss/oracle.hpp"

namespace vcss {

Families select_maximal_families(const Multigraph& g, std::int64_t cycle_cap) {
    ForbiddenCycles fc = enumerate_forbidden_cycles(g, cycle_cap);
    Families fam;
    std::vector<char> used(g.vertex_count(), 0);

    // Cycles arrive in lexicographic canonical order; greedy keeps every
    // vertex-disjoint one, which is all maximality requires.
    for (const auto& cyc : fc.six_cycles) {
        bool free = true;
        for (int v : cyc) free = free && !used[v];
        if (!free) continue;
        for (int v : cyc) used[v] = 1;
        fam.six_cycles.push_back(cyc);
    }

    std::vector<std::array<int, 2>> chosen_pairs;
    for (const auto& cyc : fc.four_cycles) {
        bool free = true;
        for (int v : cyc) free = free && !used[v];
        if (!free) continue;
        // Pick the smallest isolated pair of this cycle with no host edge to
        // a previously chosen pair.
        std::optional<IsolationWitness> pick;
        for (int a = 0; a < 4 && !pick; ++a) {
            for (int b = a + 1; b < 4 && !pick; ++b) {
                auto w = find_isolated_pair(g, cyc[a], cyc[b]);
                if (!w) continue;
                bool clash = false;
                for (const auto& prev : chosen_pairs)
                    for (int x : w->isolated)
                        for (int y : prev) clash = clash || g.adjacent(x, y);
                if (!clash) pick = w;
            }
        }
        if (!pick) continue;
        for (int v : cyc) used[v] = 1;
        fam.four_cycles.push_back(cyc);
        fam.pair_witnesses.push_back(*pick);
        chosen_pairs.push_back({pick->isolated[0], pick->isolated[1]});
    }
    return fam;
}

ReducedHost build_gprime(const Multigraph& g, const Families& fam, std::int64_t cycle_cap) {
    int n = g.vertex_count();
    GadgetMap map;
    map.vertex_image.assign(n, -2);

    std::vector<int> cycle_index(n, -1);
    for (size_t i = 0; i < fam.six_cycles.size(); ++i)
        for (int v : fam.six_cycles[i]) {
            internal_check(cycle_index[v] == -1, "contracted 6-cycles overlap");
            cycle_index[v] = static_cast<int>(i);
        }
    for (const auto& w : fam.pair_witnesses)
        for (int u : w.isolated) {
            internal_check(cycle_index[u] == -1, "pair vertex inside a contracted cycle");
            map.vertex_image[u] = -1;
        }

    int next = 0;
    for (int v = 0; v < n; ++v)
        if (map.vertex_image[v] == -2 && cycle_index[v] == -1) map.vertex_image[v] = next++;
    std::vector<int> cycle_slot(fam.six_cycles.size());
    for (size_t i = 0; i < fam.six_cycles.size(); ++i) {
        cycle_slot[i] = next++;
        for (int v : fam.six_cycles[i]) map.vertex_image[v] = cycle_slot[i];
    }

    map.contracted.reserve(fam.six_cycles.size());
    for (size_t i = 0; i < fam.six_cycles.size(); ++i) {
        ContractedCycle cc;
        cc.cycle = fam.six_cycles[i];
        cc.merged_vertex = cycle_slot[i];
        map.contracted.push_back(cc);
    }

    map.pairs.reserve(fam.pair_witnesses.size());
    for (size_t j = 0; j < fam.pair_witnesses.size(); ++j) {
        const auto& w = fam.pair_witnesses[j];
        PairGadget pg;
        pg.removed = {w.isolated[0], w.isolated[1]};
        pg.guards = w.guards;
        pg.cycle = fam.four_cycles[j];
        for (int i = 0; i < 3; ++i) pg.vprime[i] = next++;
        pg.hub = next++;
        map.pairs.push_back(pg);
    }

    // Surviving host edges. Edges at removed vertices are recorded on their
    // gadget; edges inside one contracted cycle drop as self-loops.
    std::vector<std::pair<int, int>> reduced_edges;
    map.edge_image.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.edge(e).a, b = g.edge(e).b;
        if (map.vertex_image[a] == -1 || map.vertex_image[b] == -1) {
            int u = map.vertex_image[a] == -1 ? a : b;
            int other = g.edge(e).other(u);
            bool placed = false;
            for (auto& pg : map.pairs) {
                if (u != pg.removed[0] && u != pg.removed[1]) continue;
                internal_check(map.vertex_image[other] != -1,
                               "edge between two removed pair vertices");
                for (int i = 0; i < 3; ++i)
                    if (pg.guards[i] == other) {
                        pg.removed_edges[i].push_back(e);
                        placed = true;
                    }
            }
            internal_check(placed, "removed-vertex edge does not land on its guards");
            continue;
        }
        int ia = map.vertex_image[a], ib = map.vertex_image[b];
        if (ia == ib) {
            int ci = cycle_index[a];
            internal_check(ci != -1 && ci == cycle_index[b], "unexpected self-loop");
            map.contracted[ci].dropped_edges.push_back(e);
            continue;
        }
        map.edge_image[e] = static_cast<int>(reduced_edges.size());
        map.edge_preimage.push_back(e);
        reduced_edges.emplace_back(ia, ib);
    }

    // New vertices and edges per pair gadget: degree-preserving parallel
    // bundles to the guards plus the three hub edges.
    for (auto& pg : map.pairs) {
        for (int i = 0; i < 3; ++i) {
            int guard = pg.guards[i];
            pg.guard_images[i] = map.vertex_image[guard];
            if (cycle_index[guard] != -1)
                pg.guard_overlaps.emplace_back(i, "guard contracted into a 6-cycle");
            for (const auto& other : map.pairs)
                if (&other != &pg)
                    for (int v : other.cycle)
                        if (v == guard)
                            pg.guard_overlaps.emplace_back(i, "guard on another chosen 4-cycle");
            int d = static_cast<int>(pg.removed_edges[i].size());
            internal_check(d >= 1 && d <= 2, "guard bundle degree outside {1,2}");
            for (int r = 0; r < d; ++r) {
                map.edge_preimage.push_back(-1);
                pg.bundle_edges[i].push_back(static_cast<int>(reduced_edges.size()));
                reduced_edges.emplace_back(pg.guard_images[i], pg.vprime[i]);
            }
        }
        for (int i = 0; i < 3; ++i) {
            map.edge_preimage.push_back(-1);
            pg.hub_edges[i] = static_cast<int>(reduced_edges.size());
            reduced_edges.emplace_back(pg.vprime[i], pg.hub);
        }
    }

    // Cycle edges of each contracted 6-cycle (for the lift), smallest ids.
    Multigraph reduced(next, reduced_edges);
    ReducedHost rh{&g, std::move(reduced), TriangleSet(g), GadgetMap{}, fam, {}};
    rh.map = std::move(map);
    rh.host_forbidden = enumerate_forbidden_cycles(g, cycle_cap);

    std::vector<char> merged(rh.graph.vertex_count(), 0);
    for (const auto& cc : rh.map.contracted) merged[cc.merged_vertex] = 1;
    try {
        rh.triangles = TriangleSet::all_triangles(rh.graph, [&](int v) { return !merged[v]; });
    } catch (const PreconditionViolated&) {
        throw InternalCheck("reduced-graph triangle set violates the parallel-edge invariant");
    }
    return rh;
}

namespace {

std::array<int, 6> cycle_edge_ids(const Multigraph& g, const std::array<int, 6>& cyc) {
    std::array<int, 6> out{};
    for (int i = 0; i < 6; ++i) {
        auto e = g.edge_between(cyc[i], cyc[(i + 1) % 6]);
        internal_check(e.has_value(), "contracted cycle edge missing from host");
        out[i] = *e;
    }
    return out;
}

int count_in(const EdgeSet& s, const std::vector<int>& ids) {
    int c = 0;
    for (int e : ids)
        if (s.contains(e)) ++c;
    return c;
}

} // namespace

EdgeSet project_cover(const EdgeSet& f, const ReducedHost& rh) {
    const Multigraph& g = *rh.host;
    const ForbiddenCycles& fc = rh.host_forbidden;
    if (!is_cycle_restricted(f, fc).ok)
        throw PreconditionViolated("cover is not cycle-restricted");

    EdgeSet work = f;
    // Rotation: every chosen pair must touch all three of its guards, so the
    // new v' vertices can reach degree two later. While a pair touches only
    // two guards, move one of its edges to the untouched guard.
    for (const auto& pg : rh.map.pairs) {
        std::array<int, 3> t{};
        for (int i = 0; i < 3; ++i) t[i] = count_in(work, pg.removed_edges[i]);
        int touched = (t[0] > 0) + (t[1] > 0) + (t[2] > 0);
        internal_check(touched >= 2, "pair vertices cover fewer than two guards");
        if (touched == 3) continue;
        int empty_i = t[0] == 0 ? 0 : (t[1] == 0 ? 1 : 2);
        int donor_i = -1;
        for (int i = 0; i < 3 && donor_i == -1; ++i)
            if (i != empty_i && work.degree(pg.guards[i]) >= 3) donor_i = i;
        internal_check(donor_i != -1, "no guard of degree three to rotate from");
        int uj = -1, drop = -1, add = -1;
        for (int j = 0; j < 2 && uj == -1; ++j) {
            auto to_empty = g.edge_between(pg.removed[j], pg.guards[empty_i]);
            if (!to_empty) continue;
            for (int e : pg.removed_edges[donor_i])
                if (work.contains(e) && g.edge(e).touches(pg.removed[j])) {
                    uj = pg.removed[j];
                    drop = e;
                    add = *to_empty;
                    break;
                }
        }
        internal_check(uj != -1, "rotation donor edge not found");
        work.erase(drop);
        work.insert(add);
        internal_check(is_cycle_restricted(work, fc).ok, "rotation broke cycle restriction");
    }

    EdgeSet out(rh.graph);
    for (int e : work.ids())
        if (rh.map.edge_image[e] != -1) out.insert(rh.map.edge_image[e]);

    for (const auto& pg : rh.map.pairs) {
        std::array<int, 3> t{};
        for (int i = 0; i < 3; ++i) {
            t[i] = count_in(work, pg.removed_edges[i]);
            internal_check(t[i] >= 1, "pair guard untouched after rotation");
            internal_check(t[i] <= static_cast<int>(pg.bundle_edges[i].size()),
                           "more cover edges than bundle copies");
            for (int r = 0; r < t[i]; ++r) out.insert(pg.bundle_edges[i][r]);
        }
        // Two hub edges, must reach the v' vertices of bundle weight one.
        std::vector<int> pickers;
        for (int i = 0; i < 3; ++i)
            if (t[i] == 1) pickers.push_back(i);
        internal_check(pickers.size() <= 2, "hub cannot cover three weight-one guards");
        for (int i = 0; i < 3 && pickers.size() < 2; ++i)
            if (t[i] >= 2) pickers.push_back(i);
        for (int i : pickers) out.insert(pg.hub_edges[i]);
    }

    for (int v = 0; v < rh.graph.vertex_count(); ++v)
        internal_check(out.degree(v) >= 2, "projected set is not a 2-edge-cover");
    internal_check(!find_ttriangle_component(out, rh.triangles),
                   "projected set has a T-triangle component");
    int c = static_cast<int>(rh.map.contracted.size());
    int p = static_cast<int>(rh.map.pairs.size());
    internal_check(out.size() <= f.size() - 6 * c + 2 * p, "projection size bound violated");
    return out;
}

EdgeSet lift_cover(const EdgeSet& fprime, const ReducedHost& rh) {
    const Multigraph& g = *rh.host;
    const Multigraph& rg = rh.graph;
    for (int v = 0; v < rg.vertex_count(); ++v)
        if (fprime.degree(v) < 2)
            throw PreconditionViolated("input is not a 2-edge-cover of the reduced graph");
    if (find_ttriangle_component(fprime, rh.triangles))
        throw PreconditionViolated("input cover has a T-triangle component");

    EdgeSet work = fprime;
    // Hubs carry exactly two edges afterwards, which forces at least four
    // bundle edges per gadget and hence a doubled guard.
    for (const auto& pg : rh.map.pairs) {
        if (work.degree(pg.hub) < 3) continue;
        int pick = -1;
        for (int i = 0; i < 3 && pick == -1; ++i)
            if (pg.bundle_edges[i].size() == 2) pick = i;
        internal_check(pick != -1, "no doubled bundle available at hub");
        work.erase(pg.hub_edges[pick]);
        if (work.degree(pg.vprime[pick]) < 2) {
            int add = -1;
            for (int e : pg.bundle_edges[pick])
                if (!work.contains(e)) {
                    add = e;
                    break;
                }
            internal_check(add != -1, "no spare bundle edge to restore degree");
            work.insert(add);
        }
    }

    EdgeSet out(g);
    for (int e : work.ids())
        if (rh.map.edge_preimage[e] != -1) out.insert(rh.map.edge_preimage[e]);

    for (const auto& cc : rh.map.contracted)
        for (int e : cycle_edge_ids(g, cc.cycle)) out.insert(e);

    for (const auto& pg : rh.map.pairs) {
        std::array<int, 3> b{};
        for (int i = 0; i < 3; ++i) b[i] = count_in(work, pg.bundle_edges[i]);
        internal_check(b[0] + b[1] + b[2] >= 4, "fewer than four bundle edges after fixup");

        // Edge of u_j to guard i, if the host has one.
        auto edge_of = [&](int i, int j) -> int {
            for (int e : pg.removed_edges[i])
                if (g.edge(e).touches(pg.removed[j])) return e;
            return -1;
        };

        std::vector<int> singles;
        std::array<int, 2> deg{0, 0};
        for (int i = 0; i < 3; ++i) {
            if (b[i] == 2) {
                for (int j = 0; j < 2; ++j) {
                    int e = edge_of(i, j);
                    internal_check(e != -1, "doubled guard misses a host edge");
                    out.insert(e);
                    ++deg[j];
                }
            } else if (b[i] == 1) {
                singles.push_back(i);
            } else {
                throw InternalCheck("guard with no bundle edge in reduced cover");
            }
        }
        // Choose one endpoint per single guard so both removed vertices end
        // with degree at least two; try assignments lexicographically.
        int k = static_cast<int>(singles.size());
        bool done = false;
        for (int mask = 0; mask < (1 << k) && !done; ++mask) {
            std::array<int, 2> d = deg;
            std::vector<int> chosen(k, -1);
            bool valid = true;
            for (int s = 0; s < k && valid; ++s) {
                int j = (mask >> s) & 1;
                int e = edge_of(singles[s], j);
                if (e == -1) {
                    valid = false;
                    break;
                }
                chosen[s] = e;
                ++d[j];
            }
            if (!valid || d[0] < 2 || d[1] < 2) continue;
            for (int e : chosen) out.insert(e);
            done = true;
        }
        internal_check(done || k == 0, "no feasible guard assignment for removed pair");
        if (!done) {
            internal_check(deg[0] >= 2 && deg[1] >= 2,
                           "removed pair cannot reach degree two");
        }
    }

    const ForbiddenCycles& fc = rh.host_forbidden;
    for (int v = 0; v < g.vertex_count(); ++v)
        internal_check(out.degree(v) >= 2, "lifted set is not a 2-edge-cover");
    internal_check(is_cycle_restricted(out, fc).ok, "lifted set is not cycle-restricted");
    int c = static_cast<int>(rh.map.contracted.size());
    int p = static_cast<int>(rh.map.pairs.size());
    internal_check(out.size() <= fprime.size() + 6 * c - 2 * p, "lift size bound violated");
    return out;
}

EdgeSet compute_cycle_restricted_cover(const Multigraph& g, double epsilon,
                                       const CycleRestrictedOptions& options) {
    (void)epsilon; // the exact backend needs no slack and the greedy has no knob
    if (g.vertex_count() < 20 && !options.force_reduction) {
        OracleBudget ob;
        ob.max_nodes = options.budget.max_nodes;
        ob.max_vertices_cover = g.vertex_count();
        ob.cycle_cap = options.cycle_cap;
        return exact_min_cycle_restricted_cover(g, ob);
    }
    Families fam = select_maximal_families(g, options.cycle_cap);
    ReducedHost rh = build_gprime(g, fam, options.cycle_cap);
    EdgeSet fp(rh.graph);
    if (options.backend == CoverBackend::Exact) {
        try {
            fp = exact_min_tfree_2_edge_cover(rh.graph, rh.triangles, options.budget,
                                              options.stats);
        } catch (const ResourceExhausted&) {
            // Budget ran out: degrade to the greedy backend, reported as
            // approximate through the stats.
            fp = heuristic_tfree_2_edge_cover(rh.graph, rh.triangles, options.stats);
        }
    } else {
        fp = heuristic_tfree_2_edge_cover(rh.graph, rh.triangles, options.stats);
    }
    return lift_cover(fp, rh);
}

} // namespace vcss
