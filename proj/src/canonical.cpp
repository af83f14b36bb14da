#include "vcss/canonical.hpp"

#include <algorithm>
#include <climits>

#include "vcss/blocks.hpp"

namespace vcss {

namespace {

bool component_is_cycle(const BCComponent& c, const EdgeSet& s) {
    if (c.vertices.size() != c.edges.size() || c.vertices.size() < 3) return false;
    for (int v : c.vertices)
        if (s.degree(v) != 2) return false;
    return true;
}

bool component_complex(const BCComponent& c) {
    return !(c.cut_vertices.empty() && c.vertices.size() > 3);
}

// Hamiltonian cycle inside the component's own edges, as an edge id list;
// smallest-vertex-first, lexicographic, so rewrites are reproducible.
std::optional<std::vector<int>> small_hamiltonian_cycle(const Multigraph& g, const EdgeSet& s,
                                                        const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    if (k < 3 || k > 6) return std::nullopt;
    auto member_edge = [&](int a, int b) -> int {
        for (int e : g.incident(a))
            if (s.contains(e) && g.edge(e).other(a) == b) return e;
        return -1;
    };
    std::vector<int> perm(vertices.begin() + 1, vertices.end());
    std::sort(perm.begin(), perm.end());
    do {
        if (perm.back() < perm.front()) continue; // fix orientation
        std::vector<int> order{vertices.front()};
        order.insert(order.end(), perm.begin(), perm.end());
        std::vector<int> edges;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int e = member_edge(order[i], order[(i + 1) % k]);
            if (e == -1)
                ok = false;
            else
                edges.push_back(e);
        }
        if (ok) return edges;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

struct EscapeCandidate {
    int w;
    int z;
    int edge;
};

// Non-member host edges leaving `inside` from one of `from`, ascending (w,z).
std::vector<EscapeCandidate> escape_candidates(const Multigraph& g, const EdgeSet& s,
                                               const std::vector<int>& from,
                                               const std::vector<int>& inside) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : inside) in[v] = 1;
    std::vector<EscapeCandidate> out;
    for (int w : from) {
        for (int e : g.incident(w)) {
            if (s.contains(e)) continue;
            int z = g.edge(e).other(w);
            if (in[z]) continue;
            out.push_back({w, z, e});
        }
    }
    std::sort(out.begin(), out.end(), [](const EscapeCandidate& a, const EscapeCandidate& b) {
        return std::tie(a.w, a.z, a.edge) < std::tie(b.w, b.z, b.edge);
    });
    return out;
}

std::pair<int, int> potential_of(const BlockDecomposition& d) {
    return {d.comp_count, d.bridge_count};
}

int violation_count(const BlockDecomposition& d, const EdgeSet& s) {
    int count = 0;
    for (const auto& c : d.components) {
        if (c.edge_total() <= 6 && !component_is_cycle(c, s)) ++count;
        if (component_complex(c))
            for (const auto& b : c.blocks)
                if (b.leaf && b.vertices.size() <= 4) ++count;
    }
    return count;
}

} // namespace

CanonicalCheck check_strongly_canonical(const EdgeSet& s, const ForbiddenCycles& fc) {
    for (int v = 0; v < s.host().vertex_count(); ++v)
        if (s.degree(v) < 2) return {false, "not a 2-edge-cover"};
    if (!is_cycle_restricted(s, fc).ok) return {false, "not cycle-restricted"};
    BlockDecomposition d = block_cut_decomposition(s);
    for (const auto& c : d.components) {
        if (c.edge_total() <= 6 && !component_is_cycle(c, s))
            return {false, "small component is not a cycle"};
        if (!component_complex(c)) continue;
        for (const auto& b : c.blocks)
            if (b.leaf && b.vertices.size() <= 4)
                return {false, "leaf-block with fewer than five vertices"};
    }
    return {true, ""};
}

CanonicalCheck check_canonical(const EdgeSet& s) {
    for (int v = 0; v < s.host().vertex_count(); ++v)
        if (s.degree(v) < 2) return {false, "not a 2-edge-cover"};
    BlockDecomposition d = block_cut_decomposition(s);
    for (const auto& c : d.components) {
        if (c.edge_total() <= 5 && !component_is_cycle(c, s))
            return {false, "five-edge component is not a cycle"};
        if (!component_complex(c)) continue;
        for (const auto& b : c.blocks)
            if (b.leaf && b.vertices.size() <= 4)
                return {false, "leaf-block with fewer than five vertices"};
    }
    return {true, ""};
}

namespace {

struct Rewriter {
    const Multigraph& g;
    const ForbiddenCycles& fc;
    EdgeSet s;
    std::vector<RewriteStep> trace;

    Rewriter(const EdgeSet& start, const ForbiddenCycles& forbidden)
        : g(start.host()), fc(forbidden), s(start) {}

    struct Swap {
        int removed;
        int added;
    };

    // Every rule reduces to an edge swap. Candidates that would break the
    // cycle-restricted property are discarded (dropping a boundary edge of a
    // guarded 6-cycle can do that); among the survivors the swap with the
    // lowest resulting (components, bridges) wins, candidate order breaking
    // ties. The potential cannot always strictly drop: when a small leaf
    // block shares its cut vertex with the rest of the component, the best
    // legal swap merges two blocks at unchanged potential.
    void apply(const char* rule, const std::vector<Swap>& candidates,
               const BlockDecomposition& before) {
        internal_check(!candidates.empty(), "rewrite rule produced no candidates");
        int best = -1;
        std::pair<int, int> best_pot{INT_MAX, INT_MAX};
        for (size_t i = 0; i < candidates.size(); ++i) {
            s.erase(candidates[i].removed);
            s.insert(candidates[i].added);
            bool legal = is_cycle_restricted(s, fc).ok;
            auto pot = potential_of(block_cut_decomposition(s));
            s.erase(candidates[i].added);
            s.insert(candidates[i].removed);
            if (legal && pot < best_pot) {
                best_pot = pot;
                best = static_cast<int>(i);
            }
        }
        internal_check(best != -1, "no rewrite candidate preserves cycle restriction");

        RewriteStep step;
        step.rule = rule;
        step.removed_edge = candidates[best].removed;
        step.added_edge = candidates[best].added;
        step.potential_before = potential_of(before);
        int before_violations = violation_count(before, s);
        s.erase(step.removed_edge);
        s.insert(step.added_edge);
        BlockDecomposition after = block_cut_decomposition(s);
        step.potential_after = potential_of(after);
        internal_check(step.potential_after <= step.potential_before,
                       "rewrite raised the potential");
        internal_check(step.potential_after < step.potential_before ||
                           violation_count(after, s) < before_violations,
                       "rewrite made no progress");
        trace.push_back(std::move(step));
    }

    int member_edge(int a, int b) const {
        for (int e : g.incident(a))
            if (s.contains(e) && g.edge(e).other(a) == b) return e;
        return -1;
    }

    // Small component that is not a cycle: (4,5), (4,6) or (5,6).
    bool rewrite_small_noncycle(const BCComponent& c, const BlockDecomposition& d) {
        auto ham = small_hamiltonian_cycle(g, s, c.vertices);
        if (ham) {
            // Chorded cycle: drop a chord, pull in an escape.
            std::vector<char> on_cycle(g.edge_count(), 0);
            for (int e : *ham) on_cycle[e] = 1;
            std::vector<int> chords;
            for (int e : c.edges)
                if (!on_cycle[e]) chords.push_back(e);
            internal_check(!chords.empty(), "non-cycle component with no chord");
            auto esc = escape_candidates(g, s, c.vertices, c.vertices);
            internal_check(!esc.empty(), "no escape edge from a small component");
            std::vector<Swap> cands;
            for (int chord : chords)
                for (const auto& e : esc) cands.push_back({chord, e.edge});
            apply("drop-chord", cands, d);
            return true;
        }
        // Degree-4 vertex splits the two shapes apart.
        int apex = -1;
        for (int v : c.vertices)
            if (s.degree(v) == 4) apex = v;
        if (apex != -1) {
            std::vector<int> arms;
            for (int v : c.vertices)
                if (v != apex) arms.push_back(v);
            auto esc = escape_candidates(g, s, arms, c.vertices);
            internal_check(!esc.empty(), "bowtie apex escape missing");
            std::vector<Swap> cands;
            for (const auto& e : esc) {
                int removed = member_edge(e.w, apex);
                if (removed != -1) cands.push_back({removed, e.edge});
            }
            apply("bowtie", cands, d);
            return true;
        }
        // Complete bipartite 2x3: swap a rim edge for an escape.
        std::vector<int> hubs, rim;
        for (int v : c.vertices) (s.degree(v) == 3 ? hubs : rim).push_back(v);
        internal_check(hubs.size() == 2 && rim.size() == 3, "unexpected small component shape");
        auto esc = escape_candidates(g, s, rim, c.vertices);
        internal_check(!esc.empty(), "no escape from the rim side");
        std::vector<Swap> cands;
        for (const auto& e : esc)
            for (int hub : hubs) {
                int removed = member_edge(e.w, hub);
                if (removed != -1) cands.push_back({removed, e.edge});
            }
        apply("k23", cands, d);
        return true;
    }

    bool rewrite_small_leaf_block(const BCComponent& c, const Block& b,
                                  const BlockDecomposition& d) {
        int cut = b.cut_vertices.front();
        auto ham = small_hamiltonian_cycle(g, s, b.vertices);
        internal_check(ham.has_value(), "leaf-block without a spanning cycle");
        // Neighbors of the cut vertex along the block cycle.
        std::vector<int> wcands;
        for (int e : *ham)
            if (g.edge(e).touches(cut)) wcands.push_back(g.edge(e).other(cut));
        std::sort(wcands.begin(), wcands.end());
        auto esc = escape_candidates(g, s, wcands, b.vertices);
        internal_check(!esc.empty(), "leaf-block escape missing");
        std::vector<Swap> cands;
        for (const auto& e : esc) {
            int removed = member_edge(e.w, cut);
            if (removed != -1) cands.push_back({removed, e.edge});
        }
        apply(b.vertices.size() == 3 ? "leaf-3" : "leaf-4", cands, d);
        return true;
    }

    bool step() {
        BlockDecomposition d = block_cut_decomposition(s);
        for (const auto& c : d.components) {
            if (c.edge_total() <= 6 && !component_is_cycle(c, s))
                return rewrite_small_noncycle(c, d);
            if (component_complex(c)) {
                for (const auto& b : c.blocks)
                    if (b.leaf && b.vertices.size() <= 4)
                        return rewrite_small_leaf_block(c, b, d);
            }
        }
        return false;
    }
};

} // namespace

Canonicalized to_strongly_canonical(const EdgeSet& f, const ForbiddenCycles& fc) {
    if (!is_cycle_restricted(f, fc).ok)
        throw PreconditionViolated("input cover is not cycle-restricted");
    Rewriter rw(f, fc);
    // (components, bridges, violations) decreases lexicographically per step.
    long guard = static_cast<long>(f.size() + 2) * (f.host().vertex_count() + 2);
    while (rw.step()) {
        internal_check(--guard > 0, "canonicalization failed to terminate");
    }
    internal_check(rw.s.size() == f.size(), "canonicalization changed the size");
    CanonicalCheck chk = check_strongly_canonical(rw.s, fc);
    internal_check(chk.ok, "no rewrite applies but the cover is not strongly canonical");
    return {rw.s, std::move(rw.trace)};
}

EdgeSet prune_to_minimal(const EdgeSet& s, const ForbiddenCycles& fc) {
    CanonicalCheck chk = check_strongly_canonical(s, fc);
    if (!chk.ok) throw PreconditionViolated("prune input not strongly canonical: " + chk.why);
    EdgeSet cur = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e : cur.ids()) {
            cur.erase(e);
            if (check_strongly_canonical(cur, fc).ok)
                changed = true;
            else
                cur.insert(e);
        }
    }
    return cur;
}

} // namespace vcss
