#include "vcss/generator.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "vcss/blocks.hpp"
#include "vcss/structure.hpp"

namespace vcss {

namespace {

std::vector<int> random_permutation(SplitMix& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

struct EdgeBag {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    bool add(int a, int b) {
        if (a == b) return false;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) return false;
        edges.emplace_back(a, b);
        return true;
    }
    bool has(int a, int b) const { return seen.count(std::minmax(a, b)) > 0; }
};

// Hamiltonian cycle through a random permutation plus chords, avoiding chord
// spans that immediately force removable 5-cycles. A spread "spine" of
// chords gives every second cycle position an escape, without which two-cuts
// around short arcs strand vertex pairs on larger instances.
EdgeBag hamiltonian_base(SplitMix& rng, int n, int extra) {
    EdgeBag bag;
    std::vector<int> perm = random_permutation(rng, n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    for (int i = 0; i < n; ++i) bag.add(perm[i], perm[(i + 1) % n]);

    auto chord_ok = [&](int a, int b) {
        if (a == b) return false;
        int d = std::abs(pos[a] - pos[b]);
        int span = std::min(d, n - d);
        return span > 1 && span != 4;
    };
    if (n >= 12) {
        for (int i = 0; i < n; i += 2) {
            int a = perm[i];
            for (int tries = 0; tries < 24; ++tries) {
                int b = perm[(i + 5 + static_cast<int>(rng.below(n - 9))) % n];
                if (chord_ok(a, b) && bag.add(a, b)) break;
            }
        }
    }
    int placed = 0, attempts = 0;
    while (placed < extra && attempts < 40 * (extra + 1)) {
        ++attempts;
        int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
        if (chord_ok(a, b) && bag.add(a, b)) ++placed;
    }
    return bag;
}

Multigraph build_hamiltonian_plus_chords(SplitMix& rng, int n, double density) {
    int extra = std::max(3, static_cast<int>(density * n + 0.5));
    EdgeBag bag = hamiltonian_base(rng, n, extra);
    return Multigraph(n, bag.edges);
}

Multigraph build_random_structured(SplitMix& rng, int n, double density) {
    EdgeBag bag;
    std::vector<int> perm = random_permutation(rng, n);
    for (int i = 0; i < n; ++i) bag.add(perm[i], perm[(i + 1) % n]);
    std::uint64_t threshold = static_cast<std::uint64_t>(density * 1000000.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!bag.has(a, b) && rng.below(1000000) < threshold) bag.add(a, b);
    return Multigraph(n, bag.edges);
}

Multigraph build_gadget_rich(SplitMix& rng, int n, double density) {
    // One guarded pair (two vertices) and one guarded triple (three vertices)
    // on top of a chorded base.
    int base_n = n - 5;
    if (base_n < 8) throw GenerationFailed("gadget-rich needs at least 13 vertices");
    EdgeBag bag = hamiltonian_base(rng, base_n, std::max(3, static_cast<int>(density * base_n)));

    auto pick_distinct3 = [&](int bound) {
        std::array<int, 3> out{};
        while (true) {
            for (int i = 0; i < 3; ++i) out[i] = static_cast<int>(rng.below(bound));
            if (out[0] != out[1] && out[1] != out[2] && out[0] != out[2]) return out;
        }
    };
    int u1 = base_n, u2 = base_n + 1;
    auto guards = pick_distinct3(base_n);
    for (int v : guards) {
        bag.add(u1, v);
        bag.add(u2, v);
    }
    int o1 = base_n + 2, o2 = base_n + 3, o3 = base_n + 4;
    auto triple_guards = pick_distinct3(base_n);
    bag.add(o1, triple_guards[0]);
    bag.add(o1, triple_guards[2]);
    bag.add(o2, triple_guards[0]);
    bag.add(o2, triple_guards[1]);
    bag.add(o3, triple_guards[1]);
    bag.add(o3, triple_guards[2]);
    return Multigraph(n, bag.edges);
}

} // namespace

Multigraph tight_chain(int rings) {
    if (rings < 3) throw GenerationFailed("tight chain needs at least three rings");
    // Ring order for vertex numbering: the second ring first, so the reducer
    // picks it and merges into its two still-small neighbors.
    std::vector<int> base(rings + 1, 0);
    auto block_of = [&](int ring) {
        if (ring == 2) return 0;
        if (ring == 1) return 6;
        return 6 * (ring - 1);
    };
    for (int j = 1; j <= rings; ++j) base[j] = block_of(j);
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j <= rings; ++j)
        for (int i = 0; i < 6; ++i) es.emplace_back(base[j] + i, base[j] + (i + 1) % 6);
    for (int j = 1; j <= rings; ++j) {
        int next = j == rings ? 1 : j + 1;
        es.emplace_back(base[j] + 1, base[next] + 0);
        es.emplace_back(base[j] + 4, base[next] + 3);
    }
    return Multigraph(6 * rings, es);
}

EdgeSet tight_chain_cover(const Multigraph& g) {
    EdgeSet s(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.edge(e).a / 6, b = g.edge(e).b / 6;
        if (a == b) s.insert(e);
    }
    return s;
}

Multigraph cycle_ring(const std::vector<int>& sizes) {
    int k = static_cast<int>(sizes.size());
    if (k < 3) throw GenerationFailed("cycle ring needs at least three cycles");
    std::vector<int> base(k, 0);
    for (int j = 1; j < k; ++j) base[j] = base[j - 1] + sizes[j - 1];
    std::vector<std::pair<int, int>> es;
    for (int j = 0; j < k; ++j) {
        if (sizes[j] < 4 || sizes[j] > 6)
            throw GenerationFailed("ring cycle sizes must be 4, 5 or 6");
        for (int i = 0; i < sizes[j]; ++i)
            es.emplace_back(base[j] + i, base[j] + (i + 1) % sizes[j]);
    }
    for (int j = 0; j < k; ++j) {
        int next = (j + 1) % k;
        int a = sizes[j] == 6 ? 3 : 2; // leaves unanchored arcs of length one
        es.emplace_back(base[j] + a, base[next]);
        es.emplace_back(base[j] + a + 1, base[next] + 1);
    }
    return Multigraph(base.back() + sizes.back(), es);
}

EdgeSet cycle_ring_cover(const Multigraph& g, const std::vector<int>& sizes) {
    std::vector<int> block_of(g.vertex_count(), 0);
    int v = 0;
    for (size_t j = 0; j < sizes.size(); ++j)
        for (int i = 0; i < sizes[j]; ++i) block_of[v++] = static_cast<int>(j);
    EdgeSet s(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (block_of[g.edge(e).a] == block_of[g.edge(e).b]) s.insert(e);
    return s;
}

Multigraph generate(const GeneratorSpec& spec) {
    if (spec.family == Family::TightSixCycleChain) {
        int rings = std::max(3, spec.n / 6);
        return tight_chain(rings);
    }
    for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        SplitMix rng(spec.seed * 0x100000001B3ull + attempt);
        Multigraph g = [&] {
            switch (spec.family) {
                case Family::HamiltonianPlusChords:
                    return build_hamiltonian_plus_chords(rng, spec.n, spec.density);
                case Family::GadgetRich:
                    return build_gadget_rich(rng, spec.n, spec.density);
                case Family::RandomStructured:
                    return build_random_structured(rng, spec.n, spec.density);
                default:
                    throw GenerationFailed("unknown family");
            }
        }();
        if (analyze_structure(g).is_structured()) return g;
    }
    throw GenerationFailed("no structured instance within the retry budget for " +
                           family_name(spec.family));
}

Family family_from_name(const std::string& name) {
    if (name == "hamiltonian-plus-chords") return Family::HamiltonianPlusChords;
    if (name == "gadget-rich") return Family::GadgetRich;
    if (name == "tight-6cycle-chain") return Family::TightSixCycleChain;
    if (name == "random-structured") return Family::RandomStructured;
    throw GenerationFailed("unknown family name: " + name);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::HamiltonianPlusChords: return "hamiltonian-plus-chords";
        case Family::GadgetRich: return "gadget-rich";
        case Family::TightSixCycleChain: return "tight-6cycle-chain";
        case Family::RandomStructured: return "random-structured";
    }
    return "?";
}

Multigraph plant_violation(PlantKind kind, int n, std::uint64_t seed) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        GeneratorSpec spec;
        spec.family = Family::RandomStructured;
        spec.n = n;
        spec.density = 0.35;
        spec.seed = seed + 7919 * attempt;
        Multigraph base = generate(spec);
        SplitMix rng(spec.seed ^ 0xABCDEF);
        std::vector<std::pair<int, int>> es;
        for (const auto& e : base.edges()) es.emplace_back(e.a, e.b);

        if (kind == PlantKind::IrrelevantEdge) {
            // One extra vertex hanging on an existing edge: that edge's
            // removal pair disconnects it, and the stranded side is a single
            // vertex, so no other violation class appears.
            int e = static_cast<int>(rng.below(base.edge_count()));
            int q = n;
            es.emplace_back(base.edge(e).a, q);
            es.emplace_back(base.edge(e).b, q);
            return Multigraph(n + 1, es);
        }
        if (kind == PlantKind::NonIsolatingTwoCut) {
            // Two-vertex chain between a non-adjacent pair at distance three
            // or more: removing the pair strands the chain.
            std::vector<int> dist(base.vertex_count(), -1);
            int a = static_cast<int>(rng.below(base.vertex_count()));
            std::vector<int> q{a};
            dist[a] = 0;
            for (size_t qi = 0; qi < q.size(); ++qi)
                for (int w : base.neighbors(q[qi]))
                    if (dist[w] == -1) {
                        dist[w] = dist[q[qi]] + 1;
                        q.push_back(w);
                    }
            int b = -1;
            for (int v = 0; v < base.vertex_count(); ++v)
                if (dist[v] >= 3 && (b == -1 || dist[v] > dist[b])) b = v;
            if (b == -1) continue; // diameter too small; retry another base
            es.emplace_back(a, n);
            es.emplace_back(n, n + 1);
            es.emplace_back(n + 1, b);
            return Multigraph(n + 2, es);
        }
        // RemovableFiveCycle: a three-vertex path over an existing edge, with
        // the middle vertex tied elsewhere so only the 5-cycle class appears.
        int e = static_cast<int>(rng.below(base.edge_count()));
        int x = base.edge(e).a, y = base.edge(e).b;
        int w = -1;
        for (int tries = 0; tries < 64 && w == -1; ++tries) {
            int cand = static_cast<int>(rng.below(base.vertex_count()));
            if (cand != x && cand != y && !base.adjacent(cand, x) && !base.adjacent(cand, y))
                w = cand;
        }
        if (w == -1) continue;
        int p1 = n, p2 = n + 1, p3 = n + 2;
        es.emplace_back(x, p1);
        es.emplace_back(p1, p2);
        es.emplace_back(p2, p3);
        es.emplace_back(p3, y);
        es.emplace_back(p2, w);
        return Multigraph(n + 3, es);
    }
    throw GenerationFailed("could not plant the requested violation");
}

} // namespace vcss
