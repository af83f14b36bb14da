// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exact rational comparisons throughout; tolerances are zero unless a
// criterion says otherwise.

#include <array>
#include <chrono>
#include <memory>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "vcss/blocks.hpp"
#include "vcss/canonical.hpp"
#include "vcss/cover.hpp"
#include "vcss/credits.hpp"
#include "vcss/gadget.hpp"
#include "vcss/generator.hpp"
#include "vcss/oracle.hpp"
#include "vcss/pipeline.hpp"
#include "vcss/reducer.hpp"

using namespace vcss;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Corpus {
    struct Instance {
        std::unique_ptr<Multigraph> graph; // stable address for the edge sets
        ForbiddenCycles forbidden;
        std::unique_ptr<EdgeSet> oracle_cover; // minimum cycle-restricted cover
    };
    std::vector<Instance> small; // n <= 13, structured
};

Corpus build_corpus() {
    Corpus corpus;
    auto push = [&](Family family, int n, double density, std::uint64_t seed) {
        GeneratorSpec spec;
        spec.family = family;
        spec.n = n;
        spec.density = density;
        spec.seed = seed;
        try {
            auto g = std::make_unique<Multigraph>(generate(spec));
            ForbiddenCycles fc = enumerate_forbidden_cycles(*g);
            auto cover = std::make_unique<EdgeSet>(exact_min_cycle_restricted_cover(*g));
            corpus.small.push_back({std::move(g), std::move(fc), std::move(cover)});
        } catch (const GenerationFailed&) {
        } catch (const ResourceExhausted&) {
        }
    };
    std::uint64_t seed = 1;
    while (corpus.small.size() < 80) push(Family::HamiltonianPlusChords, 8 + seed % 6, 0.35, seed++);
    seed = 1000;
    while (corpus.small.size() < 160) push(Family::RandomStructured, 8 + seed % 6, 0.4, seed++);
    seed = 2000;
    while (corpus.small.size() < 210) push(Family::GadgetRich, 13, 0.5, seed++);
    return corpus;
}

Outcome criterion_reduction_identity(const Corpus& corpus) {
    int checked = 0;
    for (const auto& inst : corpus.small) {
        Families fam = select_maximal_families(*inst.graph);
        ReducedHost rh = build_gprime(*inst.graph, fam);
        EdgeSet reduced = exact_min_tfree_2_edge_cover(rh.graph, rh.triangles);
        int c = static_cast<int>(fam.six_cycles.size());
        int p = static_cast<int>(fam.four_cycles.size());
        if (inst.oracle_cover->size() != reduced.size() + 6 * c - 2 * p)
            return {false, "identity failed on instance " + std::to_string(checked)};
        ++checked;
    }
    if (checked < 200) return {false, "only " + std::to_string(checked) + " instances"};
    return {true, std::to_string(checked) + " instances match rho_c = rho' + 6C - 2P exactly"};
}

Outcome criterion_round_trips(const Corpus& corpus) {
    int checked = 0;
    for (const auto& inst : corpus.small) {
        Families fam = select_maximal_families(*inst.graph);
        ReducedHost rh = build_gprime(*inst.graph, fam);
        int c = static_cast<int>(fam.six_cycles.size());
        int p = static_cast<int>(fam.four_cycles.size());
        const EdgeSet& f = *inst.oracle_cover;
        EdgeSet projected = project_cover(f, rh);
        if (projected.size() > f.size() - 6 * c + 2 * p)
            return {false, "projection bound failed on instance " + std::to_string(checked)};
        EdgeSet lifted = lift_cover(projected, rh);
        if (lifted.size() > projected.size() + 6 * c - 2 * p)
            return {false, "lift bound failed on instance " + std::to_string(checked)};
        if (lifted.size() > f.size())
            return {false, "round trip grew the cover on instance " + std::to_string(checked)};
        if (!is_cycle_restricted(lifted, inst.forbidden).ok)
            return {false, "lift output not cycle-restricted on " + std::to_string(checked)};
        ++checked;
    }
    if (checked < 200) return {false, "only " + std::to_string(checked) + " instances"};
    return {true, std::to_string(checked) + " project/lift round trips within their bounds"};
}

Outcome criterion_canonicalization(const Corpus& corpus) {
    int covers = 0, steps = 0, stalls_at_floor = 0, stalls_forced = 0;
    for (const auto& inst : corpus.small) {
        Canonicalized canon = to_strongly_canonical(*inst.oracle_cover, inst.forbidden);
        if (canon.cover.size() != inst.oracle_cover->size())
            return {false, "size changed on instance " + std::to_string(covers)};
        if (!check_strongly_canonical(canon.cover, inst.forbidden).ok)
            return {false, "output not strongly canonical on " + std::to_string(covers)};
        for (const auto& step : canon.trace) {
            ++steps;
            if (step.potential_before < step.potential_after)
                return {false, "potential rose on instance " + std::to_string(covers)};
            if (step.potential_after == step.potential_before) {
                // (1, 0) is the global floor of the potential: no cover of
                // any kind is lexicographically smaller there, so the stall
                // is provably unavoidable, not a selection artifact. The
                // rewriter already picked the best restriction-preserving
                // candidate, which covers the remaining stalls.
                if (step.potential_before == std::pair{1, 0})
                    ++stalls_at_floor;
                else
                    ++stalls_forced;
            }
        }
        ++covers;
    }
    int stalls = stalls_at_floor + stalls_forced;
    if (stalls == 0)
        return {true, std::to_string(covers) + " covers canonicalized size-preserving, " +
                          std::to_string(steps) + " rewrites all strictly decreasing"};
    return {false,
            "size and canonicity hold on all " + std::to_string(covers) + " covers, but " +
                std::to_string(stalls) + " of " + std::to_string(steps) +
                " rewrites held (components, bridges) constant: " +
                std::to_string(stalls_at_floor) +
                " at the global potential floor (1,0) where no cover is lexicographically "
                "smaller, " +
                std::to_string(stalls_forced) +
                " where every potential-reducing swap breaks cycle-restriction (see decisions "
                "ledger)"};
}

Outcome criterion_credit_bounds(const Corpus& corpus) {
    int checked = 0;
    for (const auto& inst : corpus.small) {
        Canonicalized canon = to_strongly_canonical(*inst.oracle_cover, inst.forbidden);
        EdgeSet s1 = prune_to_minimal(canon.cover, inst.forbidden);
        if (Rational(95, 72) * Rational(s1.size()) < cost(s1, Scheme::Standard))
            return {false, "initial cost bound failed on " + std::to_string(checked)};
        if (!check_canonical(canon.cover).ok)
            return {false, "strongly canonical cover is not canonical?!"};
        if (Rational(4, 3) * Rational(canon.cover.size()) < cost(canon.cover, Scheme::Legacy))
            return {false, "legacy cost bound failed on " + std::to_string(checked)};
        ReduceResult reduced = remove_all_small(s1, inst.forbidden);
        if (cost(reduced.cover, Scheme::Standard) != cost(reduced.cover, Scheme::Legacy))
            return {false, "schemes disagree without small components on " +
                               std::to_string(checked)};
        ++checked;
    }
    return {true, std::to_string(checked) +
                      " covers satisfy cost <= 95/72 |S|, cost' <= 4/3 |S|, cost = cost'"};
}

Outcome criterion_reducer_monotonicity(const Corpus& corpus) {
    int steps = 0, covers = 0;
    std::array<int, 4> by_case{};
    auto consume = [&](const ReduceResult& r) -> std::string {
        for (const auto& step : r.trace) {
            if (Rational(0) < step.delta()) return "cost rose in a reduction step";
            if (step.comp_after >= step.comp_before) return "component count did not drop";
            ++steps;
            by_case[step.case_id]++;
        }
        ++covers;
        return "";
    };
    for (const auto& inst : corpus.small) {
        Canonicalized canon = to_strongly_canonical(*inst.oracle_cover, inst.forbidden);
        EdgeSet s1 = prune_to_minimal(canon.cover, inst.forbidden);
        std::string err = consume(remove_all_small(s1, inst.forbidden));
        if (!err.empty()) return {false, err + " on corpus cover " + std::to_string(covers)};
    }
    // Cluster instances whose minimum covers are disjoint cycles: these
    // drive every reduction case.
    const std::vector<std::vector<int>> patterns{
        {4, 4, 4},    {5, 5, 5},       {4, 5, 4, 5}, {6, 5, 4},    {5, 4, 6, 4},
        {4, 4, 4, 4}, {4, 4, 5, 5, 6}, {6, 4, 6, 4}, {5, 6, 5, 6}, {5, 5, 5, 5}};
    for (const auto& sizes : patterns) {
        Multigraph g = cycle_ring(sizes);
        if (!analyze_structure(g).is_structured())
            return {false, "ring instance not structured"};
        ForbiddenCycles fc = enumerate_forbidden_cycles(g);
        EdgeSet s = cycle_ring_cover(g, sizes);
        CanonicalCheck chk = check_strongly_canonical(s, fc);
        if (!chk.ok) return {false, "ring cover not strongly canonical: " + chk.why};
        std::string err = consume(remove_all_small(s, fc));
        if (!err.empty()) return {false, err + " on a ring instance"};
    }
    if (by_case[1] == 0 || by_case[2] == 0 || by_case[3] == 0)
        return {false, "some reduction case never fired across the corpus"};
    // Tightness on the chain family: at least one exactly cost-neutral step.
    bool tight_seen = false;
    for (int rings : {3, 4}) {
        Multigraph g = tight_chain(rings);
        ForbiddenCycles fc = enumerate_forbidden_cycles(g);
        ReduceResult r = remove_all_small(tight_chain_cover(g), fc);
        for (const auto& step : r.trace)
            if (step.delta() == Rational(0)) tight_seen = true;
        std::string err = consume(r);
        if (!err.empty()) return {false, err + " on the tight chain"};
    }
    if (!tight_seen) return {false, "no cost-neutral step on the tight chain family"};
    return {true, std::to_string(steps) + " steps over " + std::to_string(covers) +
                      " covers (case1/2/3 = " + std::to_string(by_case[1]) + "/" +
                      std::to_string(by_case[2]) + "/" + std::to_string(by_case[3]) +
                      "), all cost-monotone; tight chain reaches delta = 0"};
}

Outcome criterion_end_to_end() {
    int forced = 0, ratio_checked = 0;
    std::uint64_t seed = 5000;
    while (forced < 100) {
        GeneratorSpec spec;
        spec.family = forced % 2 ? Family::RandomStructured : Family::HamiltonianPlusChords;
        spec.n = 8 + static_cast<int>(seed % 7); // 8..14
        spec.density = 0.4;
        spec.seed = seed++;
        Multigraph g(0, {});
        try {
            g = generate(spec);
        } catch (const GenerationFailed&) {
            continue;
        }
        PipelineOptions opt;
        opt.force_full = true;
        PipelineResult r = run_pipeline(g, opt);
        if (!r.feasible || !is_2vc(r.solution))
            return {false, "infeasible solution at seed " + std::to_string(spec.seed)};
        if (!r.completion_cost_ok)
            return {false, "completion cost check failed at small scale, seed " +
                               std::to_string(spec.seed)};
        if (!r.oracle_opt)
            return {false, "oracle unavailable at small scale, seed " + std::to_string(spec.seed)};
        // 95/72 * opt - 2, exact comparison.
        if (Rational(95, 72) * Rational(*r.oracle_opt) - Rational(2) < Rational(r.final.size))
            return {false, "ratio bound failed at seed " + std::to_string(spec.seed)};
        ++ratio_checked;
        ++forced;
    }
    // Larger instances with a known optimum: the generators embed a
    // hamiltonian cycle, so opt equals the vertex count.
    int large = 0, completion_flagged = 0;
    seed = 9000;
    while (large < 30) {
        GeneratorSpec spec;
        spec.family = large % 2 ? Family::RandomStructured : Family::HamiltonianPlusChords;
        spec.n = 20 + 2 * (large % 5); // 20..28
        spec.density = 0.35;
        spec.seed = seed++;
        Multigraph g(0, {});
        try {
            g = generate(spec);
        } catch (const GenerationFailed&) {
            continue;
        }
        PipelineResult r = run_pipeline(g);
        if (!r.feasible) return {false, "infeasible at seed " + std::to_string(spec.seed)};
        if (!r.completion_cost_ok) {
            ++completion_flagged; // reported, not gating above desk scale
            ++large;
            continue;
        }
        if (Rational(95, 72) * Rational(g.vertex_count()) - Rational(2) <
            Rational(r.final.size))
            return {false, "ratio bound failed on hamiltonian instance, seed " +
                               std::to_string(spec.seed)};
        ++ratio_checked;
        ++large;
    }
    return {true, "100 forced small runs + 30 large runs feasible; " +
                      std::to_string(ratio_checked) + " ratio checks passed; " +
                      std::to_string(completion_flagged) + " completion flags (reported)"};
}

Outcome criterion_parallel_edge_property() {
    int checked = 0;
    std::uint64_t seed = 40000;
    SplitMix rng(12345);
    while (checked < 1000) {
        GeneratorSpec spec;
        spec.family = Family::GadgetRich;
        spec.n = 13 + static_cast<int>(seed % 4);
        spec.density = 0.5;
        spec.seed = seed++;
        Multigraph g(0, {});
        try {
            g = generate(spec);
        } catch (const GenerationFailed&) {
            continue;
        }
        ReducedHost rh = build_gprime(g, select_maximal_families(g));
        const Multigraph& gp = rh.graph;
        // Raw triangles of the reduced graph, including ones whose edges
        // carry parallel copies; the tested triangle may sit outside T.
        std::vector<std::array<int, 3>> tris;
        for (int a = 0; a < gp.vertex_count(); ++a)
            for (int b : gp.neighbors(a)) {
                if (b <= a) continue;
                for (int c : gp.neighbors(a))
                    if (c > b && gp.adjacent(b, c)) tris.push_back({a, b, c});
            }
        if (tris.empty()) continue;
        // Random triangle with exactly two of its edges in a random 2-matching.
        for (int round = 0; round < 4 && checked < 1000; ++round) {
            const auto& tri = tris[rng.below(tris.size())];
            std::array<int, 3> tedges{*gp.edge_between(tri[0], tri[1]),
                                      *gp.edge_between(tri[1], tri[2]),
                                      *gp.edge_between(tri[0], tri[2])};
            int skip = static_cast<int>(rng.below(3));
            EdgeSet m(gp);
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                if (i == skip) continue;
                int e = tedges[i];
                if (m.degree(gp.edge(e).a) >= 2 || m.degree(gp.edge(e).b) >= 2) ok = false;
                if (ok) m.insert(e);
            }
            if (!ok) continue;
            // Grow the 2-matching with random edges, keeping the triangle
            // intersection at exactly two (skip all edges among its pairs).
            std::vector<char> banned(gp.edge_count(), 0);
            std::array<std::pair<int, int>, 3> pairs{
                {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}}};
            for (auto [a, b] : pairs)
                for (int e : gp.edges_between(a, b)) banned[e] = 1;
            for (int tries = 0; tries < 3 * gp.edge_count(); ++tries) {
                int e = static_cast<int>(rng.below(gp.edge_count()));
                if (banned[e] || m.contains(e)) continue;
                if (m.degree(gp.edge(e).a) >= 2 || m.degree(gp.edge(e).b) >= 2) continue;
                m.insert(e);
            }
            if (!validate_appendix_precondition(gp, rh.triangles, m, tri))
                return {false, "counterexample at seed " + std::to_string(seed)};
            ++checked;
        }
    }
    return {true, "1000 randomized reduced-host 2-matchings, zero counterexamples"};
}

Outcome criterion_validator_exhaustive() {
    int found = 0;
    auto has = [](const StructureReport& rep, StructureViolation::Kind kind) {
        for (const auto& v : rep.violations)
            if (v.kind == kind) return true;
        return false;
    };
    for (int i = 0; i < 100; ++i) {
        PlantKind kind = i % 3 == 0   ? PlantKind::IrrelevantEdge
                         : i % 3 == 1 ? PlantKind::NonIsolatingTwoCut
                                      : PlantKind::RemovableFiveCycle;
        Multigraph g = plant_violation(kind, 11 + i % 4, 100 + i);
        StructureReport rep = analyze_structure(g);
        StructureViolation::Kind expect =
            kind == PlantKind::IrrelevantEdge ? StructureViolation::Kind::IrrelevantEdge
            : kind == PlantKind::NonIsolatingTwoCut
                ? StructureViolation::Kind::NonIsolatingTwoCut
                : StructureViolation::Kind::RemovableFiveCycle;
        if (!has(rep, expect))
            return {false, "planted class missed on instance " + std::to_string(i)};
        ++found;
    }
    return {true, "100 planted violations, each class detected"};
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    Corpus corpus = build_corpus();
    struct Row {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Row> rows{
        {1, "reduction identity", [&] { return criterion_reduction_identity(corpus); }},
        {2, "cover round trips", [&] { return criterion_round_trips(corpus); }},
        {3, "canonicalization", [&] { return criterion_canonicalization(corpus); }},
        {4, "credit bounds", [&] { return criterion_credit_bounds(corpus); }},
        {5, "reducer monotonicity and tightness",
         [&] { return criterion_reducer_monotonicity(corpus); }},
        {6, "end-to-end desk-scale ratio", [] { return criterion_end_to_end(); }},
        {7, "parallel-edge 2-matching property",
         [] { return criterion_parallel_edge_property(); }},
        {8, "structure validator exhaustiveness",
         [] { return criterion_validator_exhaustive(); }},
    };
    int failures = 0;
    for (auto& row : rows) {
        Outcome out;
        try {
            out = row.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        std::printf("[%s] %d. %s: %s\n", out.pass ? "PASS" : "FAIL", row.id, row.title,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    std::printf("%d/%zu criteria passed in %llds\n", static_cast<int>(rows.size()) - failures,
                rows.size(), static_cast<long long>(seconds));
    return failures == 0 ? 0 : 1;
}
