#include "doctest.h"

#include "vcss/blocks.hpp"
#include "vcss/generator.hpp"
#include "vcss/graph_io.hpp"
#include "vcss/structure.hpp"

using namespace vcss;

TEST_CASE("splitmix recurrence is pinned") {
    SplitMix rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    SplitMix rng2(1234567);
    CHECK(rng2.next() == 0x599ED017FB08FC85ull);
}

TEST_CASE("generation is deterministic and structured") {
    for (Family fam : {Family::HamiltonianPlusChords, Family::RandomStructured}) {
        GeneratorSpec spec;
        spec.family = fam;
        spec.n = 12;
        spec.density = 0.4;
        spec.seed = 11;
        Multigraph a = generate(spec);
        Multigraph b = generate(spec);
        CHECK(save_graph(a) == save_graph(b));
        CHECK(analyze_structure(a).is_structured());
    }
}

TEST_CASE("gadget-rich instances carry forbidden cycles") {
    GeneratorSpec spec;
    spec.family = Family::GadgetRich;
    spec.n = 16;
    spec.density = 0.5;
    bool found_pair = false, found_triple = false;
    for (std::uint64_t seed = 1; seed <= 12 && !(found_pair && found_triple); ++seed) {
        spec.seed = seed;
        Multigraph g = generate(spec);
        CHECK(analyze_structure(g).is_structured());
        auto fc = enumerate_forbidden_cycles(g);
        found_pair = found_pair || !fc.four_cycles.empty();
        found_triple = found_triple || !fc.six_cycles.empty();
    }
    CHECK(found_pair);
    CHECK(found_triple);
}

TEST_CASE("tight chain is structured for several ring counts") {
    for (int rings : {3, 4, 5}) {
        Multigraph g = tight_chain(rings);
        CHECK(g.vertex_count() == 6 * rings);
        CHECK(analyze_structure(g).is_structured());
        auto fc = enumerate_forbidden_cycles(g);
        CHECK(fc.six_cycles.empty()); // rings are wired to stay unforbidden
        EdgeSet s = tight_chain_cover(g);
        CHECK(is_cycle_restricted(s, fc).ok);
    }
}

TEST_CASE("planted violations are found by class") {
    auto has = [](const StructureReport& rep, StructureViolation::Kind kind) {
        for (const auto& v : rep.violations)
            if (v.kind == kind) return true;
        return false;
    };
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Multigraph a = plant_violation(PlantKind::IrrelevantEdge, 12, seed);
        auto ra = analyze_structure(a);
        CHECK(has(ra, StructureViolation::Kind::IrrelevantEdge));

        Multigraph b = plant_violation(PlantKind::NonIsolatingTwoCut, 12, seed);
        auto rb = analyze_structure(b);
        CHECK(has(rb, StructureViolation::Kind::NonIsolatingTwoCut));
        CHECK_FALSE(has(rb, StructureViolation::Kind::IrrelevantEdge));

        Multigraph c = plant_violation(PlantKind::RemovableFiveCycle, 12, seed);
        auto rc = analyze_structure(c);
        CHECK(has(rc, StructureViolation::Kind::RemovableFiveCycle));
    }
}

TEST_CASE("structured instances admit a cross matching of size three") {
    // Any balanced-enough partition of a structured host carries a matching
    // of size three across it.
    SplitMix rng(99);
    for (std::uint64_t seed = 21; seed <= 26; ++seed) {
        GeneratorSpec spec;
        spec.family = Family::RandomStructured;
        spec.n = 12;
        spec.density = 0.4;
        spec.seed = seed;
        Multigraph g = generate(spec);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> v1, v2;
            for (int v = 0; v < g.vertex_count(); ++v) (rng.next() & 1 ? v1 : v2).push_back(v);
            if (v1.size() < 4 || v2.size() < 4) continue;
            CHECK(find_matching_across(g, v1, v2, 3).has_value());
        }
    }
}

TEST_CASE("cycle rings are structured with canonical covers") {
    for (const auto& sizes :
         {std::vector<int>{4, 4, 4}, std::vector<int>{6, 5, 4}, std::vector<int>{5, 4, 6, 4}}) {
        Multigraph g = cycle_ring(sizes);
        CHECK(analyze_structure(g).is_structured());
        EdgeSet s = cycle_ring_cover(g, sizes);
        auto fc = enumerate_forbidden_cycles(g);
        CHECK(is_cycle_restricted(s, fc).ok);
    }
}

TEST_CASE("unreachable densities fail within the retry budget") {
    GeneratorSpec spec;
    spec.family = Family::RandomStructured;
    spec.n = 30;
    spec.density = 0.0; // a bare cycle always has non-isolating 2-cuts
    spec.max_retries = 4;
    CHECK_THROWS_AS(generate(spec), GenerationFailed);
}
