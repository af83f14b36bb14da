#ifndef VCSS_GENERATOR_HPP
#define VCSS_GENERATOR_HPP

// Deterministic structured-instance generators. All randomness flows through
// the splitmix recurrence below, so a spec reproduces byte-identical graphs
// on any platform:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)

#include <cstdint>
#include <string>

#include "vcss/multigraph.hpp"

namespace vcss {

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class Family {
    HamiltonianPlusChords,
    GadgetRich,
    TightSixCycleChain,
    RandomStructured,
};

struct GeneratorSpec {
    Family family = Family::HamiltonianPlusChords;
    int n = 12;
    // Chord/edge density knob in [0,1]; for the chain family the number of
    // rings is derived from n instead.
    double density = 0.3;
    std::uint64_t seed = 1;
    int max_retries = 64;
};

struct GenerationFailed : std::runtime_error {
    explicit GenerationFailed(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic from the spec; the result passes analyze_structure.
Multigraph generate(const GeneratorSpec& spec);

// Ring of k >= 3 six-cycles wired so the reducer's cost-neutral merge fires;
// vertex numbering puts the second ring first.
Multigraph tight_chain(int rings);
// The canonical minimum cycle-restricted cover of tight_chain(rings): the
// ring cycles themselves.
EdgeSet tight_chain_cover(const Multigraph& g);

// Ring of cycles with the given sizes (each 4, 5 or 6), double-linked so the
// host is structured and the disjoint cycles form a strongly canonical
// cover. Drives every reducer case on desk-scale instances.
Multigraph cycle_ring(const std::vector<int>& sizes);
EdgeSet cycle_ring_cover(const Multigraph& g, const std::vector<int>& sizes);

Family family_from_name(const std::string& name);
std::string family_name(Family family);

// Planted-violation instances for the validator exhaustiveness check:
// start from a structured base and plant exactly one violation class.
enum class PlantKind { IrrelevantEdge, NonIsolatingTwoCut, RemovableFiveCycle };
Multigraph plant_violation(PlantKind kind, int n, std::uint64_t seed);

} // namespace vcss

#endif
