#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "fvs/graph.hpp"
#include "fvs/hclass.hpp"

namespace fvs {

// splitmix64: tiny, well-known, reproducible across languages. Instance
// generation depends on the exact stream, so the algorithm is pinned here
// rather than delegated to the standard library's unspecified engines.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0x632be59bd9b4e019ULL); }

private:
    uint64_t state_;
};

// Named 7-vertex circulant: arcs i -> i+1 and i -> i+5 (mod 7).
// 2-regular, oriented, minimum feedback vertex set 3.
Digraph fig4();

// Order 5: one plain arc 0 -> 1 plus 2-cycles on (1,2), (2,3), (3,4), (4,0).
// Minimum feedback vertex set 2.
Digraph fig10();

// Tournament of order 6 with minimum feedback vertex set 3.
Digraph fig12();

// Two bidirected triangles {0,1,2}, {3,4,5} plus arcs i -> i+3.
// Minimum feedback vertex set 4.
Digraph fig14();

// Paley tournament on 7 vertices: arcs i -> i+1, i+2, i+4 (mod 7).
// Minimum feedback vertex set 4.
Digraph paley7();

// Bidirected odd cycle on 2k+1 vertices (k >= 1).
Digraph bidirected_odd_cycle(int k);

struct GeneratedH {
    Digraph graph;
    HDecomposition decomposition;  // construction ground truth
};

// Random H member: block_budget pattern copies joined into one member by
// uniformly chosen single arcs, respecting the degree cap of 4.
GeneratedH generate_h(uint64_t seed, int block_budget);

// Seeded bounded-degree sampler. Draws a seed-dependent number of candidate
// arcs and keeps those that respect simplicity, the degree cap and (for
// oriented graphs) the no-2-cycle rule. With connected=true, resamples until
// the result is connected; throws after too many failures.
Digraph rand_bounded(int n, int max_degree, bool oriented, uint64_t seed,
                     bool connected = false);

// Every connected digraph (or orgraph) on n <= 5 labelled vertices with
// maximum degree <= max_degree, each exactly once, in a fixed order.
void enum_small(int n, int max_degree, bool oriented,
                const std::function<void(const Digraph&)>& visit);

// Parsed/rendered instance descriptors, e.g. "fig4", "co:2", "h:17:4",
// "rand_orgraph:12:4:99", "rand_digraph:12:4:99:c" (c = force connected).
struct InstanceSpec {
    std::string text;

    static std::optional<InstanceSpec> parse(const std::string& text);
    Digraph build() const;
};

}  // namespace fvs
