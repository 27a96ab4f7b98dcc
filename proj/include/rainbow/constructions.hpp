#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Edge presence model for the random generators: complete, or each edge
/// kept independently with `edge_probability`.
struct Completeness {
    double edge_probability = 1.0;

    static Completeness complete() { return {1.0}; }
    static Completeness probability(double p) { return {p}; }
    bool is_complete() const { return edge_probability >= 1.0; }
};

/// Sharpness example for the single-vertex local condition: K_{2p} with a
/// hub (vertex 0) of color-degree p that lies in no rainbow triangle, and
/// every vertex of color-degree exactly p.
///
/// Layout: hub 0, N_1 = {1}, N_i = {2i-2, 2i-1} for 2 <= i <= p. Between
/// N_i and N_j (i < j) the parallel matching gets color i and the crossed
/// matching gets color j. Each N_i edge gets its own fresh color, so the
/// graph uses 2p - 1 colors. Throws GraphError for p < 2.
ColoredGraph gen_construction2(int p);

/// Rainbow-triangle-free candidate with color-degree (n-1)/2 everywhere:
/// hub 0 and pairs A_i = {2i-1, 2i}. Hub-to-A_i and the A_i edge get
/// color i; between A_i and A_j (i < j) the parallel matching gets i and
/// the crossed matching gets j. Requires odd n >= 5.
ColoredGraph gen_extremal_thm10(int n);

/// Partition witness for the odd-order extremal structure.
struct Thm10Certificate {
    Vertex hub = -1;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // A_1 .. A_t
    std::vector<Color> part_colors;                // color of hub-to-A_i edges
};

/// Searches hubs in ascending order for the extremal partition. For a part
/// A_i and any u in A_i, the colors from u to A_j (j != i) must lie in
/// {i, j} and include j. Only structure is checked, not rainbow-freeness.
/// Throws std::invalid_argument for non-complete input.
std::optional<Thm10Certificate> recognize_thm10(const ColoredGraph& g);

/// Checks properties (1)-(4) of a certificate against the graph directly.
bool certificate_holds(const ColoredGraph& g, const Thm10Certificate& cert);

/// Properly edge-colored K_{n/2,n/2}: color(u, w) = (u + w) mod n/2 with
/// parts {0..n/2-1} and {n/2..n-1}. Requires even n >= 4.
ColoredGraph gen_pc_bipartite(int n);

/// K_n with every edge a distinct color.
ColoredGraph gen_rainbow_complete(int n);

/// Uniform random color from `color_count` per present edge.
ColoredGraph gen_random(int n, int color_count, std::uint64_t seed, Completeness completeness);

/// Hypothesis-conditioned sampler: starts with every edge its own color and
/// merges random color classes while the minimum color-degree stays at or
/// above `target_delta`. For non-complete graphs, edges are dropped at
/// random only while both endpoints keep degree >= target_delta.
/// Returns nullopt if the starting graph already misses the target.
/// Throws std::invalid_argument when target_delta is outside 1..n-1.
std::optional<ColoredGraph> gen_biased_high_color_degree(int n, int target_delta, std::uint64_t seed,
                                                         Completeness completeness);

/// Uniform integer in [0, bound) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1).
double uniform_unit(std::mt19937_64& rng);

/// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace rainbow
