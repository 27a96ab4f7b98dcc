#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/triangles.hpp"

namespace rainbow {

enum class TheoremId { T1, T3, F4, T8, T10, T11, F13, T14, T15, T16, T5, T6 };

enum class Scope { complete, general };

/// The graph quantities every hypothesis is written in terms of.
struct HypothesisInputs {
    int n = 0;
    int min_color_degree = 0;
    int max_mono_degree = 0;
    bool rainbow_free = false;

    static HypothesisInputs of(const ColoredGraph& g);
};

/// One registry entry. Thresholds are exact integer inequalities; a
/// statement like "d >= (n+k)/2" is evaluated as 2d >= n+k.
struct TheoremSpec {
    TheoremId id;
    std::string_view name;
    Scope scope;
    bool uses_k;
    std::string_view summary;
    bool (*hypothesis)(const HypothesisInputs&, int k);
    bool needs_rainbow_free;
};

std::span<const TheoremSpec> all_theorems();
const TheoremSpec& theorem(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

/// Smallest minimum color-degree for which the hypothesis can hold on n
/// vertices, or n when it never holds. Used to prune and to target samplers.
int color_degree_floor(const TheoremSpec& spec, int n, int k);

struct Conclusion {
    bool holds = false;
    std::vector<int> per_vertex;                  // T1/T3 counts, F4 packing sizes
    std::vector<Triangle> triangles;              // T8/T15 witness, T11/T14/F13 packing
    std::optional<Thm10Certificate> certificate;  // T10
    std::vector<Cycle> cycles;                    // T5/T6
    std::string witness;
};

/// Throws std::invalid_argument when a complete-scope theorem is applied to
/// a non-complete graph, or k < 1 for theorems that take k.
bool check_hypothesis(const ColoredGraph& g, const TheoremSpec& spec, int k = 1);
Conclusion check_conclusion(const ColoredGraph& g, const TheoremSpec& spec, int k = 1);

}  // namespace rainbow
