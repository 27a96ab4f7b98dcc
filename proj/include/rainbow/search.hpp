#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/theorems.hpp"

namespace rainbow {

enum class Forbidden { rainbow_triangle, two_disjoint_rainbow };

inline constexpr int kMaxSearchOrder = 16;

struct SearchConfig {
    int n = 7;
    Scope scope = Scope::complete;
    int min_color_degree = 4;
    Forbidden forbid = Forbidden::two_disjoint_rainbow;
    std::uint64_t budget = 100'000'000;  // total moves over all restarts
    int restarts = 32;
    std::uint64_t seed = 1;
    int max_palette = 0;  // 0: n(n-1)/2
    int workers = 1;
    int penalty = 0;      // weight per violation; 0: n * min_color_degree + 1
    std::uint64_t cycle_moves = 1'000'000;  // cooling cycle before reheating
    std::uint64_t plateau_moves = 200'000;  // reheat after this many moves without improvement
};

struct SearchResult {
    std::optional<ColoredGraph> graph;
    long best_objective = -1;
    std::uint64_t moves = 0;  // moves spent by the winning restart, or by all restarts on failure
    int restart = -1;
    std::vector<std::string> log;
};

/// Throws std::invalid_argument unless 3 <= n <= kMaxSearchOrder,
/// 1 <= min_color_degree <= n-1, budget >= 1 and restarts >= 1.
void validate_search_config(const SearchConfig& cfg);

/// Simulated annealing over colorings (and, for general scope, edge sets).
/// Objective: sum of color-degree deficits below the bound plus `penalty`
/// per forbidden structure (rainbow triangles, or vertex-disjoint pairs of
/// rainbow triangles). The first zero-objective graph is re-checked with
/// search_target_met before it is returned. Restarts use derived seeds and
/// the lowest-index success wins, so the result is the same for any
/// worker count.
SearchResult search_counterexample(const SearchConfig& cfg);

/// Direct check of a candidate: scope, minimum color-degree and the
/// forbidden property (via the exact packing for the two-disjoint case).
bool search_target_met(const ColoredGraph& g, const SearchConfig& cfg);

std::string forbidden_name(Forbidden f);

}  // namespace rainbow
