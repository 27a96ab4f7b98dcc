#pragma once

#include <utility>
#include <vector>

namespace rainbow {

/// Maximum-cardinality matching in a general simple graph (Edmonds' blossom
/// algorithm, O(V^3)). `adjacency[v]` lists the neighbours of v.
/// Returns `mate`, with mate[v] == -1 for unmatched vertices.
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adjacency);

/// Matched pairs (a, b) with a < b, sorted.
std::vector<std::pair<int, int>> matched_pairs(const std::vector<int>& mate);

}  // namespace rainbow
