#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct Triangle {
    std::array<Vertex, 3> vertices;  // ascending
    std::array<Color, 3> colors;     // edges (v0v1, v0v2, v1v2)
    bool rainbow = false;

    VertexSet vertex_set() const { return {vertices[0], vertices[1], vertices[2]}; }
    bool operator==(const Triangle&) const = default;
};

/// Builds the triangle on three adjacent vertices (any order).
Triangle make_triangle(const ColoredGraph& g, Vertex a, Vertex b, Vertex c);

enum class PackingKind { vertex_disjoint, edge_disjoint_at_vertex };

struct Packing {
    PackingKind kind = PackingKind::vertex_disjoint;
    Vertex at = -1;  // only for edge_disjoint_at_vertex
    std::vector<Triangle> triangles;

    int size() const { return static_cast<int>(triangles.size()); }
};

/// Cycle as a vertex sequence; consecutive entries (and last/first) are adjacent.
using Cycle = std::vector<Vertex>;

/// All triangles in lexicographic vertex order. With workers > 1 the outer
/// vertex loop is split across OpenMP threads; output order does not change.
std::vector<Triangle> enumerate_triangles(const ColoredGraph& g, bool rainbow_only, int workers = 1);

/// Single-threaded reference for enumerate_triangles.
std::vector<Triangle> enumerate_triangles_serial(const ColoredGraph& g, bool rainbow_only);

/// Rainbow triangles through v, lexicographic.
std::vector<Triangle> rainbow_triangles_at(const ColoredGraph& g, Vertex v);

/// Number of rainbow triangles through each vertex.
std::vector<int> rainbow_counts_per_vertex(const ColoredGraph& g);

/// First rainbow triangle in lexicographic order, if any.
std::optional<Triangle> exists_rainbow_triangle(const ColoredGraph& g);

enum class PackingMode { exact, greedy };

inline constexpr int kMaxExactPackingOrder = 30;

/// Vertex-disjoint rainbow triangles. Exact mode is branch-and-bound and is
/// limited to kMaxExactPackingOrder vertices (std::invalid_argument above);
/// greedy mode is lexicographic greedy followed by 1-for-2 swaps.
Packing max_disjoint_packing(const ColoredGraph& g, PackingMode mode);

/// Largest set of rainbow triangles through v that pairwise share only v,
/// via maximum matching on the link graph {xy : vxy rainbow}.
Packing edge_disjoint_at_vertex(const ColoredGraph& g, Vertex v);

/// A properly colored cycle of length 3 or 4. Triangles are tried first,
/// then 4-cycles (a, x, y, z) with a the smallest vertex and x < z, both in
/// lexicographic order.
std::optional<Cycle> find_pc_cycle_le4(const ColoredGraph& g);

/// Every properly colored 3- and 4-cycle, in the order find_pc_cycle_le4 uses.
std::vector<Cycle> all_pc_cycles_le4(const ColoredGraph& g);

/// Two vertex-disjoint properly colored cycles of length at most 4, if any.
std::optional<std::pair<Cycle, Cycle>> find_two_disjoint_pc_cycles(const ColoredGraph& g);

bool is_properly_colored_cycle(const ColoredGraph& g, const Cycle& cycle);

}  // namespace rainbow
