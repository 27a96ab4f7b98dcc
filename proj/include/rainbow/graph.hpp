#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = int;
using Color = int;

inline constexpr int kMaxOrder = 64;
inline constexpr Color kNoEdge = -1;

/// A set of vertex ids below kMaxOrder, stored as one 64-bit row.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
    }

    std::vector<Vertex> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Rejected input. `entry()` is the 1-based position of the offending edge
/// in the caller's list, or 0 when the problem is not tied to one entry.
class GraphError : public std::invalid_argument {
public:
    GraphError(const std::string& what, int entry = 0) : std::invalid_argument(what), entry_(entry) {}
    int entry() const { return entry_; }

private:
    int entry_;
};

struct RawEdge {
    Vertex u;
    Vertex v;
    std::uint64_t color;
};

struct Edge {
    Vertex u;  // u < v
    Vertex v;
    Color color;
    bool operator==(const Edge&) const = default;
};

struct DegreeProfile {
    std::vector<int> degree;
    std::vector<int> color_degree;
    std::vector<int> mono_degree;
    int min_color_degree = 0;
    int max_mono_degree = 0;

    bool operator==(const DegreeProfile&) const = default;
};

struct ColorClass {
    Color color;
    VertexSet members;
};

/// Immutable edge-colored simple graph on vertices 0..n-1 with dense color ids.
///
/// Colors are renumbered by first occurrence along the lexicographic edge
/// order, so two colorings that differ only by a renaming of colors compare
/// equal.
class ColoredGraph {
public:
    /// Validates an edge list. Throws GraphError on self-loops, duplicate
    /// pairs, out-of-range ids, or n outside 1..kMaxOrder.
    static ColoredGraph from_edges(int n, std::span<const RawEdge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int color_count() const { return colors_; }
    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    bool has_edge(Vertex u, Vertex v) const { return color(u, v) != kNoEdge; }
    Color color(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }
    VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Edges with u < v in lexicographic order.
    const std::vector<Edge>& edges() const { return edges_; }

    const DegreeProfile& profile() const { return profile_; }
    int degree(Vertex v) const { return profile_.degree[v]; }
    int color_degree(Vertex v) const { return profile_.color_degree[v]; }
    int mono_degree(Vertex v) const { return profile_.mono_degree[v]; }
    int min_color_degree() const { return profile_.min_color_degree; }
    int max_mono_degree() const { return profile_.max_mono_degree; }

    /// The classes N_i(v), ordered by ascending size, ties by color id.
    std::vector<ColorClass> neighbor_color_classes(Vertex v) const;

    /// Sorted colors on edges with one end in `s` and the other in `t`.
    /// Throws std::invalid_argument if the sets overlap.
    std::vector<Color> colors_between(VertexSet s, VertexSet t) const;

    bool operator==(const ColoredGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    ColoredGraph() = default;

    int n_ = 0;
    int colors_ = 0;
    std::vector<Color> matrix_;
    std::vector<VertexSet> adjacency_;
    std::vector<Edge> edges_;
    DegreeProfile profile_;
};

/// Recomputes the degree profile directly from the color matrix.
DegreeProfile compute_degree_profile(const ColoredGraph& g);

/// Edited copies of a graph. Colors given here are raw; build() densifies.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const ColoredGraph& g);

    GraphBuilder& set_edge(Vertex u, Vertex v, std::uint64_t color);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    int order() const { return n_; }

    ColoredGraph build() const;

private:
    int n_;
    std::vector<std::uint64_t> matrix_;
    std::vector<char> present_;
};

}  // namespace rainbow
