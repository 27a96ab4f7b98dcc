#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxEnumerationEdges = kMaxEnumerationOrder * (kMaxEnumerationOrder - 1) / 2;

/// Number of restricted growth strings of length `remaining` that extend a
/// prefix already using `blocks` labels. completions(m, 0) is Bell(m).
std::uint64_t rgs_completions(int remaining, int blocks);

/// Partial edge-coloring of K_n along the lexicographic edge order, with the
/// per-vertex color sets, color multiplicities and rainbow-triangle counts
/// kept up to date as edges are assigned and unassigned.
class ColoringState {
public:
    explicit ColoringState(int n);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    int depth() const { return depth_; }
    int blocks() const { return blocks_; }

    Vertex edge_u(int e) const { return eu_[e]; }
    Vertex edge_v(int e) const { return ev_[e]; }
    int color(int e) const { return color_[e]; }
    std::span<const std::uint8_t> rgs() const { return {color_.data(), static_cast<std::size_t>(depth_)}; }

    std::uint32_t colors_at(Vertex v) const { return mask_[v]; }
    int color_degree(Vertex v) const { return std::popcount(mask_[v]); }
    int min_color_degree() const;
    int mono_degree(Vertex v) const;
    int max_mono_degree() const;

    int rainbow_total() const { return rainbow_total_; }
    int rainbow_at(Vertex v) const { return rainbow_at_[v]; }

    /// Upper bound on the final color-degree of v given the undecided edges.
    int color_degree_bound(Vertex v) const { return color_degree(v) + remaining_[depth_][v]; }

    /// Assigns the next edge (index depth()) a label in 0..blocks().
    void push(int c) {
        const int e = depth_;
        const Vertex u = eu_[e], v = ev_[e];
        color_[e] = static_cast<std::uint8_t>(c);
        saved_blocks_[e] = static_cast<std::uint8_t>(blocks_);
        if (c == blocks_) ++blocks_;
        saved_mask_[e][0] = mask_[u];
        saved_mask_[e][1] = mask_[v];
        mask_[u] |= 1U << c;
        mask_[v] |= 1U << c;
        ++mono_[u][c];
        ++mono_[v][c];
        int made = 0;
        for (int i = 0; i < closing_count_[e]; ++i) {
            const Closing& t = closing_[e][i];
            const int x = color_[t.e1], y = color_[t.e2];
            if (x != y && x != c && y != c) {
                ++rainbow_at_[t.apex];
                ++rainbow_at_[u];
                ++rainbow_at_[v];
                ++made;
            }
        }
        made_[e] = static_cast<std::uint8_t>(made);
        rainbow_total_ += made;
        ++depth_;
    }

    void pop() {
        const int e = --depth_;
        const Vertex u = eu_[e], v = ev_[e];
        const int c = color_[e];
        if (made_[e] != 0) {
            for (int i = 0; i < closing_count_[e]; ++i) {
                const Closing& t = closing_[e][i];
                const int x = color_[t.e1], y = color_[t.e2];
                if (x != y && x != c && y != c) {
                    --rainbow_at_[t.apex];
                    --rainbow_at_[u];
                    --rainbow_at_[v];
                }
            }
            rainbow_total_ -= made_[e];
        }
        --mono_[u][c];
        --mono_[v][c];
        mask_[u] = saved_mask_[e][0];
        mask_[v] = saved_mask_[e][1];
        blocks_ = saved_blocks_[e];
    }

    /// Materializes a complete assignment as a validated graph.
    ColoredGraph to_graph() const;

private:
    struct Closing {
        std::uint8_t e1, e2;  // the two earlier edges of the triangle
        std::uint8_t apex;    // the third vertex
    };

    int n_;
    int m_;
    int depth_ = 0;
    int blocks_ = 0;
    int rainbow_total_ = 0;
    std::array<Vertex, kMaxEnumerationEdges> eu_{}, ev_{};
    std::array<std::uint8_t, kMaxEnumerationEdges> color_{};
    std::array<std::uint8_t, kMaxEnumerationEdges> made_{};
    std::array<std::uint8_t, kMaxEnumerationEdges> saved_blocks_{};
    std::array<std::array<std::uint32_t, 2>, kMaxEnumerationEdges> saved_mask_{};
    std::array<std::array<Closing, kMaxEnumerationOrder>, kMaxEnumerationEdges> closing_{};
    std::array<int, kMaxEnumerationEdges> closing_count_{};
    std::array<std::array<int, kMaxEnumerationOrder>, kMaxEnumerationEdges + 1> remaining_{};
    std::array<std::uint32_t, kMaxEnumerationOrder> mask_{};
    std::array<std::array<std::uint8_t, kMaxEnumerationEdges>, kMaxEnumerationOrder> mono_{};
    std::array<int, kMaxEnumerationOrder> rainbow_at_{};
};

/// Subtree pruning applied during the descent. A pruned subtree is never
/// visited, but it still counts toward EnumerationStats::total().
struct EnumerationOptions {
    int min_color_degree = 0;   // skip colorings whose min color-degree must fall below this
    bool rainbow_free = false;  // skip colorings that contain a rainbow triangle
};

struct EnumerationStats {
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;
    std::uint64_t total() const { return visited + pruned; }
};

/// Throws std::invalid_argument if n is outside 1..kMaxEnumerationOrder.
void check_enumeration_order(int n);

namespace detail {

inline bool prunable(const ColoringState& s, const EnumerationOptions& opts) {
    if (opts.rainbow_free && s.rainbow_total() > 0) return true;
    if (opts.min_color_degree > 0) {
        const int e = s.depth() - 1;
        if (s.color_degree_bound(s.edge_u(e)) < opts.min_color_degree) return true;
        if (s.color_degree_bound(s.edge_v(e)) < opts.min_color_degree) return true;
    }
    return false;
}

template <typename Visitor>
void descend(ColoringState& s, Visitor& visit, const EnumerationOptions& opts, EnumerationStats& stats) {
    if (s.depth() == s.edge_count()) {
        ++stats.visited;
        visit(static_cast<const ColoringState&>(s));
        return;
    }
    const int labels = s.blocks() + 1;
    for (int c = 0; c < labels; ++c) {
        s.push(c);
        if (prunable(s, opts))
            stats.pruned += rgs_completions(s.edge_count() - s.depth(), s.blocks());
        else
            descend(s, visit, opts, stats);
        s.pop();
    }
}

/// All restricted growth strings of the given length, in lexicographic order.
std::vector<std::vector<std::uint8_t>> rgs_prefixes(int length);

}  // namespace detail

/// Single-threaded reference enumeration: visits every edge-coloring of K_n
/// up to color renaming exactly once (minus pruned subtrees), as restricted
/// growth strings over the lexicographic edge order.
template <typename Visitor>
EnumerationStats enumerate_canonical_colorings_serial(int n, Visitor& visit, const EnumerationOptions& opts = {}) {
    check_enumeration_order(n);
    ColoringState s(n);
    EnumerationStats stats;
    if (s.edge_count() == 0) {
        ++stats.visited;
        visit(static_cast<const ColoringState&>(s));
        return stats;
    }
    detail::descend(s, visit, opts, stats);
    return stats;
}

template <typename Visitor>
struct ShardedEnumeration {
    std::vector<Visitor> shards;  // in prefix order
    EnumerationStats stats;
};

/// Prefix length used to split the search tree into shards.
int shard_prefix_length(int n);

/// Parallel enumeration. The tree is cut at a fixed RGS prefix length; each
/// prefix is one shard with its own visitor from `make_visitor()`. Shards
/// are returned in prefix order, so merging them front to back gives the
/// same result for any worker count.
template <typename Factory>
auto enumerate_canonical_colorings(int n, Factory&& make_visitor, const EnumerationOptions& opts, int workers)
    -> ShardedEnumeration<decltype(make_visitor())> {
    using Visitor = decltype(make_visitor());
    check_enumeration_order(n);
    const int m = n * (n - 1) / 2;
    const int prefix_len = shard_prefix_length(n);
    const std::vector<std::vector<std::uint8_t>> prefixes = detail::rgs_prefixes(prefix_len);

    ShardedEnumeration<Visitor> out;
    out.shards.reserve(prefixes.size());
    for (std::size_t i = 0; i < prefixes.size(); ++i) out.shards.push_back(make_visitor());
    std::vector<EnumerationStats> shard_stats(prefixes.size());

    const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers > 0 ? workers : 1)
    for (long i = 0; i < count; ++i) {
        ColoringState s(n);
        EnumerationStats& st = shard_stats[static_cast<std::size_t>(i)];
        bool cut = false;
        for (std::uint8_t c : prefixes[static_cast<std::size_t>(i)]) {
            s.push(c);
            if (detail::prunable(s, opts)) {
                cut = true;
                break;
            }
        }
        if (cut) {
            int blocks = 0;
            for (std::uint8_t c : prefixes[static_cast<std::size_t>(i)]) blocks = std::max(blocks, c + 1);
            st.pruned += rgs_completions(m - prefix_len, blocks);
        } else if (s.depth() == m) {
            ++st.visited;
            out.shards[static_cast<std::size_t>(i)](static_cast<const ColoringState&>(s));
        } else {
            detail::descend(s, out.shards[static_cast<std::size_t>(i)], opts, st);
        }
    }
    for (const EnumerationStats& st : shard_stats) {
        out.stats.visited += st.visited;
        out.stats.pruned += st.pruned;
    }
    return out;
}

}  // namespace rainbow
