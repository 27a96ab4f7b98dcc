#include "rainbow/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace rainbow {

namespace {

struct CompletionTable {
    std::array<std::array<std::uint64_t, kMaxEnumerationEdges + 2>, kMaxEnumerationEdges + 1> f{};

    CompletionTable() {
        for (int b = 0; b <= kMaxEnumerationEdges + 1; ++b) f[0][b] = 1;
        for (int r = 1; r <= kMaxEnumerationEdges; ++r)
            for (int b = 0; b <= kMaxEnumerationEdges + 1 - r; ++b)
                f[r][b] = static_cast<std::uint64_t>(b) * f[r - 1][b] + f[r - 1][b + 1];
    }
};

const CompletionTable& completion_table() {
    static const CompletionTable table;
    return table;
}

}  // namespace

std::uint64_t rgs_completions(int remaining, int blocks) {
    if (remaining < 0 || remaining > kMaxEnumerationEdges || blocks < 0 || blocks + remaining > kMaxEnumerationEdges + 1)
        throw std::out_of_range("rgs_completions: arguments outside the table");
    return completion_table().f[remaining][blocks];
}

void check_enumeration_order(int n) {
    if (n >= 1 && n <= kMaxEnumerationOrder) return;
    const int m = n * (n - 1) / 2;
    std::string estimate;
    if (n > kMaxEnumerationOrder && n <= 12) {
        // Bell(m) grows past 10^18 quickly; report it in floating point.
        std::vector<long double> row{1.0L};
        for (int i = 1; i <= m; ++i) {
            std::vector<long double> next{row.back()};
            for (long double x : row) next.push_back(next.back() + x);
            row = std::move(next);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3Le", row.front());
        estimate = std::string(", which has Bell(") + std::to_string(m) + ") ~ " + buf + " colorings";
    }
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                "; got n=" + std::to_string(n) + estimate);
}

ColoringState::ColoringState(int n) : n_(n), m_(n * (n - 1) / 2) {
    check_enumeration_order(n);
    std::array<std::array<int, kMaxEnumerationOrder>, kMaxEnumerationOrder> index{};
    int e = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            eu_[e] = u;
            ev_[e] = v;
            index[u][v] = index[v][u] = e;
            ++e;
        }
    // Triangle {a, u, v} with a < u < v closes at edge (u, v).
    for (e = 0; e < m_; ++e) {
        const Vertex u = eu_[e], v = ev_[e];
        for (Vertex a = 0; a < u; ++a)
            closing_[e][closing_count_[e]++] = {static_cast<std::uint8_t>(index[a][u]),
                                                static_cast<std::uint8_t>(index[a][v]), static_cast<std::uint8_t>(a)};
    }
    for (int d = 0; d <= m_; ++d)
        for (int f = d; f < m_; ++f) {
            ++remaining_[d][eu_[f]];
            ++remaining_[d][ev_[f]];
        }
}

int ColoringState::min_color_degree() const {
    int best = n_ > 1 ? kMaxEnumerationEdges : 0;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, color_degree(v));
    return best;
}

int ColoringState::mono_degree(Vertex v) const {
    int best = 0;
    for (int c = 0; c < blocks_; ++c) best = std::max<int>(best, mono_[v][c]);
    return best;
}

int ColoringState::max_mono_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, mono_degree(v));
    return best;
}

ColoredGraph ColoringState::to_graph() const {
    std::vector<RawEdge> edges;
    edges.reserve(static_cast<std::size_t>(depth_));
    for (int e = 0; e < depth_; ++e) edges.push_back({eu_[e], ev_[e], color_[e]});
    return ColoredGraph::from_edges(n_, edges);
}

int shard_prefix_length(int n) { return std::min(n * (n - 1) / 2, 8); }

namespace detail {

std::vector<std::vector<std::uint8_t>> rgs_prefixes(int length) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> cur;
    auto rec = [&](auto&& self, int blocks) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c <= blocks; ++c) {
            cur.push_back(static_cast<std::uint8_t>(c));
            self(self, std::max(blocks, c + 1));
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

}  // namespace rainbow
