#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace rainbow {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxOrder)
        throw GraphError("vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
}

}  // namespace

ColoredGraph ColoredGraph::from_edges(int n, std::span<const RawEdge> edges) {
    check_order(n);
    const auto un = static_cast<std::size_t>(n);
    std::vector<char> seen(un * un, 0);

    struct Keyed {
        Vertex u, v;
        std::uint64_t raw;
    };
    std::vector<Keyed> sorted;
    sorted.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const RawEdge& e = edges[i];
        const int entry = static_cast<int>(i) + 1;
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("edge " + std::to_string(entry) + ": vertex id out of range for n=" + std::to_string(n),
                             entry);
        if (e.u == e.v)
            throw GraphError("edge " + std::to_string(entry) + ": self-loop at vertex " + std::to_string(e.u), entry);
        const Vertex a = std::min(e.u, e.v);
        const Vertex b = std::max(e.u, e.v);
        char& mark = seen[static_cast<std::size_t>(a) * un + b];
        if (mark)
            throw GraphError("edge " + std::to_string(entry) + ": duplicate pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")",
                             entry);
        mark = 1;
        sorted.push_back({a, b, e.color});
    }
    std::sort(sorted.begin(), sorted.end(), [](const Keyed& x, const Keyed& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });

    ColoredGraph g;
    g.n_ = n;
    g.matrix_.assign(un * un, kNoEdge);
    g.adjacency_.assign(un, VertexSet{});
    g.edges_.reserve(sorted.size());

    std::unordered_map<std::uint64_t, Color> dense;
    for (const Keyed& e : sorted) {
        auto [it, fresh] = dense.try_emplace(e.raw, static_cast<Color>(dense.size()));
        const Color c = it->second;
        g.matrix_[static_cast<std::size_t>(e.u) * un + e.v] = c;
        g.matrix_[static_cast<std::size_t>(e.v) * un + e.u] = c;
        g.adjacency_[e.u].insert(e.v);
        g.adjacency_[e.v].insert(e.u);
        g.edges_.push_back({e.u, e.v, c});
    }
    g.colors_ = static_cast<int>(dense.size());

    // Incremental profile: one pass over the edge list.
    DegreeProfile& p = g.profile_;
    p.degree.assign(un, 0);
    p.color_degree.assign(un, 0);
    p.mono_degree.assign(un, 0);
    std::vector<int> counts(un * static_cast<std::size_t>(std::max(g.colors_, 1)), 0);
    auto bump = [&](Vertex x, Color c) {
        ++p.degree[x];
        int& k = counts[static_cast<std::size_t>(x) * g.colors_ + c];
        if (k++ == 0) ++p.color_degree[x];
        p.mono_degree[x] = std::max(p.mono_degree[x], k);
    };
    for (const Edge& e : g.edges_) {
        bump(e.u, e.color);
        bump(e.v, e.color);
    }
    p.min_color_degree = *std::min_element(p.color_degree.begin(), p.color_degree.end());
    p.max_mono_degree = *std::max_element(p.mono_degree.begin(), p.mono_degree.end());
    return g;
}

DegreeProfile compute_degree_profile(const ColoredGraph& g) {
    const int n = g.order();
    DegreeProfile p;
    p.degree.resize(n);
    p.color_degree.resize(n);
    p.mono_degree.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> counts(static_cast<std::size_t>(g.color_count()) + 1, 0);
        for (Vertex u = 0; u < n; ++u)
            if (u != v && g.has_edge(u, v)) ++counts[g.color(u, v)];
        p.degree[v] = std::accumulate(counts.begin(), counts.end(), 0);
        p.color_degree[v] = static_cast<int>(std::count_if(counts.begin(), counts.end(), [](int k) { return k > 0; }));
        p.mono_degree[v] = *std::max_element(counts.begin(), counts.end());
    }
    p.min_color_degree = *std::min_element(p.color_degree.begin(), p.color_degree.end());
    p.max_mono_degree = *std::max_element(p.mono_degree.begin(), p.mono_degree.end());
    return p;
}

std::vector<ColorClass> ColoredGraph::neighbor_color_classes(Vertex v) const {
    std::vector<ColorClass> classes;
    adjacency_[v].for_each([&](Vertex u) {
        const Color c = color(u, v);
        auto it = std::find_if(classes.begin(), classes.end(), [c](const ColorClass& k) { return k.color == c; });
        if (it == classes.end())
            classes.push_back({c, VertexSet{}}), it = classes.end() - 1;
        it->members.insert(u);
    });
    std::sort(classes.begin(), classes.end(), [](const ColorClass& a, const ColorClass& b) {
        const int sa = a.members.size(), sb = b.members.size();
        return sa != sb ? sa < sb : a.color < b.color;
    });
    return classes;
}

std::vector<Color> ColoredGraph::colors_between(VertexSet s, VertexSet t) const {
    if (!(s & t).empty()) throw std::invalid_argument("colors_between: vertex sets overlap");
    std::vector<char> present(static_cast<std::size_t>(colors_), 0);
    s.for_each([&](Vertex x) { (adjacency_[x] & t).for_each([&](Vertex y) { present[color(x, y)] = 1; }); });
    std::vector<Color> out;
    for (Color c = 0; c < colors_; ++c)
        if (present[c]) out.push_back(c);
    return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    check_order(n);
    matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    present_.assign(static_cast<std::size_t>(n) * n, 0);
}

GraphBuilder::GraphBuilder(const ColoredGraph& g) : GraphBuilder(g.order()) {
    for (const Edge& e : g.edges()) set_edge(e.u, e.v, static_cast<std::uint64_t>(e.color));
}

GraphBuilder& GraphBuilder::set_edge(Vertex u, Vertex v, std::uint64_t color) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw GraphError("set_edge: invalid pair");
    matrix_[static_cast<std::size_t>(u) * n_ + v] = color;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = color;
    present_[static_cast<std::size_t>(u) * n_ + v] = 1;
    present_[static_cast<std::size_t>(v) * n_ + u] = 1;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("remove_edge: invalid pair");
    present_[static_cast<std::size_t>(u) * n_ + v] = 0;
    present_[static_cast<std::size_t>(v) * n_ + u] = 0;
    return *this;
}

ColoredGraph GraphBuilder::build() const {
    std::vector<RawEdge> edges;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
            const std::size_t at = static_cast<std::size_t>(u) * n_ + v;
            if (present_[at]) edges.push_back({u, v, matrix_[at]});
        }
    return ColoredGraph::from_edges(n_, edges);
}

}  // namespace rainbow
