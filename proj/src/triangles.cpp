#include "rainbow/triangles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rainbow/matching.hpp"

namespace rainbow {

namespace {

constexpr VertexSet above(Vertex v) {
    return VertexSet(v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1));
}

bool distinct3(Color a, Color b, Color c) { return a != b && a != c && b != c; }

void triangles_from(const ColoredGraph& g, Vertex u, bool rainbow_only, std::vector<Triangle>& out) {
    (g.neighbors(u) & above(u)).for_each([&](Vertex v) {
        (g.neighbors(u) & g.neighbors(v) & above(v)).for_each([&](Vertex w) {
            const Color a = g.color(u, v), b = g.color(u, w), c = g.color(v, w);
            const bool rb = distinct3(a, b, c);
            if (!rainbow_only || rb) out.push_back({{u, v, w}, {a, b, c}, rb});
        });
    });
}

}  // namespace

Triangle make_triangle(const ColoredGraph& g, Vertex a, Vertex b, Vertex c) {
    std::array<Vertex, 3> vs{a, b, c};
    std::sort(vs.begin(), vs.end());
    const Color x = g.color(vs[0], vs[1]), y = g.color(vs[0], vs[2]), z = g.color(vs[1], vs[2]);
    return {vs, {x, y, z}, x != kNoEdge && y != kNoEdge && z != kNoEdge && distinct3(x, y, z)};
}

std::vector<Triangle> enumerate_triangles(const ColoredGraph& g, bool rainbow_only, int workers) {
    const int n = g.order();
    if (workers <= 1) {
        std::vector<Triangle> out;
        for (Vertex u = 0; u < n; ++u) triangles_from(g, u, rainbow_only, out);
        return out;
    }
    std::vector<std::vector<Triangle>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (Vertex u = 0; u < n; ++u) triangles_from(g, u, rainbow_only, parts[u]);
    std::vector<Triangle> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<Triangle> enumerate_triangles_serial(const ColoredGraph& g, bool rainbow_only) {
    const int n = g.order();
    std::vector<Triangle> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                Triangle t = make_triangle(g, a, b, c);
                if (!rainbow_only || t.rainbow) out.push_back(t);
            }
        }
    return out;
}

std::vector<Triangle> rainbow_triangles_at(const ColoredGraph& g, Vertex v) {
    std::vector<Triangle> out;
    const VertexSet nv = g.neighbors(v);
    nv.for_each([&](Vertex x) {
        (nv & g.neighbors(x) & above(x)).for_each([&](Vertex y) {
            if (distinct3(g.color(v, x), g.color(v, y), g.color(x, y))) out.push_back(make_triangle(g, v, x, y));
        });
    });
    std::sort(out.begin(), out.end(), [](const Triangle& a, const Triangle& b) { return a.vertices < b.vertices; });
    return out;
}

std::vector<int> rainbow_counts_per_vertex(const ColoredGraph& g) {
    std::vector<int> counts(static_cast<std::size_t>(g.order()), 0);
    for (const Triangle& t : enumerate_triangles(g, true))
        for (Vertex v : t.vertices) ++counts[v];
    return counts;
}

std::optional<Triangle> exists_rainbow_triangle(const ColoredGraph& g) {
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u) {
        std::optional<Triangle> found;
        (g.neighbors(u) & above(u)).for_each([&](Vertex v) {
            if (found) return;
            (g.neighbors(u) & g.neighbors(v) & above(v)).for_each([&](Vertex w) {
                if (!found && distinct3(g.color(u, v), g.color(u, w), g.color(v, w)))
                    found = make_triangle(g, u, v, w);
            });
        });
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

struct PackingSearch {
    // Rainbow triangles grouped by their smallest vertex.
    std::vector<std::vector<const Triangle*>> by_first;
    std::vector<const Triangle*> current, best;

    void run(VertexSet avail) {
        if (current.size() + static_cast<std::size_t>(avail.size() / 3) <= best.size()) return;
        if (avail.size() < 3) {
            if (current.size() > best.size()) best = current;
            return;
        }
        const Vertex v = avail.first();
        for (const Triangle* t : by_first[v]) {
            const VertexSet ts = t->vertex_set();
            if ((ts & avail) != ts) continue;
            current.push_back(t);
            run(avail.without(ts));
            current.pop_back();
        }
        VertexSet rest = avail;
        rest.erase(v);
        run(rest);
    }
};

std::optional<std::pair<const Triangle*, const Triangle*>> two_disjoint_within(
    const std::vector<Triangle>& rainbow, VertexSet free) {
    for (std::size_t i = 0; i < rainbow.size(); ++i) {
        const VertexSet a = rainbow[i].vertex_set();
        if ((a & free) != a) continue;
        for (std::size_t j = i + 1; j < rainbow.size(); ++j) {
            const VertexSet b = rainbow[j].vertex_set();
            if ((b & free) == b && (a & b).empty()) return std::pair{&rainbow[i], &rainbow[j]};
        }
    }
    return std::nullopt;
}

}  // namespace

Packing max_disjoint_packing(const ColoredGraph& g, PackingMode mode) {
    const std::vector<Triangle> rainbow = enumerate_triangles(g, true);
    Packing packing;
    packing.kind = PackingKind::vertex_disjoint;

    if (mode == PackingMode::greedy) {
        VertexSet used;
        for (const Triangle& t : rainbow)
            if ((t.vertex_set() & used).empty()) {
                packing.triangles.push_back(t);
                used = used | t.vertex_set();
            }
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < packing.triangles.size() && !improved; ++i) {
                const VertexSet free = g.vertices().without(used) | packing.triangles[i].vertex_set();
                if (auto pair = two_disjoint_within(rainbow, free)) {
                    used = used.without(packing.triangles[i].vertex_set());
                    packing.triangles.erase(packing.triangles.begin() + static_cast<std::ptrdiff_t>(i));
                    packing.triangles.push_back(*pair->first);
                    packing.triangles.push_back(*pair->second);
                    used = used | pair->first->vertex_set() | pair->second->vertex_set();
                    improved = true;
                }
            }
        }
        std::sort(packing.triangles.begin(), packing.triangles.end(),
                  [](const Triangle& a, const Triangle& b) { return a.vertices < b.vertices; });
        return packing;
    }

    if (g.order() > kMaxExactPackingOrder)
        throw std::invalid_argument("exact packing supports at most " + std::to_string(kMaxExactPackingOrder) +
                                    " vertices; use greedy mode");
    PackingSearch search;
    search.by_first.resize(static_cast<std::size_t>(g.order()));
    for (const Triangle& t : rainbow) search.by_first[t.vertices[0]].push_back(&t);
    // Seed the bound with the greedy answer so the search only looks for strict improvements.
    const Packing greedy = max_disjoint_packing(g, PackingMode::greedy);
    for (const Triangle& t : greedy.triangles)
        search.best.push_back(&*std::find(rainbow.begin(), rainbow.end(), t));
    search.run(g.vertices());
    for (const Triangle* t : search.best) packing.triangles.push_back(*t);
    std::sort(packing.triangles.begin(), packing.triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a.vertices < b.vertices; });
    return packing;
}

Packing edge_disjoint_at_vertex(const ColoredGraph& g, Vertex v) {
    const std::vector<Vertex> nbrs = g.neighbors(v).to_vector();
    const int k = static_cast<int>(nbrs.size());
    std::vector<std::vector<int>> link(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Vertex x = nbrs[i], y = nbrs[j];
            if (g.has_edge(x, y) && distinct3(g.color(v, x), g.color(v, y), g.color(x, y))) {
                link[i].push_back(j);
                link[j].push_back(i);
            }
        }
    Packing packing;
    packing.kind = PackingKind::edge_disjoint_at_vertex;
    packing.at = v;
    for (auto [i, j] : matched_pairs(maximum_matching(link)))
        packing.triangles.push_back(make_triangle(g, v, nbrs[i], nbrs[j]));
    std::sort(packing.triangles.begin(), packing.triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a.vertices < b.vertices; });
    return packing;
}

bool is_properly_colored_cycle(const ColoredGraph& g, const Cycle& cycle) {
    const std::size_t len = cycle.size();
    if (len < 3) return false;
    for (std::size_t i = 0; i < len; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) return false;
    for (std::size_t i = 0; i < len; ++i) {
        const Color in = g.color(cycle[(i + len - 1) % len], cycle[i]);
        const Color out = g.color(cycle[i], cycle[(i + 1) % len]);
        if (in == out) return false;
    }
    return true;
}

namespace {

template <typename F>
void for_each_short_cycle(const ColoredGraph& g, F&& f) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (!f(Cycle{a, b, c})) return;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex x = a + 1; x < n; ++x)
            for (Vertex y = a + 1; y < n; ++y) {
                if (y == x) continue;
                for (Vertex z = x + 1; z < n; ++z)
                    if (z != y && !f(Cycle{a, x, y, z})) return;
            }
}

}  // namespace

std::optional<Cycle> find_pc_cycle_le4(const ColoredGraph& g) {
    std::optional<Cycle> found;
    for_each_short_cycle(g, [&](Cycle c) {
        if (!is_properly_colored_cycle(g, c)) return true;
        found = std::move(c);
        return false;
    });
    return found;
}

std::vector<Cycle> all_pc_cycles_le4(const ColoredGraph& g) {
    std::vector<Cycle> out;
    for_each_short_cycle(g, [&](Cycle c) {
        if (is_properly_colored_cycle(g, c)) out.push_back(std::move(c));
        return true;
    });
    return out;
}

std::optional<std::pair<Cycle, Cycle>> find_two_disjoint_pc_cycles(const ColoredGraph& g) {
    const std::vector<Cycle> cycles = all_pc_cycles_le4(g);
    std::vector<std::uint64_t> masks;
    masks.reserve(cycles.size());
    for (const Cycle& c : cycles) {
        std::uint64_t m = 0;
        for (Vertex v : c) m |= std::uint64_t{1} << v;
        masks.push_back(m);
    }
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if ((masks[i] & masks[j]) == 0) return std::pair{cycles[i], cycles[j]};
    return std::nullopt;
}

}  // namespace rainbow
