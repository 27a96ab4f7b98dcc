#include "rainbow/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rainbow {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ColoredGraph gen_construction2(int p) {
    if (p < 2) throw GraphError("construction2 requires p >= 2");
    const int n = 2 * p;
    GraphBuilder b(n);
    // Hub colors 1..p; fresh internal colors p+1..2p-1.
    auto first = [](int i) { return 2 * i - 2; };
    b.set_edge(0, 1, 1);
    for (int i = 2; i <= p; ++i) {
        b.set_edge(0, first(i), i).set_edge(0, first(i) + 1, i);
        b.set_edge(1, first(i), i).set_edge(1, first(i) + 1, i);
        b.set_edge(first(i), first(i) + 1, static_cast<std::uint64_t>(p + i - 1));
    }
    for (int i = 2; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            b.set_edge(first(i), first(j), i).set_edge(first(i) + 1, first(j) + 1, i);
            b.set_edge(first(i), first(j) + 1, j).set_edge(first(i) + 1, first(j), j);
        }
    return b.build();
}

ColoredGraph gen_extremal_thm10(int n) {
    if (n < 5 || n % 2 == 0) throw GraphError("extremal structure requires odd n >= 5");
    const int t = (n - 1) / 2;
    GraphBuilder b(n);
    auto a = [](int i) { return 2 * i - 1; };
    for (int i = 1; i <= t; ++i) {
        b.set_edge(0, a(i), i).set_edge(0, a(i) + 1, i);
        b.set_edge(a(i), a(i) + 1, i);
    }
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            b.set_edge(a(i), a(j), i).set_edge(a(i) + 1, a(j) + 1, i);
            b.set_edge(a(i), a(j) + 1, j).set_edge(a(i) + 1, a(j), j);
        }
    return b.build();
}

std::optional<Thm10Certificate> recognize_thm10(const ColoredGraph& g) {
    if (!g.is_complete()) throw std::invalid_argument("recognize_thm10 requires a complete graph");
    const int n = g.order();
    if (n % 2 == 0) return std::nullopt;
    const int t = (n - 1) / 2;
    for (Vertex v = 0; v < n; ++v)
        if (g.color_degree(v) != t) return std::nullopt;

    for (Vertex hub = 0; hub < n; ++hub) {
        const std::vector<ColorClass> classes = g.neighbor_color_classes(hub);
        if (static_cast<int>(classes.size()) != t) continue;
        if (std::any_of(classes.begin(), classes.end(), [](const ColorClass& c) { return c.members.size() != 2; }))
            continue;

        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            const Color ci = classes[i].color;
            const std::vector<Vertex> part = classes[i].members.to_vector();
            const Color inner = g.color(part[0], part[1]);
            if (t >= 3) {
                ok = inner == ci;
            } else {
                ok = std::any_of(classes.begin(), classes.end(), [&](const ColorClass& c) { return c.color == inner; });
            }
            for (int j = 0; j < t && ok; ++j) {
                if (j == i) continue;
                const Color cj = classes[j].color;
                for (Vertex u : part) {
                    const std::vector<Color> seen = g.colors_between(VertexSet{u}, classes[j].members);
                    const bool within = std::all_of(seen.begin(), seen.end(), [&](Color c) { return c == ci || c == cj; });
                    const bool has_j = std::find(seen.begin(), seen.end(), cj) != seen.end();
                    if (!within || !has_j) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;

        Thm10Certificate cert;
        cert.hub = hub;
        for (const ColorClass& c : classes) {
            const std::vector<Vertex> part = c.members.to_vector();
            cert.pairs.emplace_back(part[0], part[1]);
            cert.part_colors.push_back(c.color);
        }
        return cert;
    }
    return std::nullopt;
}

bool certificate_holds(const ColoredGraph& g, const Thm10Certificate& cert) {
    const int n = g.order();
    if (n % 2 == 0 || !g.is_complete()) return false;
    const int t = (n - 1) / 2;
    if (static_cast<int>(cert.pairs.size()) != t || static_cast<int>(cert.part_colors.size()) != t) return false;
    if (cert.hub < 0 || cert.hub >= n) return false;

    // Parts partition V.
    std::vector<int> part_of(static_cast<std::size_t>(n), -2);
    part_of[cert.hub] = -1;
    for (int i = 0; i < t; ++i)
        for (Vertex x : {cert.pairs[i].first, cert.pairs[i].second}) {
            if (x < 0 || x >= n || part_of[x] != -2) return false;
            part_of[x] = i;
        }

    // (1) every vertex sees exactly t colors.
    for (Vertex v = 0; v < n; ++v) {
        std::set<Color> seen;
        for (Vertex u = 0; u < n; ++u)
            if (u != v) seen.insert(g.color(u, v));
        if (static_cast<int>(seen.size()) != t) return false;
    }
    const std::set<Color> hub_colors(cert.part_colors.begin(), cert.part_colors.end());
    if (static_cast<int>(hub_colors.size()) != t) return false;

    for (int i = 0; i < t; ++i) {
        const auto [x, y] = cert.pairs[i];
        const Color ci = cert.part_colors[i];
        if (g.color(cert.hub, x) != ci || g.color(cert.hub, y) != ci) return false;
        // (4)
        if (t >= 3 ? g.color(x, y) != ci : !hub_colors.contains(g.color(x, y))) return false;
        // (3)
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            const Color cj = cert.part_colors[j];
            for (Vertex u : {x, y}) {
                const Color c1 = g.color(u, cert.pairs[j].first), c2 = g.color(u, cert.pairs[j].second);
                if ((c1 != ci && c1 != cj) || (c2 != ci && c2 != cj)) return false;
                if (c1 != cj && c2 != cj) return false;
            }
        }
    }
    return true;
}

ColoredGraph gen_pc_bipartite(int n) {
    if (n < 4 || n % 2 != 0) throw GraphError("proper bipartite construction requires even n >= 4");
    const int h = n / 2;
    GraphBuilder b(n);
    for (Vertex u = 0; u < h; ++u)
        for (Vertex w = 0; w < h; ++w) b.set_edge(u, h + w, static_cast<std::uint64_t>((u + w) % h));
    return b.build();
}

ColoredGraph gen_rainbow_complete(int n) {
    GraphBuilder b(n);
    std::uint64_t c = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.set_edge(u, v, c++);
    return b.build();
}

ColoredGraph gen_random(int n, int color_count, std::uint64_t seed, Completeness completeness) {
    if (color_count < 1) throw std::invalid_argument("gen_random requires color_count >= 1");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!completeness.is_complete() && uniform_unit(rng) >= completeness.edge_probability) continue;
            b.set_edge(u, v, uniform_below(rng, static_cast<std::uint64_t>(color_count)));
        }
    return b.build();
}

std::optional<ColoredGraph> gen_biased_high_color_degree(int n, int target_delta, std::uint64_t seed,
                                                         Completeness completeness) {
    if (target_delta < 1 || target_delta > n - 1)
        throw std::invalid_argument("target color-degree " + std::to_string(target_delta) + " infeasible for n=" +
                                    std::to_string(n));
    std::mt19937_64 rng(seed);

    struct E {
        Vertex u, v;
    };
    std::vector<E> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!completeness.is_complete() && uniform_unit(rng) >= completeness.edge_probability) continue;
            edges.push_back({u, v});
            ++degree[u];
            ++degree[v];
        }
    if (*std::min_element(degree.begin(), degree.end()) < target_delta) return std::nullopt;

    // Every edge starts as its own color class; cd[v] == degree[v].
    const std::size_t m = edges.size();
    std::vector<std::vector<int>> members(m);
    std::vector<int> count(static_cast<std::size_t>(n) * m, 0);
    std::vector<int> cd = degree;
    std::vector<int> live(m);
    for (std::size_t e = 0; e < m; ++e) {
        members[e].push_back(static_cast<int>(e));
        live[e] = static_cast<int>(e);
        count[static_cast<std::size_t>(edges[e].u) * m + e] = 1;
        count[static_cast<std::size_t>(edges[e].v) * m + e] = 1;
    }
    auto cnt = [&](Vertex v, int c) -> int& { return count[static_cast<std::size_t>(v) * m + c]; };

    auto try_merge = [&](int a, int b) {
        // Vertices touching both classes lose one color.
        for (int e : members[b])
            for (Vertex x : {edges[e].u, edges[e].v})
                if (cnt(x, a) > 0 && cd[x] - 1 < target_delta) return false;
        for (int e : members[b])
            for (Vertex x : {edges[e].u, edges[e].v}) {
                const bool had_a = cnt(x, a) > 0;
                --cnt(x, b);
                ++cnt(x, a);
                if (had_a && cnt(x, b) == 0) {
                    // x had both; b disappeared at x
                    --cd[x];
                } else if (!had_a && cnt(x, b) > 0) {
                    // a newly present while b remains
                    ++cd[x];
                }
            }
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();
        return true;
    };

    const bool saturate = uniform_below(rng, 2) == 0;
    const std::uint64_t attempts_cap = saturate ? ~std::uint64_t{0} : uniform_below(rng, 4 * m + 1);
    const std::size_t patience = 2 * m + 8;
    std::size_t failures = 0;
    for (std::uint64_t attempt = 0; attempt < attempts_cap && live.size() > 1 && failures < patience; ++attempt) {
        const std::size_t ia = uniform_below(rng, live.size());
        std::size_t ib = uniform_below(rng, live.size() - 1);
        if (ib >= ia) ++ib;
        if (try_merge(live[ia], live[ib])) {
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(ib));
            failures = 0;
        } else {
            ++failures;
        }
    }

    std::vector<int> class_of(m);
    for (int c : live)
        for (int e : members[c]) class_of[e] = c;
    GraphBuilder b(n);
    for (std::size_t e = 0; e < m; ++e) b.set_edge(edges[e].u, edges[e].v, static_cast<std::uint64_t>(class_of[e]));
    ColoredGraph g = b.build();
    if (g.min_color_degree() < target_delta) return std::nullopt;
    return g;
}

}  // namespace rainbow
