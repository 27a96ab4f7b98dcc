#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/triangles.hpp"

using namespace rainbow;

namespace {

ColoredGraph recolor(const ColoredGraph& g, const std::vector<std::uint64_t>& perm) {
    GraphBuilder b(g.order());
    for (const Edge& e : g.edges()) b.set_edge(e.u, e.v, perm[e.color]);
    return b.build();
}

std::vector<ColoredGraph> corpus() {
    std::vector<ColoredGraph> gs;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 3 + static_cast<int>(seed % 7);
        const int colors = 2 + static_cast<int>(seed % 6);
        gs.push_back(gen_random(n, colors, seed, seed % 3 ? Completeness::complete() : Completeness::probability(0.7)));
    }
    return gs;
}

}  // namespace

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_triangles(gen_rainbow_complete(5), true).size(), 10U);
    EXPECT_TRUE(enumerate_triangles(gen_random(7, 2, 4, Completeness::complete()), true).empty());
    EXPECT_TRUE(enumerate_triangles(gen_extremal_thm10(5), true).empty());
}

TEST(Enumerate, LexicographicAndConsistent) {
    for (const ColoredGraph& g : corpus()) {
        const auto all = enumerate_triangles(g, false);
        const auto rb = enumerate_triangles(g, true);
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                                   [](const Triangle& a, const Triangle& b) { return a.vertices < b.vertices; }));
        for (const Triangle& t : all) {
            const auto [a, b, c] = t.vertices;
            EXPECT_TRUE(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c));
            EXPECT_EQ(t.rainbow, oracle::rainbow(g, a, b, c));
        }
        EXPECT_EQ(static_cast<long>(rb.size()), std::count_if(all.begin(), all.end(), [](const Triangle& t) {
                      return t.rainbow;
                  }));
        EXPECT_EQ(rb.size(), oracle::rainbow_triangles(g).size());
    }
}

TEST(Enumerate, ParallelAndSerialAgree) {
    for (const ColoredGraph& g : corpus()) {
        for (bool only : {false, true}) {
            const auto serial = enumerate_triangles_serial(g, only);
            EXPECT_EQ(enumerate_triangles(g, only, 1), serial);
            EXPECT_EQ(enumerate_triangles(g, only, 4), serial);
        }
    }
    const ColoredGraph big = gen_random(40, 12, 3, Completeness::probability(0.6));
    EXPECT_EQ(enumerate_triangles(big, true, 3), enumerate_triangles_serial(big, true));
}

TEST(RainbowAt, Examples) {
    for (int p = 2; p <= 10; ++p) EXPECT_TRUE(rainbow_triangles_at(gen_construction2(p), 0).empty()) << p;
    const ColoredGraph rb = gen_rainbow_complete(5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(rainbow_triangles_at(rb, v).size(), 6U);
}

TEST(RainbowAt, MatchesTripleLoopOracle) {
    const ColoredGraph g = gen_random(8, 6, 42, Completeness::complete());
    const std::vector<int> expect = oracle::per_vertex_counts(g);
    for (Vertex v = 0; v < 8; ++v) {
        const auto ts = rainbow_triangles_at(g, v);
        EXPECT_EQ(static_cast<int>(ts.size()), expect[v]);
        for (const Triangle& t : ts) {
            EXPECT_TRUE(t.rainbow);
            EXPECT_TRUE(t.vertex_set().contains(v));
        }
    }
    EXPECT_EQ(rainbow_counts_per_vertex(g), expect);
}

TEST(RainbowAt, CountsSumToThreeTimesTotal) {
    for (const ColoredGraph& g : corpus()) {
        const auto per = rainbow_counts_per_vertex(g);
        EXPECT_EQ(std::accumulate(per.begin(), per.end(), 0),
                  3 * static_cast<int>(enumerate_triangles(g, true).size()));
        EXPECT_EQ(per, oracle::per_vertex_counts(g));
    }
}

TEST(Exists, Examples) {
    const auto t = exists_rainbow_triangle(gen_rainbow_complete(3));
    ASSERT_TRUE(t);
    EXPECT_EQ(t->vertices, (std::array<Vertex, 3>{0, 1, 2}));
    EXPECT_FALSE(exists_rainbow_triangle(gen_random(6, 1, 0, Completeness::complete())));
}

TEST(Exists, FirstInLexOrderAndAgreesWithEnumeration) {
    for (const ColoredGraph& g : corpus()) {
        const auto t = exists_rainbow_triangle(g);
        const auto all = enumerate_triangles(g, true);
        ASSERT_EQ(t.has_value(), !all.empty());
        if (t) EXPECT_EQ(*t, all.front());
    }
}

TEST(Packing, Examples) {
    EXPECT_EQ(max_disjoint_packing(gen_rainbow_complete(6), PackingMode::exact).size(), 2);
    EXPECT_EQ(max_disjoint_packing(gen_rainbow_complete(9), PackingMode::exact).size(), 3);
    const ColoredGraph g = gen_random(9, 5, 7, Completeness::complete());
    EXPECT_EQ(max_disjoint_packing(g, PackingMode::exact).size(), oracle::max_packing(g));
    EXPECT_THROW(max_disjoint_packing(gen_rainbow_complete(31), PackingMode::exact), std::invalid_argument);
    EXPECT_EQ(max_disjoint_packing(gen_rainbow_complete(31), PackingMode::greedy).size(), 10);
}

TEST(Packing, ExactMatchesSubsetOracle) {
    for (const ColoredGraph& g : corpus()) {
        const Packing p = max_disjoint_packing(g, PackingMode::exact);
        EXPECT_EQ(p.size(), oracle::max_packing(g));
        EXPECT_LE(p.size(), g.order() / 3);
        VertexSet used;
        for (const Triangle& t : p.triangles) {
            EXPECT_TRUE(t.rainbow);
            EXPECT_TRUE((used & t.vertex_set()).empty());
            used = used | t.vertex_set();
        }
    }
}

TEST(Packing, GreedyIsMaximalAndNotAboveExact) {
    for (const ColoredGraph& g : corpus()) {
        const Packing gr = max_disjoint_packing(g, PackingMode::greedy);
        EXPECT_LE(gr.size(), max_disjoint_packing(g, PackingMode::exact).size());
        VertexSet used;
        for (const Triangle& t : gr.triangles) used = used | t.vertex_set();
        for (const Triangle& t : enumerate_triangles(g, true))
            EXPECT_FALSE((used & t.vertex_set()).empty()) << "greedy packing is not maximal";
    }
}

TEST(Packing, RainbowCompleteReachesFloor) {
    for (int n = 3; n <= 15; ++n)
        EXPECT_EQ(max_disjoint_packing(gen_rainbow_complete(n), PackingMode::exact).size(), n / 3);
}

TEST(EdgeDisjointAtVertex, Examples) {
    const ColoredGraph rb = gen_rainbow_complete(7);
    for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(edge_disjoint_at_vertex(rb, v).size(), 3);
    EXPECT_EQ(edge_disjoint_at_vertex(gen_construction2(4), 0).size(), 0);
    const ColoredGraph g = gen_random(8, 4, 3, Completeness::complete());
    for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(edge_disjoint_at_vertex(g, v).size(), oracle::max_link_matching(g, v));
}

TEST(EdgeDisjointAtVertex, MatchesMatchingOracleAndIsValid) {
    for (const ColoredGraph& g : corpus()) {
        for (Vertex v = 0; v < g.order(); ++v) {
            const Packing p = edge_disjoint_at_vertex(g, v);
            EXPECT_EQ(p.kind, PackingKind::edge_disjoint_at_vertex);
            EXPECT_EQ(p.at, v);
            EXPECT_EQ(p.size(), oracle::max_link_matching(g, v));
            VertexSet others;
            for (const Triangle& t : p.triangles) {
                EXPECT_TRUE(t.rainbow);
                EXPECT_TRUE(t.vertex_set().contains(v));
                const VertexSet rest = t.vertex_set().without({v});
                EXPECT_TRUE((others & rest).empty());
                others = others | rest;
            }
        }
    }
}

TEST(Properties, RefinementNeverLosesRainbowTriangles) {
    std::mt19937_64 rng(99);
    for (const ColoredGraph& g : corpus()) {
        if (g.edge_count() == 0) continue;
        const Color split = static_cast<Color>(rng() % static_cast<std::uint64_t>(g.color_count()));
        GraphBuilder b(g.order());
        for (const Edge& e : g.edges())
            b.set_edge(e.u, e.v, e.color == split && (rng() & 1) ? 1000 : static_cast<std::uint64_t>(e.color));
        const ColoredGraph h = b.build();
        const auto before = rainbow_counts_per_vertex(g);
        const auto after = rainbow_counts_per_vertex(h);
        for (Vertex v = 0; v < g.order(); ++v) EXPECT_GE(after[v], before[v]);
    }
}

TEST(Properties, ColorRelabelingInvariance) {
    std::mt19937_64 rng(123);
    for (const ColoredGraph& g : corpus()) {
        std::vector<std::uint64_t> perm(static_cast<std::size_t>(g.color_count()));
        std::iota(perm.begin(), perm.end(), 50);
        std::shuffle(perm.begin(), perm.end(), rng);
        const ColoredGraph h = recolor(g, perm);
        EXPECT_EQ(rainbow_counts_per_vertex(h), rainbow_counts_per_vertex(g));
        EXPECT_EQ(enumerate_triangles(h, true).size(), enumerate_triangles(g, true).size());
        EXPECT_EQ(max_disjoint_packing(h, PackingMode::exact).size(), max_disjoint_packing(g, PackingMode::exact).size());
        EXPECT_EQ(exists_rainbow_triangle(h).has_value(), exists_rainbow_triangle(g).has_value());
        for (Vertex v = 0; v < g.order(); ++v)
            EXPECT_EQ(edge_disjoint_at_vertex(h, v).size(), edge_disjoint_at_vertex(g, v).size());
        EXPECT_EQ(find_pc_cycle_le4(h), find_pc_cycle_le4(g));
    }
}

TEST(PcCycles, Examples) {
    const auto c = find_pc_cycle_le4(gen_rainbow_complete(4));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->size(), 3U);
    EXPECT_FALSE(find_pc_cycle_le4(gen_random(5, 1, 0, Completeness::complete())));
    // K_{2,2} properly colored: no triangles, one 4-cycle.
    const auto four = find_pc_cycle_le4(gen_pc_bipartite(4));
    ASSERT_TRUE(four);
    EXPECT_EQ(four->size(), 4U);
}

TEST(PcCycles, AllCyclesMatchBruteForce) {
    for (const ColoredGraph& g : corpus()) {
        if (g.order() > 7) continue;
        const int n = g.order();
        std::size_t expect = 0;
        for (const auto& t : oracle::rainbow_triangles(g)) (void)t, ++expect;
        // 4-cycles a-x-y-z-a with a smallest and x < z, consecutive colors differ.
        for (Vertex a = 0; a < n; ++a)
            for (Vertex x = a + 1; x < n; ++x)
                for (Vertex y = a + 1; y < n; ++y)
                    for (Vertex z = x + 1; z < n; ++z) {
                        if (y == x || y == z) continue;
                        const Cycle cyc{a, x, y, z};
                        bool ok = true;
                        for (int i = 0; i < 4 && ok; ++i)
                            ok = g.has_edge(cyc[i], cyc[(i + 1) % 4]);
                        if (!ok) continue;
                        for (int i = 0; i < 4 && ok; ++i)
                            ok = g.color(cyc[i], cyc[(i + 1) % 4]) != g.color(cyc[(i + 1) % 4], cyc[(i + 2) % 4]);
                        expect += ok;
                    }
        const auto all = all_pc_cycles_le4(g);
        EXPECT_EQ(all.size(), expect);
        for (const Cycle& c : all) EXPECT_TRUE(is_properly_colored_cycle(g, c));
        const auto first = find_pc_cycle_le4(g);
        ASSERT_EQ(first.has_value(), !all.empty());
        if (first) EXPECT_EQ(*first, all.front());
    }
}

TEST(PcCycles, TwoDisjointAreDisjointAndProper) {
    for (const ColoredGraph& g : corpus()) {
        const auto two = find_two_disjoint_pc_cycles(g);
        const auto all = all_pc_cycles_le4(g);
        bool any = false;
        for (std::size_t i = 0; i < all.size() && !any; ++i)
            for (std::size_t j = i + 1; j < all.size() && !any; ++j) {
                VertexSet a, b;
                for (Vertex v : all[i]) a.insert(v);
                for (Vertex v : all[j]) b.insert(v);
                any = (a & b).empty();
            }
        ASSERT_EQ(two.has_value(), any);
        if (two) {
            EXPECT_TRUE(is_properly_colored_cycle(g, two->first));
            EXPECT_TRUE(is_properly_colored_cycle(g, two->second));
        }
    }
}
