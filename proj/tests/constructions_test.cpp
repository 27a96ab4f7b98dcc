#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/ecg.hpp"
#include "rainbow/triangles.hpp"

using namespace rainbow;

TEST(Construction2, PropertiesForAllSmallP) {
    for (int p = 2; p <= 10; ++p) {
        const ColoredGraph g = gen_construction2(p);
        EXPECT_EQ(g.order(), 2 * p);
        EXPECT_TRUE(g.is_complete());
        EXPECT_EQ(g.min_color_degree(), p);
        EXPECT_EQ(oracle::min_color_degree(g), p);
        EXPECT_LE(g.mono_degree(0), 2);
        EXPECT_EQ(oracle::per_vertex_counts(g)[0], 0);
        EXPECT_EQ(g.color_count(), 2 * p - 1);
    }
}

TEST(Construction2, Examples) {
    const ColoredGraph g2 = gen_construction2(2);
    EXPECT_EQ(g2.order(), 4);
    EXPECT_EQ(g2.min_color_degree(), 2);
    EXPECT_EQ(gen_construction2(4).color_count(), 7);
    EXPECT_THROW(gen_construction2(1), GraphError);
}

TEST(Extremal10, Examples) {
    const ColoredGraph g5 = gen_extremal_thm10(5);
    EXPECT_EQ(g5.min_color_degree(), 2);
    EXPECT_TRUE(oracle::rainbow_triangles(g5).empty());
    const auto c7 = recognize_thm10(gen_extremal_thm10(7));
    ASSERT_TRUE(c7);
    EXPECT_EQ(c7->pairs.size(), 3U);
    EXPECT_EQ(c7->hub, 0);
    const ColoredGraph g9 = gen_extremal_thm10(9);
    for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g9.color_degree(v), 4);
    EXPECT_THROW(gen_extremal_thm10(6), GraphError);
    EXPECT_THROW(gen_extremal_thm10(3), GraphError);
}

TEST(Extremal10, CrossBlocksUseTwoColors) {
    const ColoredGraph g = gen_extremal_thm10(7);
    const auto c = recognize_thm10(g);
    ASSERT_TRUE(c);
    const VertexSet a1{c->pairs[0].first, c->pairs[0].second};
    const VertexSet a2{c->pairs[1].first, c->pairs[1].second};
    const auto seen = g.colors_between(a1, a2);
    EXPECT_EQ(seen.size(), 2U);
    for (Color x : seen) EXPECT_TRUE(x == c->part_colors[0] || x == c->part_colors[1]);
}

TEST(Extremal10, RoundTripAndExactDelta) {
    for (int n = 5; n <= 15; n += 2) {
        const ColoredGraph g = gen_extremal_thm10(n);
        EXPECT_EQ(g.min_color_degree(), (n - 1) / 2);
        const auto c = recognize_thm10(g);
        ASSERT_TRUE(c) << n;
        EXPECT_TRUE(certificate_holds(g, *c)) << n;
    }
}

TEST(Recognize, RejectsRainbowAndMutations) {
    EXPECT_FALSE(recognize_thm10(gen_rainbow_complete(5)));
    const ColoredGraph g = gen_extremal_thm10(9);
    const auto c = recognize_thm10(g);
    ASSERT_TRUE(c);
    const Vertex u = c->pairs[0].first, w = c->pairs[1].first;
    const ColoredGraph mutated = GraphBuilder(g).set_edge(u, w, 1000).build();
    EXPECT_FALSE(recognize_thm10(mutated));
    EXPECT_THROW(recognize_thm10(GraphBuilder(g).remove_edge(0, 1).build()), std::invalid_argument);
}

TEST(Recognize, SoundOnRandomMutations) {
    // Any certificate the recognizer returns must pass the direct re-check.
    std::mt19937_64 rng(8);
    int accepted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 5 + 2 * static_cast<int>(rng() % 3);
        GraphBuilder b(gen_extremal_thm10(n));
        const int edits = static_cast<int>(rng() % 3);
        for (int i = 0; i < edits; ++i) {
            const Vertex x = static_cast<Vertex>(rng() % n);
            Vertex y = static_cast<Vertex>(rng() % n);
            if (x == y) y = (y + 1) % n;
            b.set_edge(x, y, rng() % static_cast<std::uint64_t>(n));
        }
        const ColoredGraph g = b.build();
        if (const auto c = recognize_thm10(g)) {
            ++accepted;
            EXPECT_TRUE(certificate_holds(g, *c));
        }
    }
    EXPECT_GT(accepted, 0);
}

TEST(Recognize, CertificateCheckerRejectsTampering) {
    const ColoredGraph g = gen_extremal_thm10(7);
    auto c = *recognize_thm10(g);
    auto bad = c;
    std::swap(bad.pairs[0].second, bad.pairs[1].second);
    EXPECT_FALSE(certificate_holds(g, bad));
    bad = c;
    bad.hub = c.pairs[0].first;
    EXPECT_FALSE(certificate_holds(g, bad));
}

TEST(Bipartite, Examples) {
    const ColoredGraph g6 = gen_pc_bipartite(6);
    EXPECT_EQ(g6.min_color_degree(), 3);
    EXPECT_TRUE(enumerate_triangles(g6, false).empty());
    const ColoredGraph g4 = gen_pc_bipartite(4);
    EXPECT_EQ(g4.color_count(), 2);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g4.mono_degree(v), 1);
    const ColoredGraph g10 = gen_pc_bipartite(10);
    for (Vertex v = 0; v < 10; ++v) {
        EXPECT_EQ(g10.mono_degree(v), 1);
        EXPECT_EQ(g10.color_degree(v), 5);
    }
    EXPECT_THROW(gen_pc_bipartite(5), GraphError);
}

TEST(RainbowComplete, Examples) {
    EXPECT_EQ(enumerate_triangles(gen_rainbow_complete(3), true).size(), 1U);
    EXPECT_EQ(gen_rainbow_complete(5).min_color_degree(), 4);
    EXPECT_EQ(max_disjoint_packing(gen_rainbow_complete(6), PackingMode::exact).size(), 2);
    EXPECT_EQ(gen_rainbow_complete(1).edge_count(), 0);
}

TEST(Random, Examples) {
    const ColoredGraph mono = gen_random(5, 1, 77, Completeness::complete());
    EXPECT_EQ(mono.color_count(), 1);
    EXPECT_TRUE(mono.is_complete());
    const ColoredGraph a = gen_random(8, 6, 42, Completeness::complete());
    EXPECT_EQ(write_ecg(a), write_ecg(gen_random(8, 6, 42, Completeness::complete())));
    EXPECT_EQ(a.min_color_degree(), oracle::min_color_degree(a));
    EXPECT_NE(write_ecg(a), write_ecg(gen_random(8, 6, 43, Completeness::complete())));
    EXPECT_THROW(gen_random(5, 0, 1, Completeness::complete()), std::invalid_argument);
}

TEST(Biased, Examples) {
    const auto g = gen_biased_high_color_degree(9, 5, 1, Completeness::complete());
    ASSERT_TRUE(g);
    EXPECT_GE(oracle::min_color_degree(*g), 5);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_TRUE(gen_biased_high_color_degree(8, 1, seed, Completeness::complete()));
    EXPECT_THROW(gen_biased_high_color_degree(8, 8, 1, Completeness::complete()), std::invalid_argument);
    EXPECT_THROW(gen_biased_high_color_degree(8, 0, 1, Completeness::complete()), std::invalid_argument);
}

TEST(Biased, PostconditionAndDeterminism) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 6 + static_cast<int>(seed % 6);
        const int target = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1));
        const auto c = seed % 2 ? Completeness::complete() : Completeness::probability(0.9);
        const auto g = gen_biased_high_color_degree(n, target, seed, c);
        const auto h = gen_biased_high_color_degree(n, target, seed, c);
        ASSERT_EQ(g.has_value(), h.has_value());
        if (!g) continue;
        EXPECT_EQ(write_ecg(*g), write_ecg(*h));
        EXPECT_GE(oracle::min_color_degree(*g), target);
        if (c.is_complete()) EXPECT_TRUE(g->is_complete());
    }
}

TEST(Generators, Deterministic) {
    EXPECT_EQ(write_ecg(gen_construction2(5)), write_ecg(gen_construction2(5)));
    EXPECT_EQ(write_ecg(gen_extremal_thm10(11)), write_ecg(gen_extremal_thm10(11)));
    EXPECT_EQ(write_ecg(gen_pc_bipartite(12)), write_ecg(gen_pc_bipartite(12)));
}
