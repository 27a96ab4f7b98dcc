#include <gtest/gtest.h>

#include "rainbow/constructions.hpp"
#include "rainbow/theorems.hpp"

using namespace rainbow;

namespace {
const TheoremSpec& T(TheoremId id) { return theorem(id); }
}  // namespace

TEST(Registry, NamesRoundTrip) {
    EXPECT_EQ(all_theorems().size(), 12U);
    for (const TheoremSpec& s : all_theorems()) {
        const auto id = parse_theorem_id(s.name);
        ASSERT_TRUE(id);
        EXPECT_EQ(*id, s.id);
        EXPECT_EQ(&theorem(s.id), &s);
    }
    EXPECT_FALSE(parse_theorem_id("T99"));
    EXPECT_FALSE(parse_theorem_id("t8"));
}

TEST(Registry, ThresholdsAreExactIntegers) {
    // 2d >= n+k style comparisons at parity boundaries.
    EXPECT_EQ(color_degree_floor(T(TheoremId::T8), 5, 1), 3);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T8), 6, 1), 3);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T1), 6, 1), 4);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T3), 9, 2), 6);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T3), 10, 3), 7);
    EXPECT_EQ(color_degree_floor(T(TheoremId::F4), 9, 2), 6);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T10), 5, 1), 2);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T11), 8, 1), 5);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T11), 7, 1), 7);
    EXPECT_EQ(color_degree_floor(T(TheoremId::F13), 9, 3), 8);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T14), 7, 1), 5);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T14), 9, 1), 6);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T15), 6, 1), 4);
    EXPECT_EQ(color_degree_floor(T(TheoremId::T16), 6, 1), 3);
}

TEST(Hypothesis, Examples) {
    EXPECT_FALSE(check_hypothesis(gen_pc_bipartite(10), T(TheoremId::T15)));
    EXPECT_TRUE(check_hypothesis(gen_rainbow_complete(8), T(TheoremId::T11)));
    EXPECT_TRUE(check_hypothesis(gen_extremal_thm10(5), T(TheoremId::T10)));
    EXPECT_FALSE(check_hypothesis(gen_rainbow_complete(5), T(TheoremId::T10)));
    EXPECT_TRUE(check_hypothesis(gen_pc_bipartite(6), T(TheoremId::T16)));
}

TEST(Hypothesis, MonoDegreeThresholds) {
    EXPECT_TRUE(check_hypothesis(gen_rainbow_complete(5), T(TheoremId::T5)));
    EXPECT_FALSE(check_hypothesis(gen_random(5, 1, 0, Completeness::complete()), T(TheoremId::T5)));
    EXPECT_TRUE(check_hypothesis(gen_rainbow_complete(6), T(TheoremId::T6)));
    EXPECT_FALSE(check_hypothesis(gen_rainbow_complete(5), T(TheoremId::T6)));
}

TEST(Hypothesis, ScopeAndParameterChecks) {
    const ColoredGraph sparse = gen_pc_bipartite(6);
    EXPECT_THROW(check_hypothesis(sparse, T(TheoremId::T8)), std::invalid_argument);
    EXPECT_THROW(check_conclusion(sparse, T(TheoremId::T11)), std::invalid_argument);
    EXPECT_NO_THROW(check_hypothesis(sparse, T(TheoremId::T15)));
    EXPECT_THROW(check_hypothesis(gen_rainbow_complete(5), T(TheoremId::T3), 0), std::invalid_argument);
}

TEST(Conclusion, Examples) {
    const Conclusion t11 = check_conclusion(gen_rainbow_complete(6), T(TheoremId::T11));
    EXPECT_TRUE(t11.holds);
    EXPECT_EQ(t11.triangles.size(), 2U);

    const Conclusion t1 = check_conclusion(gen_construction2(4), T(TheoremId::T1));
    EXPECT_FALSE(t1.holds);
    ASSERT_FALSE(t1.per_vertex.empty());
    EXPECT_EQ(t1.per_vertex[0], 0);
    EXPECT_NE(t1.witness.find("vertex 0"), std::string::npos);

    const Conclusion t10 = check_conclusion(gen_extremal_thm10(5), T(TheoremId::T10));
    EXPECT_TRUE(t10.holds);
    EXPECT_TRUE(t10.certificate);
}

TEST(Conclusion, GeneralScopeEntries) {
    EXPECT_TRUE(check_conclusion(gen_pc_bipartite(6), T(TheoremId::T16)).holds);
    EXPECT_FALSE(check_conclusion(gen_pc_bipartite(6), T(TheoremId::T15)).holds);
    EXPECT_TRUE(check_conclusion(gen_random(4, 1, 0, Completeness::complete()), T(TheoremId::T16)).holds);
    const ColoredGraph path = GraphBuilder(4).set_edge(0, 1, 0).set_edge(1, 2, 1).set_edge(2, 3, 0).build();
    EXPECT_FALSE(check_conclusion(path, T(TheoremId::T16)).holds);
}

TEST(Conclusion, CyclesAndEdgeDisjoint) {
    const Conclusion t5 = check_conclusion(gen_rainbow_complete(5), T(TheoremId::T5));
    EXPECT_TRUE(t5.holds);
    ASSERT_EQ(t5.cycles.size(), 1U);
    const Conclusion t6 = check_conclusion(gen_rainbow_complete(6), T(TheoremId::T6));
    EXPECT_TRUE(t6.holds);
    EXPECT_EQ(t6.cycles.size(), 2U);
    const Conclusion f4 = check_conclusion(gen_rainbow_complete(7), T(TheoremId::F4), 3);
    EXPECT_TRUE(f4.holds);
    EXPECT_EQ(f4.per_vertex, std::vector<int>(7, 3));
    EXPECT_FALSE(check_conclusion(gen_rainbow_complete(7), T(TheoremId::F4), 4).holds);
}
