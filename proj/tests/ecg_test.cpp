#include <gtest/gtest.h>

#include <filesystem>

#include "rainbow/constructions.hpp"
#include "rainbow/ecg.hpp"

using namespace rainbow;

namespace {

int error_line(std::string_view text) {
    try {
        parse_ecg(text);
    } catch (const EcgError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Ecg, ParseDensifies) {
    const EcgDocument d = parse_ecg("ecg 1\n3 3\n0 1 5\n0 2 5\n1 2 9\n");
    EXPECT_TRUE(d.graph.is_complete());
    EXPECT_EQ(d.graph.color(0, 1), 0);
    EXPECT_EQ(d.graph.color(0, 2), 0);
    EXPECT_EQ(d.graph.color(1, 2), 1);
    EXPECT_EQ(d.color_map, (std::vector<std::pair<std::uint64_t, Color>>{{5, 0}, {9, 1}}));
}

TEST(Ecg, WriteIsExact) {
    EXPECT_EQ(write_ecg(gen_rainbow_complete(3)), "ecg 1\n3 3\n0 1 0\n0 2 1\n1 2 2\n");
    EXPECT_EQ(write_ecg(gen_construction2(6)), write_ecg(gen_construction2(6)));
}

TEST(Ecg, Construction2ParsesBack) {
    EXPECT_EQ(parse_ecg(write_ecg(gen_construction2(3))).graph.min_color_degree(), 3);
}

TEST(Ecg, Errors) {
    EXPECT_EQ(error_line("ecg 1\n2 1\n1 1 0\n"), 3);
    EXPECT_EQ(error_line("ecx 1\n2 1\n0 1 0\n"), 1);
    EXPECT_EQ(error_line("ecg 2\n2 1\n0 1 0\n"), 1);
    EXPECT_EQ(error_line(""), 1);
    EXPECT_EQ(error_line("ecg 1\n"), 2);
    EXPECT_EQ(error_line("ecg 1\n2 x\n"), 2);
    EXPECT_EQ(error_line("ecg 1\n3 2\n0 1 0\n"), 4);
    EXPECT_EQ(error_line("ecg 1\n3 2\n0 1 0\n0 2\n"), 4);
    EXPECT_EQ(error_line("ecg 1\n3 2\n0 1 0\n0 2 -1\n"), 4);
    EXPECT_EQ(error_line("ecg 1\n3 2\n0 1 0\n0 3 1\n"), 4);
    EXPECT_EQ(error_line("ecg 1\n3 2\n0 1 0\n2 1 1\n"), 4);
    EXPECT_EQ(error_line("ecg 1\n3 3\n0 1 0\n0 2 1\n0 1 2\n"), 5);
    EXPECT_EQ(error_line("ecg 1\n2 2\n0 1 0\n0 1 0\n"), 2);  // more edges than pairs
    EXPECT_EQ(error_line("ecg 1\n2 1\n0 1 0\n\n\n"), -1);
}

TEST(Ecg, RoundTripCorpus) {
    std::vector<ColoredGraph> corpus;
    for (int p = 2; p <= 10; ++p) corpus.push_back(gen_construction2(p));
    for (int n = 5; n <= 15; n += 2) corpus.push_back(gen_extremal_thm10(n));
    for (int n = 4; n <= 16; n += 2) corpus.push_back(gen_pc_bipartite(n));
    for (int n = 1; n <= 12; ++n) corpus.push_back(gen_rainbow_complete(n));
    for (std::uint64_t s = 0; s < 40; ++s) {
        corpus.push_back(gen_random(2 + static_cast<int>(s % 20), 1 + static_cast<int>(s % 9), s,
                                    s % 2 ? Completeness::complete() : Completeness::probability(0.5)));
        if (auto g = gen_biased_high_color_degree(9, 4, s, Completeness::probability(0.95))) corpus.push_back(*g);
    }
    for (const ColoredGraph& g : corpus) {
        const std::string text = write_ecg(g);
        const EcgDocument d = parse_ecg(text);
        EXPECT_EQ(d.graph, g);
        EXPECT_EQ(write_ecg(d.graph), text);
    }
}

TEST(Ecg, CanonicalFormOfArbitraryInput) {
    const std::string messy = "ecg 1\n4 3\n2 3 40\n0 1 7\n1 2 7\n";
    const std::string canon = write_ecg(parse_ecg(messy).graph);
    EXPECT_EQ(canon, "ecg 1\n4 3\n0 1 0\n1 2 0\n2 3 1\n");
    EXPECT_EQ(write_ecg(parse_ecg(canon).graph), canon);
}

TEST(Ecg, Files) {
    const auto dir = std::filesystem::temp_directory_path() / "ecg_file_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "g.ecg";
    write_ecg_file(path, gen_construction2(4));
    EXPECT_EQ(read_ecg_file(path), gen_construction2(4));
    EXPECT_THROW(read_ecg_file(dir / "missing.ecg"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
