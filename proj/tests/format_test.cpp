#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gainswitch;

namespace {

std::string data(const std::string& name) { return std::string(GAINSWITCH_DATA_DIR) + "/" + name; }

void expect_error_at(const std::string& text, int line) {
    try {
        parse_gg_string(text, "t.gg");
        FAIL() << "expected a validation error";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("t.gg:" + std::to_string(line) + ":"), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(GgFormat, ParsesAliasesAndComments) {
    auto f = parse_gg_string("# header comment\ngg 4 mixed\nn 3\ne 1 2 i  # arc\ne 2 3 1\ne 3 1 -i\n");
    EXPECT_TRUE(f.graph.mixed_mode());
    EXPECT_EQ(f.graph.vertex_count(), 3);
    EXPECT_EQ(f.graph.gain(1, 2), mixed::i());
    EXPECT_EQ(f.graph.gain(2, 3), mixed::one());
    EXPECT_EQ(f.graph.gain(1, 3), mixed::i());
    EXPECT_TRUE(f.faces.empty());
}

TEST(GgFormat, NumericExponentsForOtherOrders) {
    auto f = parse_gg_string("gg 6\nn 2\ne 2 1 5\n");
    EXPECT_EQ(f.graph.group().order(), 6);
    EXPECT_EQ(f.graph.gain(2, 1).exponent(), 5);
    EXPECT_EQ(f.graph.gain(1, 2).exponent(), 1);
}

TEST(GgFormat, ReadsFaces) {
    auto f = read_gg_file(data("wheel4.gg"));
    ASSERT_EQ(f.faces.size(), 4u);
    EXPECT_EQ(f.faces[0], (std::vector<Vertex>{1, 2, 5}));
}

TEST(GgFormat, ErrorsCarryLineNumbers) {
    expect_error_at("n 3\n", 1);
    expect_error_at("gg 4\nn 3\ne 1 4 1\n", 3);
    expect_error_at("gg 4\nn 3\ne 1 2 1\ne 2 1 i\n", 4);
    expect_error_at("gg 4 mixed\nn 3\ne 1 2 -1\n", 3);
    expect_error_at("gg 3\nn 3\ne 1 2 i\n", 3);
    expect_error_at("gg 4\nn 3\nx 1 2\n", 3);
    expect_error_at("gg 4\nn 3\ne 1 1 1\n", 3);
    expect_error_at("gg 5 mixed\n", 1);
    expect_error_at("gg 4\n# nothing else\n", 2);
    EXPECT_THROW(read_gg_file(data("missing.gg")), ValidationError);
}

TEST(GgFormat, RoundTripKeepsGraph) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + trial % 8;
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 7, 0.4), k);
        auto back = parse_gg_string(to_gg_string(g)).graph;
        EXPECT_EQ(back.group(), g.group());
        EXPECT_EQ(hermitian_matrix(back), hermitian_matrix(g));
    }
    auto m = oracle::random_mixed(rng, oracle::random_connected(rng, 6, 9));
    auto back = parse_gg_string(to_gg_string(m, {{1, 2, 3}})).graph;
    EXPECT_EQ(back, m);
}
