#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "plane_graphs.hpp"

using namespace gainswitch;

namespace {

std::string data(const std::string& name) { return std::string(GAINSWITCH_DATA_DIR) + "/" + name; }

/// Number of y with a non-empty Gamma(y), by trying every y.
BigInt class_count_by_gamma(const FaceStructure& fs) {
    const int k = fs.face_count();
    long states = 1L << (2 * k);
    BigInt count = 0;
    for (long s = 0; s < states; ++s) {
        std::vector<Gain> y;
        for (int p = 0; p < k; ++p) y.emplace_back(static_cast<int>((s >> (2 * p)) & 3), mixed::group);
        if (!enumerate_gamma(fs, y).empty()) ++count;
    }
    return count;
}

}  // namespace

TEST(FaceStructure, CellsOfTheSquareWithDiagonal) {
    auto f = read_gg_file(data("plane_square_diag.gg"));
    auto fs = parse_face_structure(f.graph, f.faces);
    EXPECT_EQ(fs.face_count(), 2);
    EXPECT_EQ(fs.cell_size(0, 0), 2);
    EXPECT_EQ(fs.cell_size(1, 1), 2);
    EXPECT_EQ(fs.cell_size(0, 1), 1);
    EXPECT_EQ(fs.cell_size(1, 0), 1);
    EdgeId diag = *f.graph.graph().edge_id(1, 3);
    EXPECT_EQ(fs.direction(0, diag), -1);  // face 0 runs 3 -> 1
    EXPECT_EQ(fs.direction(1, diag), 1);
}

TEST(FaceStructure, ValidationRejectsBadInput) {
    auto f = read_gg_file(data("plane_square_diag.gg"));
    const auto& g = f.graph.graph();
    EXPECT_THROW(parse_face_structure(g, {{1, 2, 3}}), ValidationError);                  // wrong count
    EXPECT_THROW(parse_face_structure(g, {{1, 2, 3}, {1, 2, 3}}), ValidationError);       // repeated face
    EXPECT_THROW(parse_face_structure(g, {{1, 2, 3}, {1, 2, 4}}), ValidationError);       // 2-4 is not an edge
    EXPECT_THROW(parse_face_structure(g, {{1, 2, 3}, {1, 4, 3}}), ValidationError);       // same direction on 1-3
    SimpleGraph path(3, {{1, 2}, {2, 3}});
    EXPECT_THROW(parse_face_structure(path, {}), ValidationError);                         // not 2-connected
    EXPECT_NO_THROW(parse_face_structure(g, {{1, 2, 3}, {1, 3, 4}}));
}

TEST(FaceStructure, EdgeOnThreeFacesIsRejected) {
    // K4 has m - n + 1 = 3, and the three triangles at vertex 4 share nothing illegal,
    // but listing the outer triangle puts edges on three faces.
    SimpleGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_NO_THROW(parse_face_structure(k4, {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}}));
    EXPECT_THROW(parse_face_structure(k4, {{1, 2, 4}, {2, 3, 4}, {1, 2, 3}}), ValidationError);
}

TEST(FaceStructure, SymmetricDifferenceLawOnGains) {
    auto f = read_gg_file(data("wheel4.gg"));
    auto fs = parse_face_structure(f.graph, f.faces);
    for (int p = 0; p < fs.face_count(); ++p) {
        Gain row = Gain::identity(mixed::group);
        for (int q = 0; q < fs.face_count(); ++q) {
            if (fs.cell_size(p, q) > 0) row *= fs.cell_gain(f.graph, p, q);
        }
        EXPECT_EQ(row, fs.face_gain(f.graph, p));
    }
}

TEST(Gamma, EveryMemberRespectsTheRowProducts) {
    auto f = read_gg_file(data("wheel4.gg"));
    auto fs = parse_face_structure(f.graph, f.faces);
    std::vector<Gain> y{mixed::i(), mixed::one(), mixed::minus_one(), mixed::minus_i()};
    auto all = enumerate_gamma(fs, y);
    ASSERT_FALSE(all.empty());
    for (const auto& x : all) {
        for (int p = 0; p < 4; ++p) {
            Gain row = Gain::identity(mixed::group);
            for (int q = 0; q < 4; ++q) {
                auto e = x.entry(p, q);
                EXPECT_EQ(e.has_value(), fs.cell_size(p, q) > 0);
                if (!e) continue;
                row *= *e;
                if (p != q) { EXPECT_EQ(*x.entry(q, p), e->conj()); }
                if (fs.cell_size(p, q) == 1) { EXPECT_NE(*e, mixed::minus_one()); }
            }
            EXPECT_EQ(row, y[static_cast<std::size_t>(p)]);
        }
    }
    EXPECT_THROW(enumerate_gamma(fs, {mixed::one()}), ValidationError);
}

TEST(PlaneFormula, MatchesBruteForceOnHandBuiltGraphs) {
    std::mt19937 rng(41);
    for (const auto& plane : test_planes::all()) {
        auto fs = parse_face_structure(plane.graph, plane.faces);
        auto census = brute_force_census(plane.graph);
        EXPECT_EQ(plane_class_count(fs), BigInt(census.class_count())) << plane.name;
        EXPECT_EQ(plane_class_count(fs), class_count_by_gamma(fs)) << plane.name;
        for (int trial = 0; trial < 6; ++trial) {
            auto g = oracle::random_mixed(rng, plane.graph);
            EXPECT_EQ(plane_class_size(g, fs), brute_force_class_size(g)) << plane.name;
        }
        // Every class once: sizes over representatives add up to 3^m.
        BigInt total = 0;
        for (const auto& c : census.classes) total += plane_class_size(census_member(plane.graph, c.representative), fs);
        EXPECT_EQ(total, census.total) << plane.name;
    }
}

TEST(PlaneFormula, FaceCap) {
    auto plane = test_planes::all().front();
    auto fs = parse_face_structure(plane.graph, plane.faces);
    EXPECT_THROW(plane_class_count(fs, fs.face_count() - 1), TooLargeError);
}
