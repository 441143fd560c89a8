#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gainswitch;

namespace {

std::string data(const std::string& name) { return std::string(GAINSWITCH_DATA_DIR) + "/" + name; }

GainGraph load(const std::string& name) { return read_gg_file(data(name)).graph; }

void expect_spectrum(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t j = 0; j < got.size(); ++j) EXPECT_NEAR(got[j], want[j], tol) << "index " << j;
}

GainGraph cycle_with_gain(int n, int k, int t) {
    GainGroup grp(k);
    std::vector<DirectedGain> gains;
    for (Vertex v = 1; v <= n; ++v) gains.push_back({v, v % n + 1, Gain(v == 1 ? t : 0, grp)});
    return build_gain_graph(n, grp, gains);
}

}  // namespace

TEST(Spectrum, ArcTriangle) {
    auto g = load("arc_triangle.gg");
    double r3 = std::sqrt(3.0);
    expect_spectrum(spectrum(g).eigenvalues, {-r3, 0.0, r3}, 1e-9);
    auto poly = char_poly_elementary(g);
    EXPECT_EQ(poly.coefficients, (std::vector<double>{1, 0, -3, 0}));
}

TEST(Spectrum, CospectralPairShareTheSpectrum) {
    auto a = load("cospectral_a.gg");
    auto b = load("cospectral_b.gg");
    double r5 = std::sqrt(5.0);
    expect_spectrum(spectrum(a).eigenvalues, {-r5, -1, 0, 1, r5}, 1e-9);
    expect_spectrum(spectrum(b).eigenvalues, {-r5, -1, 0, 1, r5}, 1e-9);
    EXPECT_TRUE(cospectral(a, b));
    EXPECT_EQ(char_poly_elementary(a).coefficients, (std::vector<double>{1, 0, -6, 0, 5, 0}));
    EXPECT_EQ(char_poly_elementary(b).coefficients, char_poly_elementary(a).coefficients);
}

TEST(Spectrum, SingleEdgeAndEmptyGraph) {
    expect_spectrum(spectrum(load("k2.gg")).eigenvalues, {-1, 1}, 1e-12);
    auto empty = GainGraph::trivial(SimpleGraph(0));
    EXPECT_TRUE(spectrum(empty).eigenvalues.empty());
    expect_spectrum(spectrum(GainGraph::trivial(SimpleGraph(3))).eigenvalues, {0, 0, 0}, 1e-15);
}

TEST(Spectrum, GainCyclesMatchAnalyticFormula) {
    for (int k : {1, 2, 3, 4, 5, 6, 8}) {
        for (int n = 3; n <= 9; ++n) {
            for (int t = 0; t < k; ++t) {
                auto g = cycle_with_gain(n, k, t);
                double phi = 2.0 * std::numbers::pi * t / k;
                expect_spectrum(spectrum(g).eigenvalues, oracle::cycle_spectrum(n, phi), 1e-9);
            }
        }
    }
}

TEST(Spectrum, IsInvariantUnderSwitching) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 9, 0.4), 3 + trial % 6);
        auto s = switch_gains(g, oracle::random_theta(rng, 9, g.group()));
        expect_spectrum(spectrum(s).eigenvalues, spectrum(g).eigenvalues, 1e-9);
    }
}

TEST(Spectrum, EigenvaluesAreRootsAndSumToTrace) {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 8, 0.5), 4);
        auto eig = spectrum(g).eigenvalues;
        double sum = 0.0, sq = 0.0;
        for (double x : eig) {
            sum += x;
            sq += x * x;
        }
        EXPECT_NEAR(sum, 0.0, 1e-9);
        EXPECT_NEAR(sq, 2.0 * g.edge_count(), 1e-9);
        auto c = oracle::char_poly_leverrier(g);
        for (double x : eig) EXPECT_NEAR(oracle::poly_eval(c, x), 0.0, 1e-7);
    }
}

TEST(CharPoly, MatchesFaddeevLeVerrier) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        int k = std::vector<int>{2, 3, 4, 6}[static_cast<std::size_t>(trial % 4)];
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 3 + trial % 6, 0.6), k);
        auto poly = char_poly_elementary(g);
        auto ref = oracle::char_poly_leverrier(g);
        ASSERT_EQ(poly.coefficients.size(), ref.size());
        for (std::size_t j = 0; j < ref.size(); ++j) EXPECT_NEAR(poly.coefficients[j], ref[j], 1e-9);
        EXPECT_NEAR(determinant(g), (g.vertex_count() % 2 ? -1 : 1) * ref.back(), 1e-9);
    }
}

TEST(CharPoly, IntegerGroupsGiveIntegerCoefficients) {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_mixed(rng, oracle::random_gnp(rng, 8, 0.5));
        for (double c : char_poly_elementary(g).coefficients) EXPECT_EQ(c, std::round(c));
    }
}

TEST(Elementary, CountsMatchEdgeSubsetEnumeration) {
    std::mt19937 rng(25);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 7, 0.5), 4);
        auto ref = oracle::elementary_by_subsets(g);
        for (int k = 0; k <= g.vertex_count(); ++k) {
            auto list = enumerate_elementary(g.graph(), k);
            EXPECT_EQ(static_cast<long>(list.size()), ref.count[static_cast<std::size_t>(k)]) << "order " << k;
            for (const auto& h : list) EXPECT_EQ(h.order(), k);
        }
        auto poly = char_poly_elementary(g);
        for (int k = 0; k <= g.vertex_count(); ++k) {
            if (k > 0) { EXPECT_NEAR(poly.a(k), ref.coeff[static_cast<std::size_t>(k)], 1e-9); }
        }
    }
}

TEST(Elementary, TriangleWithPendant) {
    SimpleGraph g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    EXPECT_EQ(enumerate_elementary(g, 2).size(), 4u);
    auto three = enumerate_elementary(g, 3);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].cycle_count(), 1);
    EXPECT_EQ(enumerate_elementary(g, 4).size(), 1u);  // {12, 34}
    EXPECT_THROW(enumerate_elementary(g, 5), ValidationError);
}

TEST(Elementary, CapIsEnforced) {
    auto g = GainGraph::trivial(SimpleGraph(15));
    EXPECT_THROW(char_poly_elementary(g), TooLargeError);
    EXPECT_NO_THROW(char_poly_elementary(g, 15));
    try {
        char_poly_elementary(g);
    } catch (const TooLargeError& e) {
        EXPECT_EQ(e.size(), 15);
        EXPECT_EQ(e.cap(), 14);
    }
}

TEST(Balance, SpectralTestAgreesWithCycleTest) {
    std::mt19937 rng(26);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = oracle::random_mixed(rng, oracle::random_gnp(rng, 6, 0.5));
        EXPECT_EQ(is_balanced_spectrally(g, 1e-8), is_balanced(g)) << to_gg_string(g);
    }
    EXPECT_THROW(is_balanced_spectrally(oracle::random_gains(rng, SimpleGraph(3, {{1, 2}}), 4)), ValidationError);
}

TEST(Cospectral, DifferentOrdersAreNot) {
    EXPECT_FALSE(cospectral(load("k2.gg"), load("c3.gg")));
    EXPECT_FALSE(cospectral(load("c3.gg"), load("arc_triangle.gg")));
}

TEST(Bipartite, SpectrumIsSymmetric) {
    std::mt19937 rng(27);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_gains(rng, oracle::random_bipartite(rng, 4, 5, 0.5), 4);
        auto eig = spectrum(g).eigenvalues;
        for (std::size_t j = 0; j < eig.size(); ++j) EXPECT_NEAR(eig[j], -eig[eig.size() - 1 - j], 1e-8);
    }
}

TEST(Bipartite, ArcTriangleIsSymmetricWithoutBeingBipartite) {
    auto g = load("arc_triangle.gg");
    auto eig = spectrum(g).eigenvalues;
    EXPECT_NEAR(eig[0], -eig[2], 1e-12);
    EXPECT_NEAR(eig[1], 0.0, 1e-12);
    EXPECT_FALSE(is_bipartite(g.graph()));
    EXPECT_FALSE(equivalent_to_negation(g).equivalent);
}

TEST(CycleSums, MatchSubsetEnumeration) {
    std::mt19937 rng(28);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_gains(rng, oracle::random_gnp(rng, 7, 0.45), 4);
        std::map<int, double> want;
        for (const auto& c : oracle::cycles_by_subsets(g.graph())) {
            want[static_cast<int>(c.size())] += oracle::root_of_unity(oracle::closed_walk_exponent(g, c), 4).real();
        }
        auto got = cycle_real_gain_sums(g);
        for (auto [len, s] : want) EXPECT_NEAR(got[len], s, 1e-12) << len;
        // sum of cubes of eigenvalues = 6 * sum of Re gains over triangles
        double cubes = 0.0;
        for (double x : spectrum(g).eigenvalues) cubes += x * x * x;
        EXPECT_NEAR(cubes, 6.0 * want[3], 1e-8);
    }
}

TEST(Product, SpectrumIsPairwiseSums) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        auto a = oracle::random_mixed(rng, oracle::random_gnp(rng, 4, 0.6));
        auto b = oracle::random_mixed(rng, oracle::random_gnp(rng, 3, 0.7));
        auto p = cartesian_product(a, b);
        EXPECT_EQ(p.vertex_count(), 12);
        EXPECT_EQ(p.edge_count(), a.edge_count() * 3 + b.edge_count() * 4);
        std::vector<double> sums;
        for (double x : spectrum(a).eigenvalues) {
            for (double y : spectrum(b).eigenvalues) sums.push_back(x + y);
        }
        std::sort(sums.begin(), sums.end());
        expect_spectrum(spectrum(p).eigenvalues, sums, 1e-9);
    }
}

TEST(Product, TwoEdgesMakeASquare) {
    auto p = cartesian_product(load("k2.gg"), load("k2.gg"));
    EXPECT_EQ(p.edge_count(), 4);
    for (Vertex v = 1; v <= 4; ++v) EXPECT_EQ(p.graph().degree(v), 2);
    expect_spectrum(spectrum(p).eigenvalues, {-2, 0, 0, 2}, 1e-12);
}

TEST(Jacobi, ReportsNonConvergence) {
    std::vector<double> m{0, 1, 1, 0};
    EXPECT_THROW(jacobi_eigenvalues(m, 2, 0.0, 0), NumericError);
    auto eig = jacobi_eigenvalues(m, 2, 1e-12);
    EXPECT_NEAR(eig[0], -1, 1e-12);
    EXPECT_NEAR(eig[1], 1, 1e-12);
}
