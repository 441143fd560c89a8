#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace gainswitch;

namespace {

std::string data(const std::string& name) { return std::string(GAINSWITCH_DATA_DIR) + "/" + name; }

GainGraph load(const std::string& name) { return read_gg_file(data(name)).graph; }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Every permutation of 1..n that preserves adjacency, by checking all n! of them.
std::set<std::vector<Vertex>> automorphisms_by_permutations(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::set<std::vector<Vertex>> out;
    do {
        bool ok = true;
        for (const Edge& e : g.edges()) ok = ok && g.adjacent(p[e.u - 1], p[e.v - 1]);
        if (ok) out.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST(Permutation, ComposeAndInvert) {
    VertexPermutation f({2, 3, 1}), g({1, 3, 2});
    EXPECT_EQ((f * g)(2), f(g(2)));
    EXPECT_TRUE((f * f.inverse()).is_identity());
    EXPECT_THROW(VertexPermutation({1, 1, 2}), ValidationError);
}

TEST(Automorphisms, SmallGraphOrders) {
    EXPECT_EQ(automorphisms(load("c3.gg").graph()).order(), 6u);
    SimpleGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_EQ(automorphisms(k4).order(), 24u);
    SimpleGraph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                              {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
    EXPECT_EQ(automorphisms(petersen).order(), 120u);
    EXPECT_EQ(automorphisms(SimpleGraph(4)).order(), 24u);
    EXPECT_THROW(automorphisms(SimpleGraph(11)), TooLargeError);
}

TEST(Automorphisms, MatchPermutationCheck) {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_gnp(rng, 6, 0.4);
        std::set<std::vector<Vertex>> got;
        const auto aut = automorphisms(g);
        for (const auto& f : aut.elements()) got.insert(f.image());
        EXPECT_EQ(got, automorphisms_by_permutations(g));
    }
}

TEST(Automorphisms, GeneratorsGenerate) {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        auto aut = automorphisms(oracle::random_gnp(rng, 6, 0.3));
        auto gens = aut.generators();
        std::set<VertexPermutation> span{VertexPermutation::identity(6)};
        std::vector<VertexPermutation> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<VertexPermutation> next;
            for (const auto& x : frontier) {
                for (const auto& g : gens) {
                    if (span.insert(g * x).second) next.push_back(g * x);
                }
            }
            frontier = next;
        }
        EXPECT_EQ(span.size(), aut.order());
        for (const auto& g : gens) EXPECT_TRUE(aut.contains(g));
    }
}

TEST(GainAutomorphisms, PreserveGains) {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_mixed(rng, oracle::random_gnp(rng, 6, 0.5));
        auto aut = gain_automorphisms(g);
        auto plain = automorphisms(g.graph());
        for (const auto& f : plain.elements()) {
            EXPECT_EQ(aut.contains(f), act(f, g) == g);
        }
        EXPECT_EQ(plain.order() % aut.order(), 0u);
    }
}

TEST(MixedDecomposition, IntersectionIdentities) {
    std::mt19937 rng(54);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_mixed(rng, oracle::random_gnp(rng, 4 + trial % 4, 0.5));
        auto d = mixed_aut_decomposition(g);
        EXPECT_EQ(d.mixed, d.underlying.intersect(d.directed));
        EXPECT_EQ(d.mixed, d.directed.intersect(d.undirected));
        EXPECT_EQ(d.mixed, gain_automorphisms(g));
    }
    EXPECT_THROW(mixed_aut_decomposition(oracle::random_gains(rng, SimpleGraph(3, {{1, 2}}), 6)), ValidationError);
}

TEST(Act, RequiresAnAutomorphism) {
    auto g = load("cospectral_a.gg");
    EXPECT_THROW(act(VertexPermutation({2, 1, 3, 4, 5}), g), ValidationError);
    auto moved = act(VertexPermutation({3, 2, 1, 5, 4}), g);
    EXPECT_EQ(moved.gain(1, 2), g.gain(3, 2));
}

TEST(SwitchingIsomorphism, TriangleWithOppositeArcs) {
    auto a = load("c3_i.gg");
    auto b = load("c3_minus_i.gg");
    EXPECT_FALSE(switching_equivalent(a, b).equivalent());
    auto iso = switching_isomorphic(a, b);
    ASSERT_TRUE(iso.has_value());
    EXPECT_FALSE(iso->permutation.is_identity());
    EXPECT_EQ(switch_gains(act(iso->permutation, a), iso->theta).canonical_gains(), b.canonical_gains());
}

TEST(SwitchingIsomorphism, CospectralPairIsNot) {
    EXPECT_FALSE(switching_isomorphic(load("cospectral_a.gg"), load("cospectral_b.gg")).has_value());
}

TEST(SwitchingIsomorphism, AgreesWithExhaustiveSearchAndOrbits) {
    std::mt19937 rng(55);
    int positive = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto s = oracle::random_connected(rng, 5 + trial % 2, 7);
        auto a = oracle::random_mixed(rng, s);
        GainGraph b = oracle::random_mixed(rng, s);
        if (trial % 2) {
            auto aut = automorphisms(s);
            const auto& f = aut.elements()[static_cast<std::size_t>(trial) % aut.order()];
            b = switch_gains(act(f, a), oracle::random_theta(rng, s.vertex_count(), a.group()));
        }
        auto iso = switching_isomorphic(a, b);
        EXPECT_EQ(iso.has_value(), oracle::exhaustive_switching_isomorphic(a, b));
        bool in_orbit = false;
        for (const auto& rep : orbit_of_class(a)) in_orbit = in_orbit || switching_equivalent(rep, b).equivalent();
        EXPECT_EQ(in_orbit, iso.has_value());
        if (iso) {
            ++positive;
            EXPECT_EQ(switch_gains(act(iso->permutation, a), iso->theta).canonical_gains(), b.canonical_gains());
        }
    }
    EXPECT_GE(positive, 30);
}

TEST(Orbit, RepresentativesAreDistinctClasses) {
    auto a = load("c3_i.gg");
    auto orbit = orbit_of_class(a);
    EXPECT_EQ(orbit.size(), 2u);
    EXPECT_FALSE(switching_equivalent(orbit[0], orbit[1]).equivalent());
    EXPECT_EQ(orbit[0], a);
    EXPECT_EQ(orbit_of_class(load("c3.gg")).size(), 1u);
}

TEST(Relabel, GraphIsomorphismAlignsEdgeSets) {
    std::mt19937 rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = oracle::random_mixed(rng, oracle::random_connected(rng, 6, 8));
        std::vector<Vertex> img(6);
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        VertexPermutation sigma(img);
        auto b = relabel(a, sigma);
        EXPECT_EQ(b.gain(sigma(a.graph().edge(0).u), sigma(a.graph().edge(0).v)), a.canonical_gain(0));
        auto back = graph_isomorphism(b.graph(), a.graph());
        ASSERT_TRUE(back.has_value());
        EXPECT_TRUE(relabel(b, *back).graph().same_edges(a.graph()));
    }
    EXPECT_FALSE(graph_isomorphism(SimpleGraph(3, {{1, 2}, {2, 3}}), SimpleGraph(3, {{1, 2}})).has_value());
    EXPECT_EQ(factorial(4), 24);
}
