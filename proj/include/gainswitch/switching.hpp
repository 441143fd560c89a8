#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gainswitch/blocks.hpp"
#include "gainswitch/cycles.hpp"
#include "gainswitch/gain_graph.hpp"

namespace gainswitch {

/// Rooted maximal forest. Per-vertex arrays are indexed by v-1.
struct SpanningForest {
    std::vector<Vertex> parent;        // 0 at roots
    std::vector<EdgeId> parent_edge;   // -1 at roots
    std::vector<Vertex> root;
    std::vector<int> depth;
    std::vector<Vertex> order;         // parents precede children
    std::vector<char> in_forest;       // by edge id

    bool is_forest_edge(EdgeId id) const { return in_forest.at(static_cast<std::size_t>(id)) != 0; }
    Vertex parent_of(Vertex v) const { return parent[v - 1]; }
    Vertex root_of(Vertex v) const { return root[v - 1]; }

    std::vector<Vertex> roots() const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < root.size(); ++i) {
            if (root[i] == static_cast<Vertex>(i + 1)) out.push_back(static_cast<Vertex>(i + 1));
        }
        return out;
    }

    int forest_edge_count() const {
        return static_cast<int>(std::count(in_forest.begin(), in_forest.end(), char{1}));
    }

    /// Vertices of the forest path from u to v (inclusive). Both must share a root.
    std::vector<Vertex> path(Vertex u, Vertex v) const {
        std::vector<Vertex> up, down;
        while (depth[u - 1] > depth[v - 1]) {
            up.push_back(u);
            u = parent[u - 1];
        }
        while (depth[v - 1] > depth[u - 1]) {
            down.push_back(v);
            v = parent[v - 1];
        }
        while (u != v) {
            up.push_back(u);
            down.push_back(v);
            u = parent[u - 1];
            v = parent[v - 1];
        }
        up.push_back(u);
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }
};

namespace detail {

/// Roots each component of the chosen edge set at its smallest vertex and walks it breadth first.
inline SpanningForest root_forest(const SimpleGraph& g, std::vector<char> chosen) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    SpanningForest f;
    f.parent.assign(n, 0);
    f.parent_edge.assign(n, -1);
    f.root.assign(n, 0);
    f.depth.assign(n, 0);
    f.in_forest = std::move(chosen);
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        if (f.root[s - 1] != 0) continue;
        f.root[s - 1] = s;
        std::size_t head = f.order.size();
        f.order.push_back(s);
        for (; head < f.order.size(); ++head) {
            Vertex x = f.order[head];
            for (const auto& nb : g.neighbors(x)) {
                if (!f.in_forest[static_cast<std::size_t>(nb.edge)] || f.root[nb.vertex - 1] != 0) {
                    continue;
                }
                f.root[nb.vertex - 1] = s;
                f.parent[nb.vertex - 1] = x;
                f.parent_edge[nb.vertex - 1] = nb.edge;
                f.depth[nb.vertex - 1] = f.depth[x - 1] + 1;
                f.order.push_back(nb.vertex);
            }
        }
    }
    return f;
}

}  // namespace detail

/// Breadth-first maximal forest; each component is rooted at its smallest vertex
/// and neighbors are visited in increasing order.
inline SpanningForest spanning_forest(const SimpleGraph& g) {
    std::vector<char> chosen(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> queue;
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        if (seen[s - 1]) continue;
        seen[s - 1] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& nb : g.neighbors(queue[head])) {
                if (seen[nb.vertex - 1]) continue;
                seen[nb.vertex - 1] = 1;
                chosen[static_cast<std::size_t>(nb.edge)] = 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return detail::root_forest(g, std::move(chosen));
}

/// Kruskal-style maximal forest taking edges in the given priority order.
inline SpanningForest spanning_forest_from_order(const SimpleGraph& g,
                                                 const std::vector<EdgeId>& priority) {
    std::vector<int> uf(static_cast<std::size_t>(g.vertex_count()));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[static_cast<std::size_t>(x)] != x) {
            x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    std::vector<char> chosen(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId id : priority) {
        int a = find(g.edge(id).u - 1);
        int b = find(g.edge(id).v - 1);
        if (a == b) continue;
        uf[static_cast<std::size_t>(a)] = b;
        chosen[static_cast<std::size_t>(id)] = 1;
    }
    return detail::root_forest(g, std::move(chosen));
}

/// An edge of a cycle with its direction of traversal relative to the canonical u < v.
struct CycleEdge {
    EdgeId edge;
    bool forward;
};

struct BasisCycle {
    EdgeId chord;
    std::vector<Vertex> vertices;  // closed implicitly: last -> first is the chord
    std::vector<CycleEdge> edges;
};

/// One cycle per non-forest edge, ordered by chord edge id.
struct FundamentalCycleBasis {
    std::vector<BasisCycle> cycles;

    std::size_t size() const noexcept { return cycles.size(); }
};

inline std::vector<CycleEdge> cycle_edges(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
    std::vector<CycleEdge> out;
    out.reserve(cycle.size());
    for (std::size_t j = 0; j < cycle.size(); ++j) {
        Vertex a = cycle[j];
        Vertex b = cycle[(j + 1) % cycle.size()];
        auto id = g.edge_id(a, b);
        if (!id) throw ValidationError("cycle uses a non-edge");
        out.push_back({*id, a < b});
    }
    return out;
}

/// Chord (u,v), u < v, closes the forest path v..u into the cycle v ... u v, so the
/// chord itself is traversed from u to v.
inline FundamentalCycleBasis fundamental_cycles(const SimpleGraph& g, const SpanningForest& f) {
    FundamentalCycleBasis basis;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (f.is_forest_edge(id)) continue;
        const Edge& e = g.edge(id);
        BasisCycle c{id, f.path(e.v, e.u), {}};
        c.edges = cycle_edges(g, c.vertices);
        basis.cycles.push_back(std::move(c));
    }
    return basis;
}

/// Product of the gains along u1 u2 ... ul.
inline Gain walk_gain(const GainGraph& g, const std::vector<Vertex>& walk) {
    Gain total = Gain::identity(g.group());
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) total *= g.gain(walk[j], walk[j + 1]);
    return total;
}

/// Gain of the closed walk v1 ... vl v1.
inline Gain cycle_gain(const GainGraph& g, const std::vector<Vertex>& cycle) {
    if (cycle.empty()) return Gain::identity(g.group());
    return walk_gain(g, cycle) * g.gain(cycle.back(), cycle.front());
}

using CycleGainProfile = std::vector<Gain>;

inline CycleGainProfile cycle_gain_profile(const GainGraph& g, const FundamentalCycleBasis& basis) {
    CycleGainProfile out;
    out.reserve(basis.size());
    for (const auto& c : basis.cycles) out.push_back(cycle_gain(g, c.vertices));
    return out;
}

inline CycleGainProfile cycle_gain_profile(const GainGraph& g) {
    return cycle_gain_profile(g, fundamental_cycles(g.graph(), spanning_forest(g.graph())));
}

struct NormalizedGainGraph {
    GainGraph graph;          // gain 1 on every forest edge
    SwitchingFunction theta;  // graph == switch_gains(original, theta)
};

/// theta(root) = 1 and theta(w) = gain of the forest path from w to its root.
inline NormalizedGainGraph normalize_to_forest(const GainGraph& g, const SpanningForest& f) {
    SwitchingFunction theta(g.vertex_count(), g.group());
    for (Vertex w : f.order) {
        Vertex p = f.parent_of(w);
        if (p != 0) theta(w) = g.gain(w, p) * theta(p);
    }
    return {switch_gains(g, theta), theta};
}

enum class EquivalenceStatus { equivalent, not_equivalent, different_graph, different_group };

struct CycleMismatch {
    std::size_t basis_index;
    EdgeId chord;
    std::vector<Vertex> cycle;
    Gain gain_a;
    Gain gain_b;
};

struct EquivalenceResult {
    EquivalenceStatus status = EquivalenceStatus::not_equivalent;
    /// D(theta)^{-1} H(a) D(theta) == H(b) when equivalent.
    std::optional<SwitchingFunction> witness;
    /// First basis cycle whose gains differ, when not equivalent.
    std::optional<CycleMismatch> mismatch;

    bool equivalent() const noexcept { return status == EquivalenceStatus::equivalent; }
    explicit operator bool() const noexcept { return equivalent(); }
};

inline EquivalenceResult switching_equivalent(const GainGraph& a, const GainGraph& b,
                                              const SpanningForest& f) {
    EquivalenceResult r;
    if (!(a.group() == b.group())) {
        r.status = EquivalenceStatus::different_group;
        return r;
    }
    if (!a.graph().same_edges(b.graph())) {
        r.status = EquivalenceStatus::different_graph;
        return r;
    }
    auto basis = fundamental_cycles(a.graph(), f);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Gain ga = cycle_gain(a, basis.cycles[j].vertices);
        Gain gb = cycle_gain(b, basis.cycles[j].vertices);
        if (ga != gb) {
            r.status = EquivalenceStatus::not_equivalent;
            r.mismatch = CycleMismatch{j, basis.cycles[j].chord, basis.cycles[j].vertices, ga, gb};
            return r;
        }
    }
    auto na = normalize_to_forest(a, f);
    auto nb = normalize_to_forest(b, f);
    std::vector<Gain> theta;
    theta.reserve(static_cast<std::size_t>(a.vertex_count()));
    for (Vertex v = 1; v <= a.vertex_count(); ++v) theta.push_back(na.theta(v) * nb.theta(v).conj());
    r.status = EquivalenceStatus::equivalent;
    r.witness = SwitchingFunction(std::move(theta), a.group());
    return r;
}

inline EquivalenceResult switching_equivalent(const GainGraph& a, const GainGraph& b) {
    return switching_equivalent(a, b, spanning_forest(a.graph()));
}

/// Oracle route: compares gains on every chordless cycle. Needs a.graph() == b.graph()
/// as edge sets and n <= cap.
inline bool cycle_gains_equal_chordless(const GainGraph& a, const GainGraph& b,
                                        int cap = kDefaultCycleCap) {
    if (!(a.group() == b.group()) || !a.graph().same_edges(b.graph())) {
        throw ValidationError("chordless comparison needs the same underlying graph and group");
    }
    bool equal = true;
    for_each_chordless_cycle(
        a.graph(),
        [&](const std::vector<Vertex>& c) {
            if (equal && cycle_gain(a, c) != cycle_gain(b, c)) equal = false;
        },
        cap);
    return equal;
}

inline bool is_balanced(const GainGraph& g) {
    auto profile = cycle_gain_profile(g);
    return std::all_of(profile.begin(), profile.end(), [](const Gain& x) { return x.is_identity(); });
}

enum class GainCharacter { balanced, negative, imaginary, mixed_profile };

inline const char* to_string(GainCharacter c) {
    switch (c) {
        case GainCharacter::balanced: return "balanced";
        case GainCharacter::negative: return "negative";
        case GainCharacter::imaginary: return "imaginary";
        default: return "mixed-profile";
    }
}

/// Classifies all cycle gains. Non-cactus graphs contain two cycles sharing an edge whose
/// symmetric difference is a cycle with gain zeta(C1) * zeta(C2), which rules out the
/// negative and imaginary cases; in a cactus the basis cycles are all of the cycles.
/// An acyclic graph is reported as balanced.
inline GainCharacter gain_character(const GainGraph& g) {
    auto profile = cycle_gain_profile(g);
    auto all = [&](auto pred) { return std::all_of(profile.begin(), profile.end(), pred); };
    if (all([](const Gain& x) { return x.is_identity(); })) return GainCharacter::balanced;
    if (!is_cactus(g.graph())) return GainCharacter::mixed_profile;
    const GainGroup& grp = g.group();
    if (grp.has_negation() &&
        all([&](const Gain& x) { return x.exponent() == grp.negation_exponent(); })) {
        return GainCharacter::negative;
    }
    if (grp.has_imaginary_unit() && all([&](const Gain& x) {
            return x.exponent() == grp.imaginary_exponent() ||
                   x.exponent() == 3 * grp.imaginary_exponent();
        })) {
        return GainCharacter::imaginary;
    }
    return GainCharacter::mixed_profile;
}

struct NegationResult {
    bool equivalent = false;
    /// Alternates 1 and -1 along a 2-colouring; present when bipartite and k even.
    std::optional<SwitchingFunction> witness;
};

/// g ~ -g exactly when the underlying graph is bipartite.
inline NegationResult equivalent_to_negation(const GainGraph& g) {
    std::vector<int> color;
    NegationResult r;
    r.equivalent = is_bipartite(g.graph(), &color);
    if (r.equivalent && g.group().has_negation()) {
        std::vector<Gain> theta;
        for (int c : color) theta.emplace_back(c == 0 ? 0 : g.group().negation_exponent(), g.group());
        r.witness = SwitchingFunction(std::move(theta), g.group());
    }
    return r;
}

}  // namespace gainswitch
