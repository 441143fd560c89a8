#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"
#include "gainswitch/switching.hpp"

namespace gainswitch {

/// Default vertex cap for explicit automorphism groups.
inline constexpr int kDefaultAutCap = 10;

/// Bijection of 1..n; image(v) is where v goes.
class VertexPermutation {
public:
    VertexPermutation() = default;
    explicit VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
        std::vector<Vertex> sorted = image_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (sorted[j] != static_cast<Vertex>(j + 1)) throw ValidationError("not a permutation of 1..n");
        }
    }

    static VertexPermutation identity(int n) {
        std::vector<Vertex> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 1);
        return VertexPermutation(std::move(image));
    }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_.at(static_cast<std::size_t>(v - 1)); }
    const std::vector<Vertex>& image() const noexcept { return image_; }

    bool is_identity() const {
        for (std::size_t j = 0; j < image_.size(); ++j) {
            if (image_[j] != static_cast<Vertex>(j + 1)) return false;
        }
        return true;
    }

    /// (f * g)(v) = f(g(v)).
    friend VertexPermutation operator*(const VertexPermutation& f, const VertexPermutation& g) {
        std::vector<Vertex> image(g.image_.size());
        for (std::size_t j = 0; j < image.size(); ++j) image[j] = f(g.image_[j]);
        return VertexPermutation(std::move(image));
    }

    VertexPermutation inverse() const {
        std::vector<Vertex> image(image_.size());
        for (std::size_t j = 0; j < image_.size(); ++j) {
            image[static_cast<std::size_t>(image_[j] - 1)] = static_cast<Vertex>(j + 1);
        }
        return VertexPermutation(std::move(image));
    }

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
    friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

private:
    std::vector<Vertex> image_;
};

/// Explicitly listed permutation group, elements sorted (identity first).
class AutGroup {
public:
    AutGroup() = default;
    AutGroup(int degree, std::vector<VertexPermutation> elements)
        : degree_(degree), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    int degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<VertexPermutation>& elements() const noexcept { return elements_; }

    bool contains(const VertexPermutation& f) const {
        return std::binary_search(elements_.begin(), elements_.end(), f);
    }

    AutGroup intersect(const AutGroup& other) const {
        std::vector<VertexPermutation> common;
        std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                              other.elements_.end(), std::back_inserter(common));
        return AutGroup(degree_, std::move(common));
    }

    /// Greedy generating set: an element is kept if the group generated so far misses it.
    std::vector<VertexPermutation> generators() const {
        std::vector<VertexPermutation> gens;
        std::set<VertexPermutation> span{VertexPermutation::identity(degree_)};
        for (const auto& f : elements_) {
            if (span.contains(f)) continue;
            gens.push_back(f);
            std::vector<VertexPermutation> frontier(span.begin(), span.end());
            while (!frontier.empty()) {
                std::vector<VertexPermutation> next;
                for (const auto& x : frontier) {
                    for (const auto& g : gens) {
                        auto y = g * x;
                        if (span.insert(y).second) next.push_back(std::move(y));
                    }
                }
                frontier = std::move(next);
            }
        }
        return gens;
    }

    friend bool operator==(const AutGroup&, const AutGroup&) = default;

private:
    int degree_ = 0;
    std::vector<VertexPermutation> elements_;
};

namespace detail {

/// Backtracking over maps 1..n -> 1..n, assigning vertices in increasing order.
/// `unary(u, x)` filters candidate images, `pair(u, w, x, y)` checks u -> x against
/// an already placed w -> y. visit(image) returns false to stop.
template <typename Unary, typename Pair, typename Visit>
void permutation_search(int n, Unary unary, Pair pair, Visit visit) {
    std::vector<Vertex> image(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    bool stop = false;
    auto recurse = [&](auto&& self, Vertex u) -> void {
        if (u > n) {
            if (!visit(image)) stop = true;
            return;
        }
        for (Vertex x = 1; x <= n && !stop; ++x) {
            if (used[x - 1] || !unary(u, x)) continue;
            bool ok = true;
            for (Vertex w = 1; w < u && ok; ++w) ok = pair(u, w, x, image[w - 1]);
            if (!ok) continue;
            image[u - 1] = x;
            used[x - 1] = 1;
            self(self, u + 1);
            used[x - 1] = 0;
        }
    };
    recurse(recurse, 1);
}

inline void check_aut_cap(int n, int cap) {
    if (n > cap) throw TooLargeError("automorphism search", n, cap);
}

}  // namespace detail

inline AutGroup automorphisms(const SimpleGraph& g, int cap = kDefaultAutCap) {
    detail::check_aut_cap(g.vertex_count(), cap);
    std::vector<VertexPermutation> out;
    detail::permutation_search(
        g.vertex_count(), [&](Vertex u, Vertex x) { return g.degree(u) == g.degree(x); },
        [&](Vertex u, Vertex w, Vertex x, Vertex y) { return g.adjacent(u, w) == g.adjacent(x, y); },
        [&](const std::vector<Vertex>& image) {
            out.emplace_back(image);
            return true;
        });
    return AutGroup(g.vertex_count(), std::move(out));
}

/// Permutations f with gain(f(u), f(v)) == gain(u, v) on every edge and non-edges kept.
inline AutGroup gain_automorphisms(const GainGraph& g, int cap = kDefaultAutCap) {
    const SimpleGraph& s = g.graph();
    detail::check_aut_cap(s.vertex_count(), cap);
    std::vector<VertexPermutation> out;
    detail::permutation_search(
        s.vertex_count(), [&](Vertex u, Vertex x) { return s.degree(u) == s.degree(x); },
        [&](Vertex u, Vertex w, Vertex x, Vertex y) {
            bool adj = s.adjacent(u, w);
            if (adj != s.adjacent(x, y)) return false;
            return !adj || g.gain(u, w) == g.gain(x, y);
        },
        [&](const std::vector<Vertex>& image) {
            out.emplace_back(image);
            return true;
        });
    return AutGroup(s.vertex_count(), std::move(out));
}

/// Aut(G), Aut(G(S)^phi) and Aut(G(E \ S)) for the directed edge set S, plus Aut(G^phi).
struct MixedAutDecomposition {
    AutGroup underlying;   // Aut(G)
    AutGroup directed;     // Aut(G(S)^phi): spanning subgraph of the directed edges
    AutGroup undirected;   // Aut(G(E \ S))
    AutGroup mixed;        // Aut(G^phi)
};

/// Splits g into its directed and undirected spanning subgraphs and checks
/// Aut(G^phi) = Aut(G) n Aut(G(S)^phi) = Aut(G(S)^phi) n Aut(G(E \ S)).
inline MixedAutDecomposition mixed_aut_decomposition(const GainGraph& g, int cap = kDefaultAutCap) {
    if (g.group().order() != 4 || !g.is_mixed_compatible()) {
        throw ValidationError("automorphism decomposition needs a mixed graph");
    }
    const int n = g.vertex_count();
    detail::check_aut_cap(n, cap);
    std::vector<DirectedGain> directed;
    SimpleGraph plain(n);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.graph().edge(id);
        if (g.canonical_gain(id).is_identity()) {
            plain.add_edge(e.u, e.v);
        } else {
            directed.push_back({e.u, e.v, g.canonical_gain(id)});
        }
    }
    MixedAutDecomposition out{automorphisms(g.graph(), cap),
                              gain_automorphisms(build_gain_graph(n, g.group(), directed, true), cap),
                              automorphisms(plain, cap), gain_automorphisms(g, cap)};
    if (!(out.mixed == out.underlying.intersect(out.directed)) ||
        !(out.mixed == out.directed.intersect(out.undirected))) {
        throw Error("automorphism intersection identities failed");
    }
    return out;
}

/// f(g): gain'(u, v) = gain(f(u), f(v)). f must be an automorphism of g's graph.
inline GainGraph act(const VertexPermutation& f, const GainGraph& g) {
    if (f.size() != g.vertex_count()) throw ValidationError("permutation degree mismatch");
    std::vector<Gain> gains;
    gains.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.graph().edges()) {
        if (!g.graph().adjacent(f(e.u), f(e.v))) {
            throw ValidationError("permutation is not an automorphism of the underlying graph");
        }
        gains.push_back(g.gain(f(e.u), f(e.v)));
    }
    if (g.graph().edge_count() != static_cast<int>(gains.size())) {
        throw ValidationError("permutation is not an automorphism of the underlying graph");
    }
    return GainGraph(g.graph(), g.group(), std::move(gains), g.mixed_mode() && g.is_mixed_compatible());
}

/// D(theta)^{-1} f(A) D(theta) == B, i.e. b(u,v) = conj(theta(u)) a(f(u), f(v)) theta(v).
struct SwitchingIsomorphism {
    VertexPermutation permutation;
    SwitchingFunction theta;
};

/// Searches Aut(G) for f with f(a) ~ b. a and b must share the underlying graph.
inline std::optional<SwitchingIsomorphism> switching_isomorphic(const GainGraph& a, const GainGraph& b,
                                                                int cap = kDefaultAutCap) {
    if (!(a.group() == b.group())) throw ValidationError("switching isomorphism needs one gain group");
    if (!a.graph().same_edges(b.graph())) {
        throw ValidationError("switching isomorphism needs the same underlying graph; relabel first");
    }
    auto forest = spanning_forest(a.graph());
    auto basis = fundamental_cycles(a.graph(), forest);
    auto target = cycle_gain_profile(b, basis);
    const AutGroup aut = automorphisms(a.graph(), cap);
    for (const auto& f : aut.elements()) {
        GainGraph moved = act(f, a);
        if (cycle_gain_profile(moved, basis) != target) continue;
        auto eq = switching_equivalent(moved, b, forest);
        if (eq) return SwitchingIsomorphism{f, *eq.witness};
    }
    return std::nullopt;
}

/// One representative per class in the orbit {[f(g)] : f in Aut(G)}, identity class first.
inline std::vector<GainGraph> orbit_of_class(const GainGraph& g, int cap = kDefaultAutCap) {
    auto basis = fundamental_cycles(g.graph(), spanning_forest(g.graph()));
    std::set<CycleGainProfile> seen;
    std::vector<GainGraph> orbit;
    const AutGroup aut = automorphisms(g.graph(), cap);
    for (const auto& f : aut.elements()) {
        GainGraph moved = act(f, g);
        if (seen.insert(cycle_gain_profile(moved, basis)).second) orbit.push_back(std::move(moved));
    }
    return orbit;
}

/// sigma with {sigma(u), sigma(v)} an edge of `to` for every edge {u,v} of `from`.
inline std::optional<VertexPermutation> graph_isomorphism(const SimpleGraph& from, const SimpleGraph& to,
                                                          int cap = kDefaultAutCap) {
    if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count()) return std::nullopt;
    detail::check_aut_cap(from.vertex_count(), cap);
    std::optional<VertexPermutation> found;
    detail::permutation_search(
        from.vertex_count(), [&](Vertex u, Vertex x) { return from.degree(u) == to.degree(x); },
        [&](Vertex u, Vertex w, Vertex x, Vertex y) { return from.adjacent(u, w) == to.adjacent(x, y); },
        [&](const std::vector<Vertex>& image) {
            found = VertexPermutation(image);
            return false;
        });
    return found;
}

/// Renames vertex v to sigma(v); gain(sigma(u), sigma(v)) in the result equals gain(u, v).
inline GainGraph relabel(const GainGraph& g, const VertexPermutation& sigma) {
    std::vector<DirectedGain> gains;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.graph().edge(id);
        gains.push_back({sigma(e.u), sigma(e.v), g.canonical_gain(id)});
    }
    return build_gain_graph(g.vertex_count(), g.group(), gains, g.mixed_mode());
}

}  // namespace gainswitch
