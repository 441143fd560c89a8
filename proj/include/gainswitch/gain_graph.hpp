#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <tuple>
#include <vector>

#include "gainswitch/errors.hpp"
#include "gainswitch/gain.hpp"
#include "gainswitch/simple_graph.hpp"

namespace gainswitch {

/// Gain on one oriented edge, as given on input: gain(from, to) = gain.
struct DirectedGain {
    Vertex from;
    Vertex to;
    Gain gain;
};

/// Simple graph with a gain on every edge. The gain is stored for the canonical
/// orientation u < v; the reverse orientation always reads the conjugate, so
/// gain(v,u) == conj(gain(u,v)) holds by construction.
class GainGraph {
public:
    GainGraph() = default;

    /// Takes canonical-orientation gains indexed by edge id.
    GainGraph(SimpleGraph graph, GainGroup group, std::vector<Gain> canonical_gains,
              bool mixed_mode = false)
        : graph_(std::move(graph)),
          group_(group),
          gains_(std::move(canonical_gains)),
          mixed_(mixed_mode) {
        if (static_cast<int>(gains_.size()) != graph_.edge_count()) {
            throw ValidationError("gain count does not match edge count");
        }
        for (const auto& g : gains_) {
            if (g.order() != group_.order()) throw ValidationError("gain from a different group");
        }
        if (mixed_) check_mixed();
    }

    /// Every edge carries gain 1.
    static GainGraph trivial(SimpleGraph graph, GainGroup group = GainGroup(4),
                             bool mixed_mode = false) {
        std::vector<Gain> gains(static_cast<std::size_t>(graph.edge_count()),
                                Gain::identity(group));
        return GainGraph(std::move(graph), group, std::move(gains), mixed_mode);
    }

    const SimpleGraph& graph() const noexcept { return graph_; }
    const GainGroup& group() const noexcept { return group_; }
    bool mixed_mode() const noexcept { return mixed_; }
    int vertex_count() const noexcept { return graph_.vertex_count(); }
    int edge_count() const noexcept { return graph_.edge_count(); }

    /// Gain of edge `id` read from its smaller end to its larger end.
    const Gain& canonical_gain(EdgeId id) const { return gains_.at(static_cast<std::size_t>(id)); }
    const std::vector<Gain>& canonical_gains() const noexcept { return gains_; }

    /// Gain of edge `id` traversed starting at `from`.
    Gain gain_from(EdgeId id, Vertex from) const {
        const Gain& g = canonical_gain(id);
        return graph_.edge(id).u == from ? g : g.conj();
    }

    /// Gain of the oriented edge (u,v). Throws if u and v are not adjacent.
    Gain gain(Vertex u, Vertex v) const {
        auto id = graph_.edge_id(u, v);
        if (!id) {
            throw ValidationError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                  " are not adjacent");
        }
        return gain_from(*id, u);
    }

    /// Copy with edge `id` given canonical gain `g`; clears mixed mode when g leaves {1,i,-i}.
    GainGraph with_gain(EdgeId id, Gain g) const {
        GainGraph out = *this;
        out.gains_.at(static_cast<std::size_t>(id)) = g;
        if (out.mixed_ && !mixed::is_edge_gain(g)) out.mixed_ = false;
        return out;
    }

    /// True when every gain lies in {1, i, -i} of the order-4 group.
    bool is_mixed_compatible() const {
        if (group_.order() != 4) return false;
        for (const auto& g : gains_) {
            if (!mixed::is_edge_gain(g)) return false;
        }
        return true;
    }

    friend bool operator==(const GainGraph& a, const GainGraph& b) {
        return a.group_ == b.group_ && a.mixed_ == b.mixed_ && a.graph_ == b.graph_ &&
               a.gains_ == b.gains_;
    }

private:
    void check_mixed() const {
        if (group_.order() != 4) throw ValidationError("mixed mode requires gain group order 4");
        for (EdgeId id = 0; id < graph_.edge_count(); ++id) {
            if (!mixed::is_edge_gain(gains_[static_cast<std::size_t>(id)])) {
                const Edge& e = graph_.edge(id);
                throw ValidationError("mixed graph edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "} has gain -1");
            }
        }
    }

    SimpleGraph graph_;
    GainGroup group_{4};
    std::vector<Gain> gains_;
    bool mixed_ = false;
};

/// Builds a gain graph from oriented gains; at most one orientation per pair.
inline GainGraph build_gain_graph(int n, GainGroup group, const std::vector<DirectedGain>& gains,
                                  bool mixed_mode = false) {
    SimpleGraph graph(n);
    std::vector<Gain> canonical;
    canonical.reserve(gains.size());
    for (const auto& dg : gains) {
        if (dg.gain.order() != group.order()) {
            throw ValidationError("gain exponent out of range for group order " +
                                  std::to_string(group.order()));
        }
        graph.add_edge(dg.from, dg.to);
        canonical.push_back(dg.from < dg.to ? dg.gain : dg.gain.conj());
    }
    return GainGraph(std::move(graph), group, std::move(canonical), mixed_mode);
}

/// Exponent-level overload: (u, v, t) means gain(u,v) = exp(2*pi*i*t/k), 0 <= t < k.
inline GainGraph build_gain_graph(int n, GainGroup group,
                                  const std::vector<std::tuple<Vertex, Vertex, int>>& gains,
                                  bool mixed_mode = false) {
    std::vector<DirectedGain> list;
    list.reserve(gains.size());
    for (auto [u, v, t] : gains) {
        if (t < 0 || t >= group.order()) {
            throw ValidationError("gain exponent " + std::to_string(t) + " out of range [0," +
                                  std::to_string(group.order()) + ")");
        }
        list.push_back({u, v, Gain(t, group)});
    }
    return build_gain_graph(n, group, list, mixed_mode);
}

/// Dense n x n Hermitian matrix, row-major, 0-based storage.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n = 0)
        : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int dimension() const noexcept { return n_; }

    /// 1-based access, matching vertex labels.
    const std::complex<double>& operator()(Vertex u, Vertex v) const { return entries_[index(u, v)]; }
    std::complex<double>& operator()(Vertex u, Vertex v) { return entries_[index(u, v)]; }

    bool is_hermitian() const {
        for (int u = 1; u <= n_; ++u) {
            if ((*this)(u, u) != std::complex<double>{}) return false;
            for (int v = u + 1; v <= n_; ++v) {
                if ((*this)(u, v) != std::conj((*this)(v, u))) return false;
            }
        }
        return true;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : entries_) s += std::norm(z);
        return std::sqrt(s);
    }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v - 1);
    }

    int n_;
    std::vector<std::complex<double>> entries_;
};

inline HermitianMatrix hermitian_matrix(const GainGraph& g) {
    HermitianMatrix h(g.vertex_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.graph().edge(id);
        std::complex<double> z = g.canonical_gain(id).value();
        h(e.u, e.v) = z;
        h(e.v, e.u) = std::conj(z);
    }
    return h;
}

/// Switching function theta: V -> group, the diagonal of D(theta).
class SwitchingFunction {
public:
    SwitchingFunction() = default;
    SwitchingFunction(int n, GainGroup group)
        : values_(static_cast<std::size_t>(n), Gain::identity(group)), group_(group) {}
    SwitchingFunction(std::vector<Gain> values, GainGroup group)
        : values_(std::move(values)), group_(group) {}

    int size() const noexcept { return static_cast<int>(values_.size()); }
    const GainGroup& group() const noexcept { return group_; }

    const Gain& operator()(Vertex v) const { return values_.at(static_cast<std::size_t>(v - 1)); }
    Gain& operator()(Vertex v) { return values_.at(static_cast<std::size_t>(v - 1)); }

    const std::vector<Gain>& values() const noexcept { return values_; }

    friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

private:
    std::vector<Gain> values_;
    GainGroup group_{4};
};

/// D(theta)^{-1} H D(theta): edge (u,v) gets conj(theta(u)) * gain(u,v) * theta(v).
/// Mixed mode survives only if every switched gain stays in {1, i, -i}.
inline GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& theta) {
    if (theta.size() != g.vertex_count()) {
        throw ValidationError("switching function size does not match vertex count");
    }
    if (!(theta.group() == g.group())) throw ValidationError("switching function group mismatch");
    std::vector<Gain> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    bool mixed = g.mixed_mode();
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.graph().edge(id);
        Gain x = theta(e.u).conj() * g.canonical_gain(id) * theta(e.v);
        mixed = mixed && mixed::is_edge_gain(x);
        out.push_back(x);
    }
    return GainGraph(g.graph(), g.group(), std::move(out), mixed);
}

/// Every gain multiplied by -1. Requires an even group order.
inline GainGraph negate(const GainGraph& g) {
    if (!g.group().has_negation()) {
        throw ValidationError("negation needs -1 in the gain group; order " +
                              std::to_string(g.group().order()) + " is odd");
    }
    Gain minus = Gain(g.group().negation_exponent(), g.group());
    std::vector<Gain> out;
    for (const auto& x : g.canonical_gains()) out.push_back(x * minus);
    return GainGraph(g.graph(), g.group(), std::move(out), false);
}

/// The underlying graph with all gains 1, in the same group and mode.
inline GainGraph underlying(const GainGraph& g) {
    return GainGraph::trivial(g.graph(), g.group(), g.mixed_mode());
}

}  // namespace gainswitch
