#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "gainswitch/cycles.hpp"
#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"
#include "gainswitch/hermitian_eigen.hpp"
#include "gainswitch/switching.hpp"

namespace gainswitch {

/// Default vertex cap for elementary-subgraph enumeration.
inline constexpr int kDefaultElementaryCap = 14;
inline constexpr double kDefaultTolerance = 1e-9;

/// Vertex-disjoint union of edges (2 vertices) and cycles (3 or more vertices).
struct ElementarySubgraph {
    std::vector<std::vector<Vertex>> components;

    int order() const {
        int k = 0;
        for (const auto& c : components) k += static_cast<int>(c.size());
        return k;
    }
    int component_count() const { return static_cast<int>(components.size()); }
    int cycle_count() const {
        int c = 0;
        for (const auto& comp : components) c += comp.size() >= 3 ? 1 : 0;
        return c;
    }
};

namespace detail {

/// Depth-first enumeration anchored at the smallest undecided vertex: it is left out,
/// matched to a larger neighbour, or made the smallest vertex of a cycle.
/// visit(components, covered) fires once per elementary subgraph, including the empty one.
template <typename Visit>
class ElementaryEnumerator {
public:
    ElementaryEnumerator(const SimpleGraph& g, int target, Visit& visit)
        : g_(g), target_(target), visit_(visit), decided_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    void run() { recurse(1, 0, g_.vertex_count()); }

private:
    // `next` is a lower bound for the smallest undecided vertex; `free` counts undecided ones.
    void recurse(Vertex next, int covered, int free) {
        if (target_ >= 0 && (covered > target_ || covered + free < target_)) return;
        while (next <= g_.vertex_count() && decided_[next - 1]) ++next;
        if (next > g_.vertex_count() || (target_ >= 0 && covered == target_)) {
            if (target_ < 0 || covered == target_) visit_(components_, covered);
            return;
        }
        Vertex v = next;
        decided_[v - 1] = 1;
        recurse(v + 1, covered, free - 1);

        for (const auto& nb : g_.neighbors(v)) {
            Vertex w = nb.vertex;
            if (decided_[w - 1]) continue;
            decided_[w - 1] = 1;
            components_.push_back({v, w});
            recurse(v + 1, covered + 2, free - 2);
            components_.pop_back();
            decided_[w - 1] = 0;
        }

        std::vector<Vertex> path{v};
        grow_cycle(path, covered, free);
        decided_[v - 1] = 0;
    }

    void grow_cycle(std::vector<Vertex>& path, int covered, int free) {
        Vertex start = path.front();
        Vertex last = path.back();
        for (const auto& nb : g_.neighbors(last)) {
            Vertex w = nb.vertex;
            if (w == start && path.size() >= 3 && path[1] < last) {
                components_.push_back(path);
                int len = static_cast<int>(path.size());
                recurse(start + 1, covered + len, free - len);
                components_.pop_back();
                continue;
            }
            if (decided_[w - 1]) continue;
            decided_[w - 1] = 1;
            path.push_back(w);
            grow_cycle(path, covered, free);
            path.pop_back();
            decided_[w - 1] = 0;
        }
    }

    const SimpleGraph& g_;
    int target_;
    Visit& visit_;
    std::vector<char> decided_;
    std::vector<std::vector<Vertex>> components_;
};

template <typename Visit>
void for_each_elementary(const SimpleGraph& g, int target, Visit&& visit) {
    ElementaryEnumerator<std::remove_reference_t<Visit>> e(g, target, visit);
    e.run();
}

}  // namespace detail

/// All elementary subgraphs on exactly k vertices.
inline std::vector<ElementarySubgraph> enumerate_elementary(const SimpleGraph& g, int k,
                                                            int cap = kDefaultElementaryCap) {
    if (g.vertex_count() > cap) {
        throw TooLargeError("elementary subgraph enumeration", g.vertex_count(), cap);
    }
    if (k < 0 || k > g.vertex_count()) {
        throw ValidationError("elementary subgraph order must lie in [0, n]");
    }
    std::vector<ElementarySubgraph> out;
    detail::for_each_elementary(g, k, [&](const std::vector<std::vector<Vertex>>& comps, int) {
        out.push_back({comps});
    });
    return out;
}

/// Re of the gain of the closed walk along `cycle`.
inline double real_cycle_gain(const GainGraph& g, const std::vector<Vertex>& cycle) {
    return cycle_gain(g, cycle).real();
}

/// Monic characteristic polynomial x^n + a_1 x^{n-1} + ... + a_n.
struct CharPoly {
    std::vector<double> coefficients;  // [1, a_1, ..., a_n]

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    double a(int k) const { return coefficients.at(static_cast<std::size_t>(k)); }

    double evaluate(double x) const {
        double acc = 0.0;
        for (double c : coefficients) acc = acc * x + c;
        return acc;
    }

    /// Sum of |a_k| over k >= 1.
    double coefficient_mass() const {
        double s = 0.0;
        for (std::size_t k = 1; k < coefficients.size(); ++k) s += std::abs(coefficients[k]);
        return s;
    }
};

/// a_k = sum over elementary H of order k of (-1)^{k(H)} 2^{c(H)} prod Re(zeta(C)).
inline CharPoly char_poly_elementary(const GainGraph& g, int cap = kDefaultElementaryCap) {
    const int n = g.vertex_count();
    if (n > cap) throw TooLargeError("elementary subgraph enumeration", n, cap);
    CharPoly poly{std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
    detail::for_each_elementary(g.graph(), -1, [&](const std::vector<std::vector<Vertex>>& comps,
                                                   int covered) {
        double term = (comps.size() % 2 == 0) ? 1.0 : -1.0;
        for (const auto& c : comps) {
            if (c.size() >= 3) term *= 2.0 * real_cycle_gain(g, c);
        }
        poly.coefficients[static_cast<std::size_t>(covered)] += term;
    });
    poly.coefficients[0] = 1.0;

    int k = g.group().order();
    if (k == 1 || k == 2 || k == 4) {
        for (double& c : poly.coefficients) {
            double r = std::round(c);
            if (std::abs(c - r) >= 1e-6) {
                throw NumericError("characteristic polynomial coefficient drifted from an integer");
            }
            c = r;
        }
    }
    return poly;
}

/// det(H) = (-1)^n a_n.
inline double determinant(const GainGraph& g, int cap = kDefaultElementaryCap) {
    auto poly = char_poly_elementary(g, cap);
    int n = g.vertex_count();
    return (n % 2 == 0 ? 1.0 : -1.0) * poly.a(n);
}

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double tol = kDefaultTolerance;
};

inline Spectrum spectrum(const GainGraph& g, double tol = kDefaultTolerance) {
    return {hermitian_eigenvalues(hermitian_matrix(g), tol), tol};
}

/// Sorted spectra agree entrywise within tol. Different orders are never cospectral.
inline bool cospectral(const GainGraph& a, const GainGraph& b, double tol = kDefaultTolerance) {
    if (a.vertex_count() != b.vertex_count()) return false;
    auto sa = spectrum(a, tol / 4).eigenvalues;
    auto sb = spectrum(b, tol / 4).eigenvalues;
    for (std::size_t j = 0; j < sa.size(); ++j) {
        if (std::abs(sa[j] - sb[j]) > tol) return false;
    }
    return true;
}

/// A mixed graph is balanced iff it is cospectral with its underlying graph.
inline bool is_balanced_spectrally(const GainGraph& g, double tol = kDefaultTolerance) {
    if (!g.mixed_mode()) {
        throw ValidationError("spectral balance test applies to mixed graphs only");
    }
    return cospectral(g, underlying(g), tol);
}

/// Cycle length -> sum of Re(zeta(C)) over all cycles of that length.
inline std::map<int, double> cycle_real_gain_sums(const GainGraph& g, int cap = kDefaultCycleCap) {
    std::map<int, double> sums;
    for_each_cycle(
        g.graph(),
        [&](const std::vector<Vertex>& c) {
            sums[static_cast<int>(c.size())] += real_cycle_gain(g, c);
        },
        cap);
    return sums;
}

/// Vertex (x, y) of a x b is numbered (x-1)*|V(b)| + y, so that
/// H(a x b) = I (x) H(b) + H(a) (x) I.
inline GainGraph cartesian_product(const GainGraph& a, const GainGraph& b) {
    if (!(a.group() == b.group())) throw ValidationError("cartesian product needs one gain group");
    const int nb = b.vertex_count();
    auto id = [nb](Vertex x, Vertex y) { return (x - 1) * nb + y; };
    std::vector<DirectedGain> gains;
    for (Vertex x = 1; x <= a.vertex_count(); ++x) {
        for (EdgeId e = 0; e < b.edge_count(); ++e) {
            const Edge& be = b.graph().edge(e);
            gains.push_back({id(x, be.u), id(x, be.v), b.canonical_gain(e)});
        }
    }
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
        const Edge& ae = a.graph().edge(e);
        for (Vertex y = 1; y <= nb; ++y) {
            gains.push_back({id(ae.u, y), id(ae.v, y), a.canonical_gain(e)});
        }
    }
    return build_gain_graph(a.vertex_count() * nb, a.group(), gains,
                            a.mixed_mode() && b.mixed_mode());
}

}  // namespace gainswitch
