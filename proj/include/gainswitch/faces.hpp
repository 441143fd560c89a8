#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gainswitch/blocks.hpp"
#include "gainswitch/census.hpp"
#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"
#include "gainswitch/switching.hpp"

namespace gainswitch {

/// Default cap on the number of inner faces for class counting (4^k states).
inline constexpr int kDefaultFaceCap = 12;

/// Inner face cycles of a 2-connected plane graph, all in clockwise order, and the
/// partition of the edges into cells E_pq. Faces are indexed 0..k-1. E_pq (p != q)
/// holds the edges shared by faces p and q, E_pp the edges lying on face p only.
class FaceStructure {
public:
    int face_count() const noexcept { return static_cast<int>(faces_.size()); }
    const std::vector<std::vector<Vertex>>& faces() const noexcept { return faces_; }
    const std::vector<Vertex>& face(int p) const { return faces_.at(static_cast<std::size_t>(p)); }

    const std::vector<EdgeId>& cell(int p, int q) const {
        if (p > q) std::swap(p, q);
        return cells_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q));
    }
    /// n_pq.
    int cell_size(int p, int q) const { return static_cast<int>(cell(p, q).size()); }

    /// +1 if face p runs along edge e from its smaller to its larger end, -1 if the
    /// other way, 0 if e is not on face p.
    int direction(int p, EdgeId e) const {
        return orientation_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(e));
    }

    /// Product of the gains on E_pq read along face p.
    Gain cell_gain(const GainGraph& g, int p, int q) const {
        Gain total = Gain::identity(g.group());
        for (EdgeId e : cell(p, q)) {
            total *= direction(p, e) > 0 ? g.canonical_gain(e) : g.canonical_gain(e).conj();
        }
        return total;
    }

    /// zeta of face p in its clockwise order.
    Gain face_gain(const GainGraph& g, int p) const { return cycle_gain(g, face(p)); }

    friend FaceStructure parse_face_structure(const SimpleGraph&, const std::vector<std::vector<Vertex>>&);

private:
    std::vector<std::vector<Vertex>> faces_;
    std::vector<std::vector<std::vector<EdgeId>>> cells_;
    std::vector<std::vector<int>> orientation_;
};

/// Validates the face list against g and builds the E_pq partition. Requires g
/// 2-connected, k = m - n + 1 distinct faces, each a cycle of g, each edge on one or
/// two faces, and shared edges run in opposite directions (consistent orientation).
inline FaceStructure parse_face_structure(const SimpleGraph& g,
                                          const std::vector<std::vector<Vertex>>& faces) {
    if (!is_two_connected(g)) throw ValidationError("face structure needs a 2-connected graph");
    const int k = static_cast<int>(faces.size());
    const int expected = g.edge_count() - g.vertex_count() + 1;
    if (k != expected) {
        throw ValidationError("expected " + std::to_string(expected) + " inner faces (m - n + 1), got " +
                              std::to_string(k));
    }
    FaceStructure fs;
    fs.faces_ = faces;
    fs.orientation_.assign(static_cast<std::size_t>(k),
                           std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0));
    std::vector<std::vector<int>> on_faces(static_cast<std::size_t>(g.edge_count()));
    std::vector<std::vector<EdgeId>> edge_sets;

    for (int p = 0; p < k; ++p) {
        const auto& f = faces[static_cast<std::size_t>(p)];
        std::string label = "face " + std::to_string(p + 1);
        if (f.size() < 3) throw ValidationError(label + " has fewer than 3 vertices");
        std::vector<Vertex> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError(label + " repeats a vertex");
        }
        std::vector<EdgeId> ids;
        for (std::size_t j = 0; j < f.size(); ++j) {
            Vertex a = f[j];
            Vertex b = f[(j + 1) % f.size()];
            auto id = g.edge_id(a, b);
            if (!id) {
                throw ValidationError(label + " uses {" + std::to_string(a) + "," + std::to_string(b) +
                                      "}, which is not an edge");
            }
            fs.orientation_[static_cast<std::size_t>(p)][static_cast<std::size_t>(*id)] = a < b ? 1 : -1;
            on_faces[static_cast<std::size_t>(*id)].push_back(p);
            ids.push_back(*id);
        }
        std::sort(ids.begin(), ids.end());
        if (std::find(edge_sets.begin(), edge_sets.end(), ids) != edge_sets.end()) {
            throw ValidationError(label + " repeats an earlier face");
        }
        edge_sets.push_back(std::move(ids));
    }

    fs.cells_.assign(static_cast<std::size_t>(k), std::vector<std::vector<EdgeId>>(static_cast<std::size_t>(k)));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& list = on_faces[static_cast<std::size_t>(e)];
        const Edge& edge = g.edge(e);
        std::string label = "edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "}";
        if (list.empty()) throw ValidationError(label + " lies on no face");
        if (list.size() > 2) throw ValidationError(label + " lies on more than two faces");
        int p = list.front();
        int q = list.back();
        if (p != q && fs.direction(p, e) == fs.direction(q, e)) {
            throw ValidationError(label + " is traversed in the same direction by faces " +
                                  std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                                  "; faces must all be clockwise");
        }
        fs.cells_[static_cast<std::size_t>(std::min(p, q))][static_cast<std::size_t>(std::max(p, q))].push_back(e);
    }
    return fs;
}

namespace detail {

/// When E(C_p) delta E(C_q) is one cycle, its gain must equal zeta(C_p) zeta(C_q).
inline void check_symmetric_difference_law(const GainGraph& g, const FaceStructure& fs) {
    const SimpleGraph& graph = g.graph();
    for (int p = 0; p < fs.face_count(); ++p) {
        for (int q = p + 1; q < fs.face_count(); ++q) {
            if (fs.cell_size(p, q) == 0) continue;
            std::vector<EdgeId> diff;
            for (EdgeId e = 0; e < graph.edge_count(); ++e) {
                if ((fs.direction(p, e) != 0) != (fs.direction(q, e) != 0)) diff.push_back(e);
            }
            std::map<Vertex, std::vector<EdgeId>> incident;
            for (EdgeId e : diff) {
                incident[graph.edge(e).u].push_back(e);
                incident[graph.edge(e).v].push_back(e);
            }
            bool degree_two = std::all_of(incident.begin(), incident.end(),
                                          [](const auto& kv) { return kv.second.size() == 2; });
            if (!degree_two || diff.empty()) continue;

            // Walk from an edge of face p (not on q) in face p's direction.
            EdgeId first = -1;
            for (EdgeId e : diff) {
                if (fs.direction(p, e) != 0) {
                    first = e;
                    break;
                }
            }
            Vertex at = fs.direction(p, first) > 0 ? graph.edge(first).u : graph.edge(first).v;
            Gain total = Gain::identity(g.group());
            EdgeId e = first;
            std::size_t steps = 0;
            do {
                total *= g.gain_from(e, at);
                at = graph.edge(e).other(at);
                const auto& pair = incident[at];
                e = pair[0] == e ? pair[1] : pair[0];
                ++steps;
            } while (e != first && steps <= diff.size());
            if (steps != diff.size()) continue;  // several disjoint cycles
            if (total != fs.face_gain(g, p) * fs.face_gain(g, q)) {
                throw ValidationError("faces " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                                      " violate the symmetric-difference gain law; check the cyclic orders");
            }
        }
    }
}

}  // namespace detail

/// parse_face_structure plus the symmetric-difference gain check on g's gains.
inline FaceStructure parse_face_structure(const GainGraph& g,
                                          const std::vector<std::vector<Vertex>>& faces) {
    FaceStructure fs = parse_face_structure(g.graph(), faces);
    detail::check_symmetric_difference_law(g, fs);
    return fs;
}

/// k x k matrix over {0, +-1, +-i}; 0 marks an empty cell.
class GammaMatrix {
public:
    explicit GammaMatrix(int k = 0)
        : k_(k), exps_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), -1) {}

    int size() const noexcept { return k_; }

    std::optional<Gain> entry(int p, int q) const {
        int e = exps_[index(p, q)];
        if (e < 0) return std::nullopt;
        return Gain(e, mixed::group);
    }
    void set(int p, int q, std::optional<Gain> x) { exps_[index(p, q)] = x ? x->exponent() : -1; }

    friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;
    friend auto operator<=>(const GammaMatrix&, const GammaMatrix&) = default;

private:
    std::size_t index(int p, int q) const {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(q);
    }

    int k_;
    std::vector<int> exps_;
};

namespace detail {

struct GammaCell {
    int p;
    int q;
    int size;
};

inline std::vector<GammaCell> gamma_cells(const FaceStructure& fs) {
    std::vector<GammaCell> cells;
    for (int p = 0; p < fs.face_count(); ++p) {
        for (int q = p; q < fs.face_count(); ++q) {
            if (fs.cell_size(p, q) > 0) cells.push_back({p, q, fs.cell_size(p, q)});
        }
    }
    return cells;
}

/// Entries a cell may take: {1, i, -i} for one edge, all four gains for more.
inline std::vector<int> allowed_cell_exponents(int size) {
    return size == 1 ? std::vector<int>{0, 1, 3} : std::vector<int>{0, 1, 2, 3};
}

}  // namespace detail

/// All X with: allowed entries per cell size, row products y_p, and x_qp = conj(x_pq).
inline std::vector<GammaMatrix> enumerate_gamma(const FaceStructure& fs, const std::vector<Gain>& y) {
    const int k = fs.face_count();
    if (static_cast<int>(y.size()) != k) throw ValidationError("y must have one gain per face");
    for (const auto& g : y) {
        if (g.order() != 4) throw ValidationError("face gains must come from the order-4 group");
    }
    auto cells = detail::gamma_cells(fs);
    std::vector<int> pending(static_cast<std::size_t>(k), 0);
    for (const auto& c : cells) {
        ++pending[static_cast<std::size_t>(c.p)];
        if (c.q != c.p) ++pending[static_cast<std::size_t>(c.q)];
    }
    std::vector<int> row(static_cast<std::size_t>(k), 0);
    std::vector<int> choice(cells.size(), 0);
    std::vector<GammaMatrix> out;

    auto row_consistent = [&](int r) {
        return pending[static_cast<std::size_t>(r)] > 0 ||
               row[static_cast<std::size_t>(r)] == y[static_cast<std::size_t>(r)].exponent();
    };

    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == cells.size()) {
            GammaMatrix x(k);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                Gain value(choice[c], mixed::group);
                x.set(cells[c].p, cells[c].q, value);
                if (cells[c].q != cells[c].p) x.set(cells[c].q, cells[c].p, value.conj());
            }
            out.push_back(std::move(x));
            return;
        }
        const auto& cell = cells[j];
        auto p = static_cast<std::size_t>(cell.p);
        auto q = static_cast<std::size_t>(cell.q);
        for (int e : detail::allowed_cell_exponents(cell.size)) {
            choice[j] = e;
            row[p] = (row[p] + e) & 3;
            --pending[p];
            if (q != p) {
                row[q] = (row[q] - e) & 3;
                --pending[q];
            }
            if (row_consistent(cell.p) && row_consistent(cell.q)) self(self, j + 1);
            if (q != p) {
                ++pending[q];
                row[q] = (row[q] + e) & 3;
            }
            ++pending[p];
            row[p] = (row[p] - e) & 3;
        }
    };
    recurse(recurse, 0);
    return out;
}

/// |[g]| = sum over X in Gamma(y) of prod_{p <= q, n_pq > 0} alpha_{x_pq}(n_pq),
/// with y_p the clockwise gain of face p.
inline BigInt plane_class_size(const GainGraph& g, const FaceStructure& fs) {
    if (g.group().order() != 4) throw ValidationError("plane class sizes are counted among mixed graphs");
    std::vector<Gain> y;
    for (int p = 0; p < fs.face_count(); ++p) y.push_back(fs.face_gain(g, p));
    auto cells = detail::gamma_cells(fs);
    std::map<int, ClassCountVector> alpha;
    for (const auto& c : cells) {
        if (!alpha.contains(c.size)) alpha.emplace(c.size, alpha_vector(c.size));
    }
    BigInt total = 0;
    for (const auto& x : enumerate_gamma(fs, y)) {
        BigInt term = 1;
        for (const auto& c : cells) term *= alpha.at(c.size)[*x.entry(c.p, c.q)];
        total += term;
    }
    return total;
}

/// Number of y in {+-1, +-i}^k with Gamma(y) non-empty, i.e. the number of switching
/// classes. Computed as the set of reachable row-product vectors, cell by cell.
inline BigInt plane_class_count(const FaceStructure& fs, int cap = kDefaultFaceCap) {
    const int k = fs.face_count();
    if (k > cap) throw TooLargeError("plane class count", k, cap);
    const std::size_t states = std::size_t{1} << (2 * k);
    std::vector<char> reach(states, 0);
    reach[0] = 1;
    for (const auto& c : detail::gamma_cells(fs)) {
        std::vector<char> next(states, 0);
        for (std::size_t s = 0; s < states; ++s) {
            if (!reach[s]) continue;
            for (int e : detail::allowed_cell_exponents(c.size)) {
                std::size_t t = s;
                auto bump = [&](int r, int delta) {
                    std::size_t shift = 2 * static_cast<std::size_t>(r);
                    std::size_t cur = (t >> shift) & 3;
                    std::size_t val = (cur + static_cast<std::size_t>(delta & 3)) & 3;
                    t = (t & ~(std::size_t{3} << shift)) | (val << shift);
                };
                bump(c.p, e);
                if (c.q != c.p) bump(c.q, -e);
                next[t] = 1;
            }
        }
        reach = std::move(next);
    }
    return BigInt(std::count(reach.begin(), reach.end(), char{1}));
}

inline BigInt plane_class_count(const SimpleGraph&, const FaceStructure& fs, int cap = kDefaultFaceCap) {
    return plane_class_count(fs, cap);
}

}  // namespace gainswitch
