#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gainswitch/errors.hpp"

namespace gainswitch {

/// Vertices are 1-based: 1..n.
using Vertex = int;
using EdgeId = int;

/// Undirected edge with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex;
    EdgeId edge;
};

/// Undirected simple graph on vertices 1..n. Neighbor lists are sorted by vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw ValidationError("vertex count must be non-negative");
    }

    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    /// Adds {u,v}; returns its id. Rejects loops, duplicates and out-of-range ends.
    EdgeId add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (index_.contains(key(u, v))) {
            throw ValidationError("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
        }
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        index_.emplace(key(u, v), id);
        insert_sorted(adjacency_[u - 1], {v, id});
        insert_sorted(adjacency_[v - 1], {u, id});
        return id;
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

    const std::vector<Neighbor>& neighbors(Vertex v) const {
        return adjacency_.at(static_cast<std::size_t>(v - 1));
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const {
        if (u == v || !contains_vertex(u) || !contains_vertex(v)) return std::nullopt;
        if (u > v) std::swap(u, v);
        auto it = index_.find(key(u, v));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

    bool contains_vertex(Vertex v) const noexcept { return v >= 1 && v <= n_; }

    /// Component label (0-based, in order of smallest vertex) per vertex index v-1.
    std::vector<int> component_labels() const {
        std::vector<int> label(static_cast<std::size_t>(n_), -1);
        int next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 1; s <= n_; ++s) {
            if (label[s - 1] >= 0) continue;
            label[s - 1] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (const auto& nb : neighbors(x)) {
                    if (label[nb.vertex - 1] < 0) {
                        label[nb.vertex - 1] = next;
                        stack.push_back(nb.vertex);
                    }
                }
            }
            ++next;
        }
        return label;
    }

    int component_count() const {
        auto labels = component_labels();
        return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    }

    bool is_connected() const { return component_count() <= 1; }

    /// Dimension of the cycle space, m - n + c.
    int cyclomatic_number() const { return edge_count() - vertex_count() + component_count(); }

    /// Same vertex count and same edge set (edge ids may differ).
    bool same_edges(const SimpleGraph& other) const {
        if (n_ != other.n_ || edge_count() != other.edge_count()) return false;
        return std::all_of(edges_.begin(), edges_.end(),
                           [&](const Edge& e) { return other.adjacent(e.u, e.v); });
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static std::uint64_t key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    static void insert_sorted(std::vector<Neighbor>& list, Neighbor nb) {
        auto pos = std::lower_bound(list.begin(), list.end(), nb,
                                    [](const Neighbor& a, const Neighbor& b) {
                                        return a.vertex < b.vertex;
                                    });
        list.insert(pos, nb);
    }

    void check_vertex(Vertex v) const {
        if (!contains_vertex(v)) {
            throw ValidationError("vertex " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n_));
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

}  // namespace gainswitch
