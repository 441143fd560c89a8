#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "gainswitch/simple_graph.hpp"

namespace gainswitch {

/// Biconnected components as edge sets, found with the low-link edge-stack scan.
struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // each sorted by edge id
    std::vector<EdgeId> bridges;              // single-edge blocks
    std::vector<Vertex> articulation_points;
};

inline BlockDecomposition biconnected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), 0);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
        disc[v - 1] = low[v - 1] = ++timer;
        int children = 0;
        for (const auto& nb : g.neighbors(v)) {
            if (nb.edge == via) continue;
            Vertex w = nb.vertex;
            if (disc[w - 1] == 0) {
                edge_stack.push_back(nb.edge);
                ++children;
                dfs(w, nb.edge);
                low[v - 1] = std::min(low[v - 1], low[w - 1]);
                if (low[w - 1] >= disc[v - 1]) {
                    if (via >= 0 || children > 1) is_cut[v - 1] = 1;
                    std::vector<EdgeId> block;
                    EdgeId e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                    } while (e != nb.edge);
                    std::sort(block.begin(), block.end());
                    if (block.size() == 1) out.bridges.push_back(block.front());
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[w - 1] < disc[v - 1]) {
                edge_stack.push_back(nb.edge);
                low[v - 1] = std::min(low[v - 1], disc[w - 1]);
            }
        }
        if (via < 0 && children > 1) is_cut[v - 1] = 1;
    };

    for (Vertex v = 1; v <= n; ++v) {
        if (disc[v - 1] == 0) dfs(v, -1);
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    for (Vertex v = 1; v <= n; ++v) {
        if (is_cut[v - 1]) out.articulation_points.push_back(v);
    }
    return out;
}

inline std::vector<EdgeId> bridges(const SimpleGraph& g) { return biconnected_components(g).bridges; }

/// One block as a standalone graph. Local vertex j maps to vertex_map[j-1];
/// local edge id e maps to edge_map[e].
struct Block {
    SimpleGraph graph;
    std::vector<Vertex> vertex_map;
    std::vector<EdgeId> edge_map;

    bool is_edge() const { return graph.edge_count() == 1; }
    bool is_cycle() const {
        return graph.edge_count() >= 3 && graph.edge_count() == graph.vertex_count();
    }
};

inline std::vector<Block> block_decompose(const SimpleGraph& g) {
    std::vector<Block> out;
    for (const auto& edges : biconnected_components(g).blocks) {
        std::vector<Vertex> verts;
        for (EdgeId id : edges) {
            verts.push_back(g.edge(id).u);
            verts.push_back(g.edge(id).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        auto local = [&](Vertex v) {
            return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) -
                                       verts.begin()) + 1;
        };
        Block b{SimpleGraph(static_cast<int>(verts.size())), verts, {}};
        for (EdgeId id : edges) {
            b.graph.add_edge(local(g.edge(id).u), local(g.edge(id).v));
            b.edge_map.push_back(id);
        }
        out.push_back(std::move(b));
    }
    return out;
}

/// Every block is a single edge or a cycle.
inline bool is_cactus(const SimpleGraph& g) {
    for (const auto& edges : biconnected_components(g).blocks) {
        if (edges.size() == 1) continue;
        std::vector<Vertex> verts;
        for (EdgeId id : edges) {
            verts.push_back(g.edge(id).u);
            verts.push_back(g.edge(id).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (verts.size() != edges.size()) return false;
    }
    return true;
}

inline bool is_bipartite(const SimpleGraph& g, std::vector<int>* coloring = nullptr) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue;
    bool ok = true;
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        if (color[s - 1] >= 0) continue;
        color[s - 1] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (const auto& nb : g.neighbors(x)) {
                if (color[nb.vertex - 1] < 0) {
                    color[nb.vertex - 1] = 1 - color[x - 1];
                    queue.push_back(nb.vertex);
                } else if (color[nb.vertex - 1] == color[x - 1]) {
                    ok = false;
                }
            }
        }
    }
    if (coloring) *coloring = std::move(color);
    return ok;
}

/// Connected, at least 3 vertices, no articulation point.
inline bool is_two_connected(const SimpleGraph& g) {
    if (g.vertex_count() < 3 || !g.is_connected()) return false;
    return biconnected_components(g).articulation_points.empty();
}

}  // namespace gainswitch
