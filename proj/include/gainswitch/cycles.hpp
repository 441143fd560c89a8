#pragma once

#include <string>
#include <vector>

#include "gainswitch/errors.hpp"
#include "gainswitch/simple_graph.hpp"

namespace gainswitch {

/// Default vertex cap for exhaustive cycle enumeration.
inline constexpr int kDefaultCycleCap = 12;

namespace detail {

inline void check_cycle_cap(const SimpleGraph& g, int cap, const char* what) {
    if (g.vertex_count() > cap) throw TooLargeError(what, g.vertex_count(), cap);
}

template <bool Chordless, typename Visit>
void extend_cycles(const SimpleGraph& g, Vertex start, std::vector<Vertex>& path,
                   std::vector<char>& on_path, Visit& visit) {
    Vertex last = path.back();
    for (const auto& nb : g.neighbors(last)) {
        Vertex w = nb.vertex;
        if (w < start) continue;
        if (w == start) {
            // Close; each cycle is reported in one orientation only.
            if (path.size() >= 3 && path[1] < last) visit(path);
            continue;
        }
        if (on_path[w - 1]) continue;
        bool closes = false;
        if constexpr (Chordless) {
            bool chord = false;
            for (std::size_t j = 1; j + 1 < path.size(); ++j) {
                if (g.adjacent(w, path[j])) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            closes = path.size() >= 2 && g.adjacent(w, start);
        }
        path.push_back(w);
        on_path[w - 1] = 1;
        if (closes) {
            if (path[1] < w) visit(path);
        } else {
            extend_cycles<Chordless>(g, start, path, on_path, visit);
        }
        on_path[w - 1] = 0;
        path.pop_back();
    }
}

template <bool Chordless, typename Visit>
void enumerate_cycles_impl(const SimpleGraph& g, Visit&& visit) {
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> path;
    for (Vertex s = 1; s <= g.vertex_count(); ++s) {
        path.assign(1, s);
        on_path[s - 1] = 1;
        extend_cycles<Chordless>(g, s, path, on_path, visit);
        on_path[s - 1] = 0;
    }
}

}  // namespace detail

/// Calls visit(vertices) once per simple cycle. The sequence starts at the cycle's
/// smallest vertex and its second vertex is smaller than its last.
template <typename Visit>
void for_each_cycle(const SimpleGraph& g, Visit&& visit, int cap = kDefaultCycleCap) {
    detail::check_cycle_cap(g, cap, "cycle enumeration");
    detail::enumerate_cycles_impl<false>(g, visit);
}

/// Same as for_each_cycle restricted to induced (chordless) cycles.
template <typename Visit>
void for_each_chordless_cycle(const SimpleGraph& g, Visit&& visit, int cap = kDefaultCycleCap) {
    detail::check_cycle_cap(g, cap, "chordless cycle enumeration");
    detail::enumerate_cycles_impl<true>(g, visit);
}

inline std::vector<std::vector<Vertex>> all_cycles(const SimpleGraph& g,
                                                   int cap = kDefaultCycleCap) {
    std::vector<std::vector<Vertex>> out;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) { out.push_back(c); }, cap);
    return out;
}

inline std::vector<std::vector<Vertex>> chordless_cycles(const SimpleGraph& g,
                                                         int cap = kDefaultCycleCap) {
    std::vector<std::vector<Vertex>> out;
    for_each_chordless_cycle(g, [&](const std::vector<Vertex>& c) { out.push_back(c); }, cap);
    return out;
}

}  // namespace gainswitch
