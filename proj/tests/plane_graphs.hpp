#pragma once

// Hand-built 2-connected plane graphs with their inner faces listed clockwise.

#include <string>
#include <vector>

#include "gainswitch/gainswitch.hpp"

namespace test_planes {

using gainswitch::SimpleGraph;
using gainswitch::Vertex;

struct Plane {
    std::string name;
    SimpleGraph graph;
    std::vector<std::vector<Vertex>> faces;
};

inline Plane wheel(int rim) {
    Vertex hub = rim + 1;
    SimpleGraph g(hub);
    std::vector<std::vector<Vertex>> faces;
    for (Vertex v = 1; v <= rim; ++v) {
        Vertex next = v % rim + 1;
        g.add_edge(v, next);
        g.add_edge(v, hub);
        faces.push_back({v, next, hub});
    }
    return {"wheel" + std::to_string(rim), g, faces};
}

inline std::vector<Plane> all() {
    std::vector<Plane> out;
    out.push_back({"square_with_diagonal", SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}),
                   {{1, 2, 3}, {1, 3, 4}}});
    out.push_back(wheel(4));
    out.push_back(wheel(5));
    out.push_back(wheel(6));
    out.push_back({"theta", SimpleGraph(6, {{1, 3}, {3, 2}, {1, 4}, {4, 5}, {5, 2}, {1, 6}, {6, 2}}),
                   {{1, 3, 2, 5, 4}, {1, 4, 5, 2, 6}}});
    out.push_back({"ladder", SimpleGraph(8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8},
                                             {1, 5}, {2, 6}, {3, 7}, {4, 8}}),
                   {{1, 2, 6, 5}, {2, 3, 7, 6}, {3, 4, 8, 7}}});
    out.push_back({"grid3", SimpleGraph(9, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9},
                                            {1, 4}, {4, 7}, {2, 5}, {5, 8}, {3, 6}, {6, 9}}),
                   {{1, 2, 5, 4}, {2, 3, 6, 5}, {4, 5, 8, 7}, {5, 6, 9, 8}}});
    out.push_back({"k4", SimpleGraph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}),
                   {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}}});
    out.push_back({"prism", SimpleGraph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}}),
                   {{4, 5, 6}, {1, 2, 5, 4}, {2, 3, 6, 5}, {3, 1, 4, 6}}});
    out.push_back({"hexagon_with_path", SimpleGraph(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 7}, {7, 4}}),
                   {{1, 2, 3, 4, 7}, {1, 7, 4, 5, 6}}});
    out.push_back({"cube", SimpleGraph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                                           {1, 5}, {2, 6}, {3, 7}, {4, 8}}),
                   {{5, 6, 7, 8}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 4, 8, 7}, {4, 1, 5, 8}}});
    out.push_back({"long_theta", SimpleGraph(8, {{1, 3}, {3, 4}, {4, 2}, {1, 5}, {5, 2}, {1, 6}, {6, 7}, {7, 8}, {8, 2}}),
                   {{1, 3, 4, 2, 5}, {1, 5, 2, 8, 7, 6}}});
    return out;
}

}  // namespace test_planes
