#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"

// Text format, one record per line, '#' starts a comment:
//
//   gg <k> [mixed]
//   n <vertices>
//   e <u> <v> <t>        gain(u,v) = exp(2 pi i t / k)
//   f <v1> ... <vl>      inner face, clockwise
//
// With k = 4 the gain token is one of 1, i, -1, -i (the token "1" is the identity,
// not exponent 1); bare exponents 0, 2, 3 are accepted too.

namespace gainswitch {

struct GgFile {
    GainGraph graph;
    std::vector<std::vector<Vertex>> faces;
};

namespace detail {

[[noreturn]] inline void gg_fail(const std::string& source, int line, const std::string& msg) {
    throw ValidationError(source + ":" + std::to_string(line) + ": " + msg);
}

inline int gg_int(const std::string& token, const std::string& source, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        gg_fail(source, line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) gg_fail(source, line, "expected an integer, got '" + token + "'");
    return value;
}

inline int gg_exponent(const std::string& token, int k, const std::string& source, int line) {
    if (k == 4) {
        if (token == "1") return 0;
        if (token == "i") return 1;
        if (token == "-1") return 2;
        if (token == "-i") return 3;
    }
    int t = gg_int(token, source, line);
    if (t < 0 || t >= k) {
        gg_fail(source, line, "gain exponent " + token + " out of range [0," + std::to_string(k) + ")");
    }
    return t;
}

}  // namespace detail

inline GgFile parse_gg(std::istream& in, const std::string& source = "<input>") {
    std::optional<GainGroup> group;
    bool mixed = false;
    int n = -1;
    std::vector<DirectedGain> gains;
    std::vector<std::vector<Vertex>> faces;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream tokens(raw);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(w);
        if (words.empty()) continue;

        const std::string& tag = words[0];
        if (!group) {
            if (tag != "gg") detail::gg_fail(source, line, "first record must be 'gg <k>'");
            if (words.size() < 2 || words.size() > 3) detail::gg_fail(source, line, "expected 'gg <k> [mixed]'");
            int k = detail::gg_int(words[1], source, line);
            if (k < 1) detail::gg_fail(source, line, "gain group order must be positive");
            if (words.size() == 3) {
                if (words[2] != "mixed") detail::gg_fail(source, line, "unknown flag '" + words[2] + "'");
                if (k != 4) detail::gg_fail(source, line, "mixed mode needs k = 4");
                mixed = true;
            }
            group = GainGroup(k);
            continue;
        }
        if (n < 0) {
            if (tag != "n" || words.size() != 2) detail::gg_fail(source, line, "second record must be 'n <vertices>'");
            n = detail::gg_int(words[1], source, line);
            if (n < 0) detail::gg_fail(source, line, "vertex count must be non-negative");
            continue;
        }
        if (tag == "e") {
            if (words.size() != 4) detail::gg_fail(source, line, "expected 'e <u> <v> <t>'");
            Vertex u = detail::gg_int(words[1], source, line);
            Vertex v = detail::gg_int(words[2], source, line);
            if (u < 1 || u > n || v < 1 || v > n) detail::gg_fail(source, line, "vertex out of range 1.." + std::to_string(n));
            if (u == v) detail::gg_fail(source, line, "loops are not allowed");
            int t = detail::gg_exponent(words[3], group->order(), source, line);
            if (mixed && t == 2) detail::gg_fail(source, line, "gain -1 is not allowed in a mixed graph");
            for (const auto& prior : gains) {
                if ((prior.from == u && prior.to == v) || (prior.from == v && prior.to == u)) {
                    detail::gg_fail(source, line, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
                }
            }
            gains.push_back({u, v, Gain(t, *group)});
        } else if (tag == "f") {
            if (words.size() < 4) detail::gg_fail(source, line, "a face needs at least 3 vertices");
            std::vector<Vertex> face;
            for (std::size_t j = 1; j < words.size(); ++j) {
                Vertex v = detail::gg_int(words[j], source, line);
                if (v < 1 || v > n) detail::gg_fail(source, line, "vertex out of range 1.." + std::to_string(n));
                face.push_back(v);
            }
            faces.push_back(std::move(face));
        } else {
            detail::gg_fail(source, line, "unknown record '" + tag + "'");
        }
    }
    if (!group) detail::gg_fail(source, line, "missing 'gg <k>' header");
    if (n < 0) detail::gg_fail(source, line, "missing 'n <vertices>' record");
    return {build_gain_graph(n, *group, gains, mixed), std::move(faces)};
}

inline GgFile parse_gg_string(const std::string& text, const std::string& source = "<string>") {
    std::istringstream in(text);
    return parse_gg(in, source);
}

inline GgFile read_gg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return parse_gg(in, path);
}

inline std::string gain_token(const Gain& g) {
    if (g.order() == 4) return to_string(g);
    return std::to_string(g.exponent());
}

inline void write_gg(std::ostream& out, const GainGraph& g,
                     const std::vector<std::vector<Vertex>>& faces = {}) {
    out << "gg " << g.group().order();
    if (g.mixed_mode()) out << " mixed";
    out << "\nn " << g.vertex_count() << "\n";
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.graph().edge(id);
        out << "e " << e.u << " " << e.v << " " << gain_token(g.canonical_gain(id)) << "\n";
    }
    for (const auto& face : faces) {
        out << "f";
        for (Vertex v : face) out << " " << v;
        out << "\n";
    }
}

inline std::string to_gg_string(const GainGraph& g, const std::vector<std::vector<Vertex>>& faces = {}) {
    std::ostringstream out;
    write_gg(out, g, faces);
    return out.str();
}

}  // namespace gainswitch
