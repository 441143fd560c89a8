#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "gainswitch/gainswitch.hpp"

namespace gainswitch::cli {

using nlohmann::json;

enum ExitCode { kComputed = 0, kNegative = 1, kInvalid = 2, kTooLarge = 3, kNumeric = 4 };

struct Options {
    double tol = kDefaultTolerance;
    bool require_faces = false;
    int census_cap = kDefaultCensusCap;
    int elementary_cap = kDefaultElementaryCap;
    int cycle_cap = kDefaultCycleCap;
    int aut_cap = kDefaultAutCap;
    std::string output;

    /// --max-enum bounds every exhaustive enumeration at once.
    void set_max_enum(int cap) { census_cap = elementary_cap = cycle_cap = cap; }
};

struct Report {
    explicit Report(std::string name, std::vector<std::string> files = {})
        : command(std::move(name)), inputs(std::move(files)) {}

    std::string command;
    std::vector<std::string> inputs;
    json result = json::object();
    std::vector<std::string> diagnostics;
    int exit_code = kComputed;

    json to_json() const {
        return json{{"command", command}, {"inputs", inputs}, {"result", result},
                    {"diagnostics", diagnostics}, {"exit_code", exit_code}};
    }
};

/// 12 significant digits; values below tol print as 0.
inline double rounded(double x, double tol = 0.0) {
    if (std::abs(x) <= tol) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

inline json number_list(const std::vector<double>& xs, double tol = 0.0) {
    json out = json::array();
    for (double x : xs) out.push_back(rounded(x, tol));
    return out;
}

/// Exact integer: a JSON number when it fits in 64 bits, otherwise a decimal string.
inline json big_json(const BigInt& x) {
    if (x >= 0 && x <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

inline json gain_json(const Gain& g) { return gain_token(g); }

inline json theta_json(const SwitchingFunction& theta) {
    json out = json::object();
    for (Vertex v = 1; v <= theta.size(); ++v) out[std::to_string(v)] = gain_token(theta(v));
    return out;
}

inline json permutation_json(const VertexPermutation& f) { return f.image(); }

inline GgFile load(const std::string& path, Report& report) {
    report.inputs.push_back(path);
    return read_gg_file(path);
}

/// Coefficients [1, a_1, ..., a_n] of prod (x - lambda).
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= r * c[j - 1];
    }
    return c;
}

inline Report cmd_equiv(const std::string& file_a, const std::string& file_b, const Options&) {
    Report report{"equiv", {}};
    auto a = load(file_a, report).graph;
    auto b = load(file_b, report).graph;
    if (!(a.group() == b.group())) throw ValidationError("different gain group");
    if (!a.graph().same_edges(b.graph())) throw ValidationError("different underlying graph");

    auto forest = spanning_forest(a.graph());
    auto eq = switching_equivalent(a, b, forest);
    json& r = report.result;
    r["equivalent"] = eq.equivalent();
    r["basis_size"] = a.graph().cyclomatic_number();
    r["witness"] = eq.witness ? theta_json(*eq.witness) : json(nullptr);
    if (eq.mismatch) {
        const auto& mm = *eq.mismatch;
        const Edge& chord = a.graph().edge(mm.chord);
        r["mismatch"] = {{"basis_index", mm.basis_index},
                         {"chord", {chord.u, chord.v}},
                         {"cycle", mm.cycle},
                         {"gain_a", gain_json(mm.gain_a)},
                         {"gain_b", gain_json(mm.gain_b)}};
    } else {
        r["mismatch"] = nullptr;
    }
    report.exit_code = eq.equivalent() ? kComputed : kNegative;
    return report;
}

inline Report cmd_spectrum(const std::string& file, const Options& opt) {
    Report report{"spectrum", {}};
    auto g = load(file, report).graph;
    auto eig = spectrum(g, opt.tol).eigenvalues;
    json& r = report.result;
    r["tol"] = opt.tol;
    r["eigenvalues"] = number_list(eig, opt.tol);
    auto from_eigen = poly_from_roots(eig);
    r["coefficients_eigen"] = number_list(from_eigen, opt.tol);
    try {
        auto poly = char_poly_elementary(g, opt.elementary_cap);
        double gap = 0.0;
        for (std::size_t j = 0; j < from_eigen.size(); ++j) {
            gap = std::max(gap, std::abs(from_eigen[j] - poly.coefficients[j]));
        }
        r["coefficients"] = number_list(poly.coefficients);
        r["max_discrepancy"] = rounded(gap);
        int n = g.vertex_count();
        r["determinant"] = rounded((n % 2 == 0 ? 1.0 : -1.0) * poly.a(n));
    } catch (const TooLargeError& e) {
        r["coefficients"] = nullptr;
        r["max_discrepancy"] = nullptr;
        r["determinant"] = nullptr;
        report.diagnostics.push_back(std::string("elementary-subgraph route skipped: ") + e.what());
        report.exit_code = kTooLarge;
    }
    return report;
}

inline Report cmd_census(const std::string& file, const Options& opt) {
    Report report{"census", {}};
    auto parsed = load(file, report);
    const GainGraph& g = parsed.graph;
    const SimpleGraph& s = g.graph();
    if (opt.require_faces && parsed.faces.empty()) throw ValidationError("--faces given but the file has no 'f' lines");
    if (!g.is_mixed_compatible() || g.group().order() != 4) {
        throw ValidationError("census counts mixed graphs; gains must lie in {1, i, -i}");
    }

    json& r = report.result;
    auto bounds = class_count_bounds(s);
    r["n"] = s.vertex_count();
    r["m"] = s.edge_count();
    r["cyclomatic_number"] = s.cyclomatic_number();
    r["bounds"] = {big_json(bounds.lower), big_json(bounds.upper)};
    r["upper_bound_condition"] = bounds.upper_tight;
    r["cut_edge_lower_bound"] = big_json(cut_edge_lower_bound(s));

    json methods = json::object();
    json checks = json::object();
    std::optional<BigInt> brute_size;
    std::optional<std::size_t> brute_count;

    if (s.edge_count() <= opt.census_cap) {
        auto census = brute_force_census(s, opt.census_cap);
        std::vector<BigInt> sizes;
        for (const auto& c : census.classes) sizes.push_back(c.size);
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        json size_list = json::array();
        for (const auto& x : sizes) size_list.push_back(big_json(x));
        r["classes"] = census.class_count();
        r["sizes"] = size_list;
        r["total"] = big_json(census.total);
        const auto* mine = census.find(cycle_gain_profile(g, census.basis));
        brute_size = mine->size;
        brute_count = census.class_count();
        methods["brute_force"] = {{"class_size", big_json(*brute_size)}, {"classes", *brute_count}};
        bool inside = BigInt(census.class_count()) >= bounds.lower && BigInt(census.class_count()) <= bounds.upper;
        checks["count_within_bounds"] = inside;
        if (bounds.upper_tight) checks["upper_bound_attained"] = BigInt(census.class_count()) == bounds.upper;
    } else {
        r["classes"] = nullptr;
        r["sizes"] = nullptr;
        r["total"] = big_json(big_pow(3, static_cast<unsigned>(s.edge_count())));
        report.diagnostics.push_back("brute-force census skipped: " + std::to_string(s.edge_count()) +
                                     " edges exceed the cap " + std::to_string(opt.census_cap));
    }

    std::optional<BigInt> formula_size;
    bool is_cycle = s.vertex_count() >= 3 && s.is_connected() && s.edge_count() == s.vertex_count() &&
                    std::all_of(s.edges().begin(), s.edges().end(),
                                [&](const Edge& e) { return s.degree(e.u) == 2 && s.degree(e.v) == 2; });
    if (is_cycle) {
        Gain zeta = cycle_gain_profile(g).front();
        BigInt size = cycle_class_size(s.vertex_count(), zeta);
        methods["cycle"] = {{"cycle_gain", gain_json(zeta)}, {"class_size", big_json(size)}};
        if (brute_size) checks["cycle_vs_brute_force"] = size == *brute_size;
        formula_size = size;
    }
    try {
        BigInt size = class_size_by_blocks(g, opt.census_cap);
        methods["blocks"] = {{"class_size", big_json(size)}, {"cactus", is_cactus(s)},
                             {"block_count", block_decompose(s).size()}};
        if (brute_size) checks["blocks_vs_brute_force"] = size == *brute_size;
        formula_size = size;
    } catch (const TooLargeError& e) {
        report.diagnostics.push_back(std::string("block product skipped: ") + e.what());
    }
    if (!parsed.faces.empty()) {
        auto fs = parse_face_structure(g, parsed.faces);
        BigInt size = plane_class_size(g, fs);
        json plane = {{"faces", fs.face_count()}, {"class_size", big_json(size)}};
        if (brute_size) checks["plane_size_vs_brute_force"] = size == *brute_size;
        formula_size = size;
        try {
            BigInt count = plane_class_count(fs, kDefaultFaceCap);
            plane["classes"] = big_json(count);
            if (brute_count) checks["plane_count_vs_brute_force"] = count == BigInt(*brute_count);
        } catch (const TooLargeError& e) {
            plane["classes"] = nullptr;
            report.diagnostics.push_back(std::string("plane class count skipped: ") + e.what());
        }
        methods["plane"] = plane;
    }

    r["methods"] = methods;
    r["cross_checks"] = checks;
    if (brute_size) {
        r["class_size"] = big_json(*brute_size);
    } else if (formula_size) {
        r["class_size"] = big_json(*formula_size);
    } else {
        r["class_size"] = nullptr;
        report.exit_code = kTooLarge;
        report.diagnostics.push_back("no counting method applies under the current caps");
    }
    for (const auto& [name, ok] : checks.items()) {
        if (!ok.get<bool>()) report.diagnostics.push_back("cross-check failed: " + name);
    }
    return report;
}

inline Report cmd_classify(const std::string& file, const Options& opt) {
    Report report{"classify", {}};
    auto g = load(file, report).graph;
    json& r = report.result;
    auto character = gain_character(g);
    auto negation = equivalent_to_negation(g);
    bool cactus = is_cactus(g.graph());
    r["balanced"] = character == GainCharacter::balanced;
    r["character"] = to_string(character);
    r["negative"] = character == GainCharacter::negative;
    r["imaginary"] = character == GainCharacter::imaginary;
    r["is_cactus"] = cactus;
    r["bipartite"] = is_bipartite(g.graph());
    r["equivalent_to_negation"] = negation.equivalent;
    r["negation_witness"] = negation.witness ? theta_json(*negation.witness) : json(nullptr);
    if (!cactus && (character == GainCharacter::negative || character == GainCharacter::imaginary)) {
        throw Error("negative or imaginary verdict on a non-cactus graph");
    }
    if (g.mixed_mode()) {
        bool spectral = is_balanced_spectrally(g, opt.tol);
        bool agrees = spectral == (character == GainCharacter::balanced);
        r["spectral_balance"] = {{"balanced", spectral}, {"agrees", agrees}, {"tol", opt.tol}};
        if (!agrees) report.diagnostics.push_back("spectral balance test disagrees with the cycle test");
    } else {
        r["spectral_balance"] = nullptr;
    }
    return report;
}

inline Report cmd_iso(const std::string& file_a, const std::string& file_b, const Options& opt) {
    Report report{"iso", {}};
    auto a = load(file_a, report).graph;
    auto b = load(file_b, report).graph;
    if (!(a.group() == b.group())) throw ValidationError("different gain group");
    json& r = report.result;
    r["isomorphic"] = false;
    r["relabeling"] = nullptr;
    r["permutation"] = nullptr;
    r["theta"] = nullptr;
    report.exit_code = kNegative;

    GainGraph target = b;
    if (!a.graph().same_edges(b.graph())) {
        // sigma maps b's vertices onto a's so that both share one edge set.
        auto sigma = graph_isomorphism(b.graph(), a.graph(), opt.aut_cap);
        if (!sigma) {
            report.diagnostics.push_back("underlying graphs are not isomorphic");
            return report;
        }
        target = relabel(b, *sigma);
        r["relabeling"] = permutation_json(*sigma);
    }
    auto iso = switching_isomorphic(a, target, opt.aut_cap);
    if (!iso) return report;
    r["isomorphic"] = true;
    r["permutation"] = permutation_json(iso->permutation);
    r["theta"] = theta_json(iso->theta);
    report.exit_code = kComputed;
    return report;
}

inline Report cmd_product(const std::string& file_a, const std::string& file_b, const Options& opt) {
    Report report{"product", {}};
    auto a = load(file_a, report).graph;
    auto b = load(file_b, report).graph;
    auto p = cartesian_product(a, b);

    // H(a x b) = H(a) (x) I + I (x) H(b)
    auto ha = hermitian_matrix(a), hb = hermitian_matrix(b), hp = hermitian_matrix(p);
    const int na = a.vertex_count(), nb = b.vertex_count();
    bool kronecker = true;
    for (Vertex x1 = 1; x1 <= na; ++x1) {
        for (Vertex y1 = 1; y1 <= nb; ++y1) {
            for (Vertex x2 = 1; x2 <= na; ++x2) {
                for (Vertex y2 = 1; y2 <= nb; ++y2) {
                    std::complex<double> expect = (y1 == y2 ? ha(x1, x2) : 0.0) + (x1 == x2 ? hb(y1, y2) : 0.0);
                    if (std::abs(hp((x1 - 1) * nb + y1, (x2 - 1) * nb + y2) - expect) > 1e-12) kronecker = false;
                }
            }
        }
    }
    std::string text = to_gg_string(p);
    json& r = report.result;
    r["vertices"] = p.vertex_count();
    r["edges"] = p.edge_count();
    r["kronecker_sum_check"] = kronecker;
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) throw ValidationError("cannot write " + opt.output);
        out << text;
        r["output"] = opt.output;
    } else {
        r["output"] = nullptr;
        r["gg"] = text;
    }
    if (!kronecker) report.diagnostics.push_back("product matrix differs from the Kronecker sum");
    return report;
}

inline Report cmd_aut(const std::string& file, const Options& opt) {
    Report report{"aut", {}};
    auto g = load(file, report).graph;
    auto group = gain_automorphisms(g, opt.aut_cap);
    json& r = report.result;
    r["order"] = group.order();
    json gens = json::array();
    for (const auto& f : group.generators()) gens.push_back(permutation_json(f));
    r["generators"] = gens;
    r["underlying_order"] = automorphisms(g.graph(), opt.aut_cap).order();
    if (g.mixed_mode()) {
        auto d = mixed_aut_decomposition(g, opt.aut_cap);
        r["decomposition"] = {{"underlying", d.underlying.order()},
                              {"directed_part", d.directed.order()},
                              {"undirected_part", d.undirected.order()},
                              {"mixed", d.mixed.order()},
                              {"identities_hold", true}};
    } else {
        r["decomposition"] = nullptr;
    }
    return report;
}

/// Runs one subcommand and turns library errors into their exit codes.
template <typename Command>
Report run_guarded(const std::string& name, const std::vector<std::string>& inputs, Command&& command) {
    auto failure = [&](const std::exception& e, int code) {
        Report r{name, inputs};
        r.result = nullptr;
        r.diagnostics.push_back(std::string("error: ") + e.what());
        r.exit_code = code;
        return r;
    };
    try {
        return command();
    } catch (const ValidationError& e) {
        return failure(e, kInvalid);
    } catch (const TooLargeError& e) {
        return failure(e, kTooLarge);
    } catch (const Error& e) {
        return failure(e, kNumeric);
    }
}

}  // namespace gainswitch::cli
