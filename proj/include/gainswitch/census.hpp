#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gainswitch/blocks.hpp"
#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"
#include "gainswitch/switching.hpp"

namespace gainswitch {

/// Class sizes reach 3^m, past 64 bits from m = 41 on.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(unsigned base, unsigned exponent) {
    return boost::multiprecision::pow(BigInt(base), exponent);
}

/// Default edge cap for the 3^m brute-force census.
inline constexpr int kDefaultCensusCap = 16;

/// Slot of a gain of the order-4 group in (alpha_1, alpha_-1, alpha_i, alpha_-i).
inline int alpha_slot(const Gain& x) {
    if (x.order() != 4) throw ValidationError("alpha vectors are indexed by gains of order-4 group");
    static constexpr int slot[] = {0, 2, 1, 3};
    return slot[x.exponent()];
}

/// alpha(n): number of words in {1, i, -i}^n with product 1, -1, i, -i.
struct ClassCountVector {
    int n = 0;
    std::array<BigInt, 4> alpha{1, 0, 0, 0};

    const BigInt& operator[](const Gain& x) const { return alpha[static_cast<std::size_t>(alpha_slot(x))]; }
    BigInt sum() const { return alpha[0] + alpha[1] + alpha[2] + alpha[3]; }

    friend bool operator==(const ClassCountVector&, const ClassCountVector&) = default;
};

/// alpha(0) = (1,0,0,0) and alpha(n) = L alpha(n-1) with L = [[I2, J2], [J2, I2]].
inline ClassCountVector alpha_vector(int n) {
    if (n < 0) throw ValidationError("alpha vector needs n >= 0");
    ClassCountVector v;
    for (int step = 1; step <= n; ++step) {
        const auto& a = v.alpha;
        v.alpha = {a[0] + a[2] + a[3], a[1] + a[2] + a[3], a[0] + a[1] + a[2], a[0] + a[1] + a[3]};
    }
    v.n = n;
    return v;
}

/// First column of L^n: ((3^n+1)/4, (3^n-3)/4, (3^n+1)/4, (3^n+1)/4) for odd n and
/// ((3^n+3)/4, (3^n-1)/4, (3^n-1)/4, (3^n-1)/4) for even n.
inline ClassCountVector alpha_closed_form(int n) {
    if (n < 0) throw ValidationError("alpha vector needs n >= 0");
    BigInt p = big_pow(3, static_cast<unsigned>(n));
    ClassCountVector v;
    v.n = n;
    if (n % 2 == 1) {
        BigInt odd = (p + 1) / 4;
        v.alpha = {odd, (p - 3) / 4, odd, odd};
    } else {
        BigInt even = (p - 1) / 4;
        v.alpha = {(p + 3) / 4, even, even, even};
    }
    return v;
}

/// |[C_n^phi]| for a mixed n-cycle whose cycle gain is zeta.
inline BigInt cycle_class_size(int n, const Gain& zeta) {
    if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
    if (zeta.order() != 4) throw ValidationError("cycle class sizes are defined for mixed graphs");
    BigInt p = big_pow(3, static_cast<unsigned>(n));
    bool odd = n % 2 == 1;
    int shift = 0;
    if (zeta.exponent() == 0) shift = odd ? 1 : 3;
    else if (zeta.exponent() == 2) shift = odd ? -3 : -1;
    else shift = odd ? 1 : -1;
    return BigInt((p + shift) / 4);
}

struct ClassCountBounds {
    BigInt lower;       // 3^{m-n+c}
    BigInt upper;       // 4^{m-n+c}
    bool upper_tight;   // every basis cycle has two edges on no other basis cycle
};

inline ClassCountBounds class_count_bounds(const SimpleGraph& g) {
    auto basis = fundamental_cycles(g, spanning_forest(g));
    std::vector<int> usage(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& c : basis.cycles) {
        for (const auto& e : c.edges) ++usage[static_cast<std::size_t>(e.edge)];
    }
    bool tight = true;
    for (const auto& c : basis.cycles) {
        auto privates = std::count_if(c.edges.begin(), c.edges.end(), [&](const CycleEdge& e) {
            return usage[static_cast<std::size_t>(e.edge)] == 1;
        });
        if (privates < 2) tight = false;
    }
    auto dim = static_cast<unsigned>(g.cyclomatic_number());
    return {big_pow(3, dim), big_pow(4, dim), tight};
}

/// 3^{#bridges}.
inline BigInt cut_edge_lower_bound(const SimpleGraph& g) {
    return big_pow(3, static_cast<unsigned>(bridges(g).size()));
}

struct CensusClass {
    CycleGainProfile profile;         // gains on the fundamental cycles, by chord id
    BigInt size;
    std::vector<Gain> representative; // canonical edge gains of one member
};

/// Partition of the 3^m mixed graphs on a fixed underlying graph into switching classes.
struct Census {
    FundamentalCycleBasis basis;
    std::vector<CensusClass> classes;  // sorted by profile
    BigInt total;

    std::size_t class_count() const noexcept { return classes.size(); }

    const CensusClass* find(const CycleGainProfile& profile) const {
        auto it = std::lower_bound(classes.begin(), classes.end(), profile,
                                   [](const CensusClass& c, const CycleGainProfile& p) {
                                       return c.profile < p;
                                   });
        if (it == classes.end() || it->profile != profile) return nullptr;
        return &*it;
    }
};

namespace detail {

inline constexpr int kMixedExponent[3] = {0, 1, 3};

struct CensusTally {
    std::uint64_t count = 0;
    std::uint64_t first = UINT64_MAX;
};

/// Counts mixed orientations per basis-gain key over the index range [lo, hi).
/// Orientation index digits (base 3, edge 0 least significant) select {1, i, -i}.
class CensusKernel {
public:
    CensusKernel(const SimpleGraph& g, const FundamentalCycleBasis& basis)
        : m_(g.edge_count()), cycles_(static_cast<int>(basis.size())),
          incidence_(static_cast<std::size_t>(g.edge_count())) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
            for (const auto& e : basis.cycles[c].edges) {
                incidence_[static_cast<std::size_t>(e.edge)].push_back(
                    {static_cast<int>(c), e.forward ? 1 : 3});
            }
        }
    }

    bool dense() const { return cycles_ <= 10; }
    std::size_t dense_size() const { return std::size_t{1} << (2 * cycles_); }

    template <typename Record>
    void run(std::uint64_t lo, std::uint64_t hi, Record&& record) const {
        if (lo >= hi) return;
        std::vector<int> digit(static_cast<std::size_t>(m_), 0);
        std::vector<int> exps(static_cast<std::size_t>(cycles_), 0);
        std::uint64_t rest = lo;
        for (int e = 0; e < m_; ++e) {
            digit[static_cast<std::size_t>(e)] = static_cast<int>(rest % 3);
            rest /= 3;
            apply(e, kMixedExponent[digit[static_cast<std::size_t>(e)]], exps);
        }
        std::uint64_t key = 0;
        for (int c = 0; c < cycles_; ++c) key |= static_cast<std::uint64_t>(exps[static_cast<std::size_t>(c)]) << (2 * c);

        for (std::uint64_t index = lo;;) {
            record(key, index);
            if (++index == hi) break;
            for (int e = 0;; ++e) {
                int& d = digit[static_cast<std::size_t>(e)];
                int from = kMixedExponent[d];
                d = d == 2 ? 0 : d + 1;
                int delta = kMixedExponent[d] - from;
                for (const auto& [c, sign] : incidence_[static_cast<std::size_t>(e)]) {
                    int& x = exps[static_cast<std::size_t>(c)];
                    int next = (x + sign * delta) & 3;
                    key += (static_cast<std::uint64_t>(next) - static_cast<std::uint64_t>(x)) << (2 * c);
                    x = next;
                }
                if (d != 0) break;
            }
        }
    }

private:
    void apply(int e, int exponent, std::vector<int>& exps) const {
        for (const auto& [c, sign] : incidence_[static_cast<std::size_t>(e)]) {
            int& x = exps[static_cast<std::size_t>(c)];
            x = (x + sign * exponent) & 3;
        }
    }

    struct Incidence {
        int cycle;
        int sign;  // 1 forward, 3 (== -1 mod 4) backward
    };

    int m_;
    int cycles_;
    std::vector<std::vector<Incidence>> incidence_;
};

inline std::vector<Gain> decode_orientation(std::uint64_t index, int m) {
    std::vector<Gain> gains;
    gains.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        gains.push_back(Gain(kMixedExponent[index % 3], mixed::group));
        index /= 3;
    }
    return gains;
}

}  // namespace detail

/// Enumerates all 3^m mixed orientations of g and groups them by their gains on the
/// fundamental cycles of the breadth-first forest. `workers` = 0 picks the hardware
/// concurrency; each worker takes a contiguous index range.
inline Census brute_force_census(const SimpleGraph& g, int cap = kDefaultCensusCap,
                                 unsigned workers = 0) {
    const int m = g.edge_count();
    if (m > cap) throw TooLargeError("brute-force census", m, cap);
    if (m > 40) throw TooLargeError("brute-force census", m, 40);

    Census census;
    census.basis = fundamental_cycles(g, spanning_forest(g));
    if (census.basis.size() > 31) {
        throw TooLargeError("brute-force census (cycle space)", static_cast<long long>(census.basis.size()), 31);
    }
    detail::CensusKernel kernel(g, census.basis);
    std::uint64_t total = 1;
    for (int e = 0; e < m; ++e) total *= 3;

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 4096)));

    using Tally = detail::CensusTally;
    std::unordered_map<std::uint64_t, Tally> merged;
    auto range = [&](unsigned w) { return total * w / workers; };

    if (kernel.dense()) {
        std::vector<std::vector<Tally>> parts(workers, std::vector<Tally>(kernel.dense_size()));
        auto job = [&](unsigned w) {
            auto& tally = parts[w];
            kernel.run(range(w), range(w + 1), [&](std::uint64_t key, std::uint64_t index) {
                auto& t = tally[key];
                if (t.count++ == 0) t.first = index;
            });
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(job, w);
        job(0);
        for (auto& t : pool) t.join();
        for (std::size_t key = 0; key < kernel.dense_size(); ++key) {
            for (const auto& part : parts) {
                if (part[key].count == 0) continue;
                auto& t = merged[key];
                t.count += part[key].count;
                t.first = std::min(t.first, part[key].first);
            }
        }
    } else {
        std::vector<std::unordered_map<std::uint64_t, Tally>> parts(workers);
        auto job = [&](unsigned w) {
            auto& tally = parts[w];
            kernel.run(range(w), range(w + 1), [&](std::uint64_t key, std::uint64_t index) {
                auto& t = tally[key];
                if (t.count++ == 0) t.first = index;
            });
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(job, w);
        job(0);
        for (auto& t : pool) t.join();
        for (const auto& part : parts) {
            for (const auto& [key, tally] : part) {
                auto& t = merged[key];
                t.count += tally.count;
                t.first = std::min(t.first, tally.first);
            }
        }
    }

    for (const auto& [key, tally] : merged) {
        CensusClass cls;
        for (std::size_t c = 0; c < census.basis.size(); ++c) {
            cls.profile.push_back(Gain(static_cast<int>((key >> (2 * c)) & 3), mixed::group));
        }
        cls.size = BigInt(tally.count);
        cls.representative = detail::decode_orientation(tally.first, m);
        census.classes.push_back(std::move(cls));
    }
    std::sort(census.classes.begin(), census.classes.end(),
              [](const CensusClass& a, const CensusClass& b) { return a.profile < b.profile; });
    census.total = BigInt(total);
    return census;
}

/// Number of mixed graphs on g's underlying graph switching equivalent to g.
inline BigInt brute_force_class_size(const GainGraph& g, int cap = kDefaultCensusCap) {
    if (g.group().order() != 4) throw ValidationError("class sizes are counted among mixed graphs");
    auto census = brute_force_census(g.graph(), cap);
    const CensusClass* cls = census.find(cycle_gain_profile(g, census.basis));
    return cls ? cls->size : BigInt(0);
}

/// The mixed graph on g's underlying graph with the given canonical edge gains.
inline GainGraph census_member(const SimpleGraph& g, const std::vector<Gain>& gains) {
    return GainGraph(g, mixed::group, gains, true);
}

/// |[g]| as the product of its block class sizes: 3 per bridge, alpha_x(l) per
/// l-cycle with gain x, brute force for any other block.
inline BigInt class_size_by_blocks(const GainGraph& g, int cap = kDefaultCensusCap) {
    if (g.group().order() != 4) throw ValidationError("class sizes are counted among mixed graphs");
    BigInt size = 1;
    for (const auto& block : block_decompose(g.graph())) {
        if (block.is_edge()) {
            size *= 3;
            continue;
        }
        std::vector<Gain> gains;
        for (EdgeId local = 0; local < block.graph.edge_count(); ++local) {
            gains.push_back(g.canonical_gain(block.edge_map[static_cast<std::size_t>(local)]));
        }
        GainGraph local_graph(block.graph, g.group(), std::move(gains), false);
        if (block.is_cycle()) {
            auto profile = cycle_gain_profile(local_graph);
            size *= alpha_vector(block.graph.edge_count())[profile.front()];
        } else {
            size *= brute_force_class_size(local_graph, cap);
        }
    }
    return size;
}

}  // namespace gainswitch
