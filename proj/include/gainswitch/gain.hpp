#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <string>

#include "gainswitch/errors.hpp"

namespace gainswitch {

/// Cyclic group of the k-th roots of unity. Element t stands for exp(2*pi*i*t/k).
class GainGroup {
public:
    explicit GainGroup(int order = 4) : order_(order) {
        if (order < 1) {
            throw ValidationError("gain group order must be positive, got " +
                                  std::to_string(order));
        }
    }

    int order() const noexcept { return order_; }

    bool has_negation() const noexcept { return order_ % 2 == 0; }
    bool has_imaginary_unit() const noexcept { return order_ % 4 == 0; }

    /// Exponent of -1; only meaningful when has_negation().
    int negation_exponent() const noexcept { return order_ / 2; }
    /// Exponent of i; only meaningful when has_imaginary_unit().
    int imaginary_exponent() const noexcept { return order_ / 4; }

    /// Exact on quarter turns, cos/sin elsewhere.
    std::complex<double> value(int exponent) const {
        int t = ((exponent % order_) + order_) % order_;
        if ((4 * t) % order_ == 0) {
            switch ((4 * t) / order_) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        double angle = 2.0 * std::numbers::pi * t / order_;
        return {std::cos(angle), std::sin(angle)};
    }

    double real_part(int exponent) const { return value(exponent).real(); }

    friend bool operator==(const GainGroup&, const GainGroup&) = default;

private:
    int order_;
};

/// Element of a GainGroup, stored as its exponent reduced mod k.
class Gain {
public:
    Gain() = default;
    Gain(int exponent, GainGroup group) : order_(group.order()) {
        exp_ = ((exponent % order_) + order_) % order_;
    }

    static Gain identity(GainGroup group) { return Gain(0, group); }

    int exponent() const noexcept { return exp_; }
    GainGroup group() const { return GainGroup(order_); }
    int order() const noexcept { return order_; }

    bool is_identity() const noexcept { return exp_ == 0; }

    std::complex<double> value() const { return group().value(exp_); }
    double real() const { return group().real_part(exp_); }

    Gain conj() const { return Gain(order_ - exp_, group()); }
    Gain inverse() const { return conj(); }

    friend bool operator==(const Gain&, const Gain&) = default;
    friend auto operator<=>(const Gain&, const Gain&) = default;

private:
    int exp_ = 0;
    int order_ = 4;
};

inline Gain gain_mul(const Gain& a, const Gain& b) {
    if (a.order() != b.order()) {
        throw ValidationError("gain group mismatch: order " + std::to_string(a.order()) +
                              " vs " + std::to_string(b.order()));
    }
    return Gain(a.exponent() + b.exponent(), a.group());
}

inline Gain gain_conj(const Gain& a) { return a.conj(); }

inline Gain operator*(const Gain& a, const Gain& b) { return gain_mul(a, b); }
inline Gain& operator*=(Gain& a, const Gain& b) { return a = gain_mul(a, b); }

/// "1", "i", "-1", "-i" for the order-4 group, "w^t" otherwise.
inline std::string to_string(const Gain& g) {
    if (g.order() == 4) {
        static constexpr const char* names[] = {"1", "i", "-1", "-i"};
        return names[g.exponent()];
    }
    if (g.order() == 2) return g.exponent() == 0 ? "1" : "-1";
    if (g.exponent() == 0) return "1";
    return "w^" + std::to_string(g.exponent());
}

inline std::ostream& operator<<(std::ostream& os, const Gain& g) { return os << to_string(g); }

namespace mixed {

inline const GainGroup group{4};
inline Gain one() { return Gain(0, group); }
inline Gain i() { return Gain(1, group); }
inline Gain minus_one() { return Gain(2, group); }
inline Gain minus_i() { return Gain(3, group); }

/// Gains a mixed graph may carry on an edge: undirected, forward arc, backward arc.
inline bool is_edge_gain(const Gain& g) { return g.order() == 4 && g.exponent() != 2; }

}  // namespace mixed

}  // namespace gainswitch
