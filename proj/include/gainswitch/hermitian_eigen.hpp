#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gainswitch/errors.hpp"
#include "gainswitch/gain_graph.hpp"

namespace gainswitch {

inline constexpr int kJacobiMaxSweeps = 50;

/// Eigenvalues of a dense real symmetric matrix (row-major, n x n) by cyclic Jacobi
/// rotations. Iterates until the off-diagonal Frobenius norm drops to `off_tol`.
/// Result is sorted ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double off_tol,
                                              int max_sweeps = kJacobiMaxSweeps) {
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) s += at(i, j) * at(i, j);
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; off_norm() > off_tol; ++sweep) {
        if (sweep == max_sweeps) {
            throw NumericError("Jacobi eigenvalue iteration did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rutishauser's stable rotation.
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = at(r, p);
                    double arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Eigenvalues of a Hermitian matrix via its real embedding [[Re, -Im], [Im, Re]],
/// whose spectrum is the Hermitian spectrum with every multiplicity doubled.
/// Each returned value is within `tol` of the exact eigenvalue (Weyl bound on the
/// remaining off-diagonal mass), down to a floor of a few ulps of the matrix norm.
inline std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h, double tol) {
    const int n = h.dimension();
    if (n == 0) return {};
    const int m = 2 * n;
    std::vector<double> real(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    auto at = [&](int i, int j) -> double& {
        return real[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(j)];
    };
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            auto z = h(u + 1, v + 1);
            at(u, v) = z.real();
            at(u + n, v + n) = z.real();
            at(u, v + n) = -z.imag();
            at(u + n, v) = z.imag();
        }
    }
    double norm = std::sqrt(2.0) * h.frobenius_norm();
    double floor = 16.0 * std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);
    auto doubled = jacobi_eigenvalues(std::move(real), m, std::max(tol, floor));

    constexpr double kPairing = 1e-8;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double lo = doubled[static_cast<std::size_t>(2 * j)];
        double hi = doubled[static_cast<std::size_t>(2 * j + 1)];
        if (hi - lo > kPairing * std::max(1.0, norm)) {
            throw NumericError("doubled spectrum does not pair up (gap " + std::to_string(hi - lo) +
                               ")");
        }
        out[static_cast<std::size_t>(j)] = 0.5 * (lo + hi);
    }
    return out;
}

}  // namespace gainswitch
