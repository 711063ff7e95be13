// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "prefix_integral.hpp"

namespace spinwave::detail {

std::vector<double> prefix_integral_matrix(const SpatialGrid& grid) {
    const int n = grid.size();
    std::vector<double> q(static_cast<size_t>(n) * n, 0.0);

    if (grid.rule == QuadratureRule::Midpoint) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) q[static_cast<size_t>(i) * n + j] = grid.weights[j];
            q[static_cast<size_t>(i) * n + i] = 0.5 * grid.weights[i];
        }
        return q;
    }

    // Shifted-Legendre values P_m(2x-1) for m = 0..n at all nodes.
    std::vector<double> legendre(static_cast<size_t>(n + 1) * n);
    for (int j = 0; j < n; ++j) {
        const double t = 2.0 * grid.nodes[j] - 1.0;
        legendre[j] = 1.0;
        legendre[n + j] = t;
        for (int m = 1; m < n; ++m)
            legendre[static_cast<size_t>(m + 1) * n + j] =
                ((2.0 * m + 1.0) * t * legendre[static_cast<size_t>(m) * n + j] -
                 m * legendre[static_cast<size_t>(m - 1) * n + j]) /
                (m + 1.0);
    }

    // Antiderivative of P_m(2x-1) from 0 to x_i: x for m = 0, else
    // (P_{m+1} - P_{m-1}) / (2 (2m+1)) evaluated at the node (the boundary
    // term at x = 0 vanishes).
    std::vector<double> anti(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        anti[static_cast<size_t>(i) * n] = grid.nodes[i];
        for (int m = 1; m < n; ++m)
            anti[static_cast<size_t>(i) * n + m] =
                (legendre[static_cast<size_t>(m + 1) * n + i] -
                 legendre[static_cast<size_t>(m - 1) * n + i]) /
                (2.0 * (2.0 * m + 1.0));
    }

    // Q = anti * analysis, analysis[m][j] = (2m+1) w_j P_m(t_j).
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int m = 0; m < n; ++m)
                acc += anti[static_cast<size_t>(i) * n + m] * (2.0 * m + 1.0) *
                       legendre[static_cast<size_t>(m) * n + j];
            q[static_cast<size_t>(i) * n + j] = acc * grid.weights[j];
        }
    }
    return q;
}

}  // namespace spinwave::detail
