// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "spinwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace spinwave {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n,
// accumulated in long double, then mapped to (0,1) with weights halved.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    long double wsum = 0.0L;
    for (int i = 0; i < m; ++i) {
        long double z = cosl(kPi * (i + 0.75L) / (n + 0.5L));
        long double pp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p1 = 1.0L, p2 = 0.0L;
            for (int j = 1; j <= n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L) * z * p2 - (j - 1.0L) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0L);
            const long double dz = p1 / pp;
            z -= dz;
            if (fabsl(dz) < 1e-19L) break;
        }
        // z in (0,1]; node pair (1-z)/2 and (1+z)/2 with equal weights.
        const long double w = 1.0L / ((1.0L - z * z) * pp * pp);
        nodes[i] = static_cast<double>((1.0L - z) / 2.0L);
        nodes[n - 1 - i] = static_cast<double>((1.0L + z) / 2.0L);
        weights[i] = static_cast<double>(w);
        weights[n - 1 - i] = weights[i];
        wsum += (i == n - 1 - i) ? w : 2.0L * w;
    }
    // Snap the sum of weights to exactly 1.
    for (double& w : weights) w = static_cast<double>(w / wsum);
}

}  // namespace

SpatialGrid make_grid(int n_points, QuadratureRule rule) {
    if (n_points < 2) throw std::invalid_argument("make_grid: n_points must be at least 2");
    SpatialGrid grid;
    grid.rule = rule;
    if (rule == QuadratureRule::Midpoint) {
        grid.nodes.resize(n_points);
        grid.weights.assign(n_points, 1.0 / n_points);
        for (int i = 0; i < n_points; ++i) grid.nodes[i] = (i + 0.5) / n_points;
    } else {
        gauss_legendre(n_points, grid.nodes, grid.weights);
    }
    return grid;
}

bool is_symmetric(const SpatialGrid& grid) {
    const int n = grid.size();
    for (int i = 0; i < n / 2 + 1; ++i) {
        const int j = n - 1 - i;
        if (std::abs(grid.nodes[i] + grid.nodes[j] - 1.0) > 1e-12) return false;
        if (std::abs(grid.weights[i] - grid.weights[j]) > 1e-15) return false;
    }
    return true;
}

}  // namespace spinwave
