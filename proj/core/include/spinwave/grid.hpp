// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace spinwave {

enum class QuadratureRule {
    GaussLegendre,
    Midpoint,
};

/// Quadrature grid on the unit interval.
///
/// Positions are dimensionless, x = z/L in (0,1), and the weights are
/// normalized so that sum_i w_i f(x_i) approximates (1/L) * integral of f
/// over the sample. In particular the weights sum to 1.
struct SpatialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadratureRule rule = QuadratureRule::GaussLegendre;

    int size() const { return static_cast<int>(nodes.size()); }

    bool operator==(const SpatialGrid&) const = default;
};

/// Build an n-point quadrature grid on (0,1).
///
/// GaussLegendre maps the standard nodes and weights from [-1,1] onto (0,1);
/// Midpoint places nodes at (i+1/2)/n with uniform weights. Throws
/// std::invalid_argument for n_points < 2.
SpatialGrid make_grid(int n_points, QuadratureRule rule = QuadratureRule::GaussLegendre);

/// True if the grid is symmetric about x = 1/2 (both built-in rules are).
bool is_symmetric(const SpatialGrid& grid);

}  // namespace spinwave
