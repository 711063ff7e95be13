// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "spinwave/grid.hpp"

namespace spinwave::detail {

// Dense matrix Q with (Q f)_i ~ integral of f from 0 to x_i.
//
// Gauss-Legendre grids get the exact prefix integrator on the nodal
// polynomial space (Legendre analysis + term-by-term antiderivative);
// midpoint grids get the cumulative rule with a half weight on the diagonal.
// Both satisfy the discrete identity W Q + Q^T W = w w^T, which is what makes
// the simulated photon budget close exactly.
std::vector<double> prefix_integral_matrix(const SpatialGrid& grid);

}  // namespace spinwave::detail
