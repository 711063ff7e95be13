// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "spinwave/grid.hpp"

namespace spinwave {

/// Collective |g>-|s> coherence amplitude sampled on a spatial grid.
///
/// Stored-frame convention: amplitude[i] is the spin amplitude at physical
/// position z = x_i * L, the write control field enters the sample at z = 0,
/// and backward retrieval exits at z = 0. Only the slowly varying envelope is
/// stored; fast optical phases cancel in every modulus computed here.
struct SpinWave {
    enum class Orientation { StoredFrame };

    SpatialGrid grid;
    std::vector<std::complex<double>> amplitude;
    Orientation orientation = Orientation::StoredFrame;
};

/// sum_i w_i |S_i|^2
double spin_norm(const SpinWave& spin);

/// Wrap amplitude samples on a grid; normalizes to unit norm by default.
/// Throws std::invalid_argument on size mismatch or an all-zero wave when
/// normalization is requested.
SpinWave spin_wave_from_samples(const SpatialGrid& grid,
                                std::vector<std::complex<double>> amplitude,
                                bool normalize = true);

/// S(x) = 1: the flat wave produced by far off-resonant write fields.
SpinWave flat_spin_wave(const SpatialGrid& grid);

/// S(x) proportional to exp(-alpha_L * x / 2), normalized. alpha_L = 0 gives
/// the flat wave; alpha_L < 0 throws std::invalid_argument.
SpinWave exponential_spin_wave(const SpatialGrid& grid, double alpha_L);

/// Mirror the wave about x = 1/2: the amplitude at node x_i becomes the
/// amplitude previously at node 1-x_i. Requires a symmetric grid.
SpinWave reverse(const SpinWave& spin);

}  // namespace spinwave
