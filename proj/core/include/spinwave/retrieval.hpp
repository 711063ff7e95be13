// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "spinwave/ensemble.hpp"
#include "spinwave/grid.hpp"
#include "spinwave/spin_wave.hpp"

namespace spinwave {

/// Discretized complete-retrieval kernel
///   k_r(x1, x2) = (d/2) exp(-d (x1+x2)/2) I0(d sqrt(x1 x2))
/// on a quadrature grid. The matrix is symmetric with strictly positive
/// entries; the weighted operator W^{1/2} K W^{1/2} has its spectrum in
/// (0, 1) and its top eigenvalue is the optimal retrieval efficiency.
struct RetrievalKernel {
    double d = 0.0;
    SpatialGrid grid;
    std::vector<double> matrix;  // row-major, size n*n

    double operator()(int i, int j) const { return matrix[static_cast<size_t>(i) * grid.nodes.size() + j]; }
};

/// Kernel value at a point, evaluated in scaled-Bessel form so it stays
/// finite at large optical depth. Exactly symmetric under swap of x1, x2.
double kernel_value(double d, double x1, double x2);

RetrievalKernel build_kernel(double d, const SpatialGrid& grid);

/// Complete-retrieval efficiency of a normalized spin wave.
///
/// Backward retrieval (read control entering z = L, emission exiting z = 0,
/// the geometry of the counterpropagating protocol) weighs amplitude near
/// x = 0; forward retrieval of S equals backward retrieval of reverse(S).
/// Throws on grid mismatch or an unnormalized wave.
double efficiency(const RetrievalKernel& kernel, const SpinWave& spin, Direction direction);

struct OptimalSpin {
    double eta_star;
    SpinWave spin;
};

/// Top eigenpair of the weighted kernel by power iteration (relative
/// tolerance 1e-12, iteration cap 100000). The returned wave is normalized,
/// non-negative, and satisfies efficiency(kernel, spin, Backward) = eta_star.
OptimalSpin optimal_spin_wave(double d, const SpatialGrid& grid);

/// Closed form for the flat-wave bound: 1 - exp(-d) (I0(d) + I1(d)).
double flat_efficiency_analytic(double d);

/// Near-optimal write pulse duration, returned as gamma_eg * tau_W = 1/(1 + d/2).
double tau_w_approx(double d);

/// Spatial decay constant alpha*L of the coherence prepared by a rising
/// exponential write pulse of dimensionless duration gamma_tau = gamma_eg * tau_W.
double alpha_from_write(double d, double gamma_tau);

struct ExponentialFit {
    double alpha_L;
    double eta;
};

/// Maximize backward efficiency over exponential waves exp(-alpha_L x / 2),
/// alpha_L in [0, 4d], by golden-section search to |delta eta| < 1e-10.
ExponentialFit best_fit_exponential(double d, const SpatialGrid& grid);

/// One row of the efficiency comparison at optical depth d: the resonant
/// exponential wave from tau_w_approx read backward (eta_res) and forward
/// (eta_fwd), the flat-wave bound (eta_offres), and the optimum (eta_star).
struct EfficiencyReport {
    double d;
    double eta_star;
    double eta_res;
    double eta_fwd;
    double eta_offres;
    double alpha_l_used;
    double tau_w_used;  // gamma_eg * tau_W
};

EfficiencyReport efficiency_report(double d, const SpatialGrid& grid);

}  // namespace spinwave
