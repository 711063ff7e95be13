// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "spinwave/ensemble.hpp"
#include "spinwave/spin_wave.hpp"

namespace spinwave {

/// Time series of a read simulation. Times are dimensionless (gamma_eg * t),
/// one entry per accepted integrator step. flux is the instantaneous photon
/// flux |E_out|^2 at the exit face; emitted and loss are the running photon
/// count and spontaneous-loss tally; residual is the excitation still stored
/// in P and S. At every step
///   initial = emitted + loss + residual
/// up to integrator error, tracked in max_budget_error.
struct EmissionRecord {
    std::vector<double> time;
    std::vector<double> flux;
    std::vector<double> emitted;
    std::vector<double> loss;
    std::vector<double> residual;
    double total_efficiency = 0.0;
    double residual_excitation = 0.0;
    double max_budget_error = 0.0;
    long steps = 0;
};

/// Method-of-lines integration of the read process.
///
/// The field is adiabatically eliminated along the propagation axis (E at
/// each node is a prefix quadrature of P), and the coupled P, S amplitudes
/// are advanced by an adaptive Dormand-Prince 5(4) step with absolute and
/// relative tolerance tol. The read pulse is square: omega_max for
/// [0, duration], then free decay. Backward reads act on reverse(spin0).
/// Integration stops at t_end (capped at 50) or when the residual excitation
/// drops below 1e-6.
EmissionRecord simulate_read(const AtomicEnsemble& ensemble, const SpinWave& spin0,
                             const PulseSpec& read, double t_end, double tol = 1e-9);

/// Emitted field at the backward exit after an idealized instantaneous
/// pi-pulse (P = i S transfer):
///   E(t~) = sqrt(d) e^{-t~} sum_j w_j J0(2 sqrt(d t~ x_j)) S_j,
/// normalized so that the integral of |E|^2 over dimensionless time is the
/// retrieval efficiency.
std::complex<double> fast_retrieval_field(const AtomicEnsemble& ensemble, const SpinWave& spin0,
                                          double t);

/// Time-integrated |fast_retrieval_field|^2.
double fast_retrieval_efficiency(const AtomicEnsemble& ensemble, const SpinWave& spin0);

/// Emitted field in the weak-drive (adiabatic) readout regime 2 Omega_R <<
/// gamma_eg, with K = Omega_R^2 / gamma_eg:
///   E(t~) = sqrt(d K~) sum_j w_j e^{-(sqrt(K~ t~) - sqrt(d x_j))^2}
///           i0e(2 sqrt(K~ t~ d x_j)) S_j.
/// The total efficiency is independent of Omega_R (K only rescales time).
std::complex<double> slow_retrieval_field(const AtomicEnsemble& ensemble, const SpinWave& spin0,
                                          double omega_r, double t);

/// Time-integrated |slow_retrieval_field|^2.
double slow_retrieval_efficiency(const AtomicEnsemble& ensemble, const SpinWave& spin0,
                                 double omega_r);

/// Worst-case fractional amplitude loss of the spin-to-polarization transfer
/// by a square pi-pulse: 1 - exp(-gamma_eg (1+d) pi / (4 Omega_R)).
double pi_pulse_transfer_loss(const AtomicEnsemble& ensemble, double omega_r);

}  // namespace spinwave
