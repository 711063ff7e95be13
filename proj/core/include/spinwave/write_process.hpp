// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spinwave/ensemble.hpp"
#include "spinwave/grid.hpp"
#include "spinwave/spin_wave.hpp"

namespace spinwave {

/// Coherence profile prepared by a resonant rising-exponential write pulse:
/// |sigma_ge(x)| = theta0_mag * exp(-alpha_L x / 2).
struct WritePreparation {
    double theta0_mag;        // |theta_0| = Omega_W^max tau_W / (1 + gamma_eg tau_W)
    double alpha_L;           // 2 d gamma_eg tau_W / (1 + gamma_eg tau_W)
    double excited_fraction;  // (1/L) integral of <sigma_ee> = theta0^2 (1-e^{-aL})/aL
};

WritePreparation prepare_coherence_exponential(const AtomicEnsemble& ensemble,
                                               const PulseSpec& pulse);

/// Coherence envelope sigma_ge(x, t) for an arbitrary sampled write pulse,
/// by quadrature of the convolution with kernel
/// exp(-gamma_eg (t-t')) J0(2 sqrt(gamma_eg d (t-t') x)). The fast optical
/// phase is dropped. Throws if the sample grid is coarser than duration/20.
std::complex<double> coherence_profile_general(const AtomicEnsemble& ensemble,
                                               const PulseSpec& pulse, double x, double t);

/// Mean number of write photons emitted in a detection window tau_d:
/// n_w = d_bar gamma_es tau_d |theta0|^2 (1 - e^{-aL}) / aL.
double write_photon_number(const AtomicEnsemble& ensemble, const WritePreparation& prep,
                           double tau_d);

/// Write-photon flux (photons/s) at the z = L output face at time t after the
/// pulse. The coherent term carries the collective gain kernel
/// I0[2 sqrt(M(1,x) e^{-aL x} t)]^2 under exp(-2 gamma_es t); the optional
/// noise term adds the Langevin double integral with 2 gamma_es weight.
/// Scaled Bessel forms throughout.
double write_flux(const AtomicEnsemble& ensemble, const WritePreparation& prep, double t,
                  bool include_noise_term = false);

/// Normalized spin wave heralded by a write-photon detection: proportional to
/// exp(-alpha_L x / 2), independent of the pulse amplitude.
SpinWave heralded_spin_wave(const WritePreparation& prep, const SpatialGrid& grid);

/// One validity inequality, reported as the factor by which it is satisfied.
/// For "a << b" conditions margin = b/a, for "a >> b" margin = a/b; the
/// condition counts as satisfied when margin >= strictness.
struct RegimeCondition {
    std::string name;
    std::string expression;
    double left;
    double right;
    double margin;
    bool satisfied;
};

struct RegimeReport {
    std::vector<RegimeCondition> conditions;
    double strictness;

    bool all_satisfied() const;
};

/// Evaluate the protocol's validity inequalities for a write pulse, detection
/// window and read pulse. Margins are reported, never silently enforced.
/// ground_splitting (rad/s) enables the phase-matching check
/// |w_g - w_s| L / c << 1; 0 means degenerate metastable states and the
/// condition is omitted.
RegimeReport validate_regimes(const AtomicEnsemble& ensemble, const PulseSpec& write_pulse,
                              double tau_d, const PulseSpec& read_pulse,
                              double strictness = 10.0, double ground_splitting = 0.0);

}  // namespace spinwave
