// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace spinwave {

/// Lambda-type atomic ensemble parameters.
///
/// d and d_bar are the resonant optical depths of the |e>-|g> and |e>-|s>
/// transitions (intensity transmits as exp(-2d)); decay rates are in rad/s.
/// All kernel and dynamics math is dimensionless in x = z/L and
/// t~ = gamma_eg * t; the sample length enters only unit conversions and the
/// phase-matching check.
struct AtomicEnsemble {
    double d;
    double d_bar;
    double gamma_eg;
    double gamma_es;
    double length;
    double gamma_0;

    AtomicEnsemble(double d_, double d_bar_, double gamma_eg_, double gamma_es_,
                   double length_, double gamma_0_ = 0.0);
};

enum class Direction { Forward, Backward };

enum class PulseKind {
    WriteRisingExponential,  // Omega(t) = omega_max * exp(t / duration), t <= 0
    ReadSquare,              // Omega(t) = omega_max for 0 <= t <= duration
    Custom,                  // sampled Omega(t)
};

/// Control-field description. omega_max in rad/s, duration in seconds,
/// detuning in rad/s (0 everywhere in the resonant protocol).
struct PulseSpec {
    PulseKind kind = PulseKind::ReadSquare;
    double omega_max = 0.0;
    double duration = 0.0;
    double detuning = 0.0;
    Direction direction = Direction::Backward;

    // Custom pulses only: samples of Omega(0, t) on an increasing time grid.
    std::vector<double> sample_times;
    std::vector<double> sample_omegas;
};

PulseSpec write_rising_exponential(double omega_max, double tau_w);
PulseSpec read_square(double omega_r, double tau_r, Direction direction = Direction::Backward);
/// Square read pulse with 2 * omega_r * tau_r = pi.
PulseSpec pi_read_pulse(double omega_r, Direction direction = Direction::Backward);
/// characteristic_duration is the pulse's own timescale (used by resolution
/// checks); 0 means "use the sampled span".
PulseSpec custom_pulse(std::vector<double> times, std::vector<double> omegas,
                       double characteristic_duration = 0.0,
                       Direction direction = Direction::Forward);

namespace units {

/// Linear frequency in MHz -> angular frequency in rad/s.
double mhz_to_rad_per_s(double megahertz);

/// Angular frequency in rad/s -> linear frequency in MHz.
double rad_per_s_to_mhz(double omega);

}  // namespace units

}  // namespace spinwave
