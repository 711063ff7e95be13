// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "spinwave/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spinwave {

AtomicEnsemble::AtomicEnsemble(double d_, double d_bar_, double gamma_eg_, double gamma_es_,
                               double length_, double gamma_0_)
    : d(d_), d_bar(d_bar_), gamma_eg(gamma_eg_), gamma_es(gamma_es_), length(length_),
      gamma_0(gamma_0_) {
    if (!(d > 0.0)) throw std::invalid_argument("AtomicEnsemble: d must be positive");
    if (!(d_bar > 0.0)) throw std::invalid_argument("AtomicEnsemble: d_bar must be positive");
    if (!(gamma_eg > 0.0)) throw std::invalid_argument("AtomicEnsemble: gamma_eg must be positive");
    if (!(gamma_es > 0.0)) throw std::invalid_argument("AtomicEnsemble: gamma_es must be positive");
    if (!(length > 0.0)) throw std::invalid_argument("AtomicEnsemble: length must be positive");
    if (gamma_0 < 0.0) throw std::invalid_argument("AtomicEnsemble: gamma_0 must be non-negative");
}

namespace {

void check_pulse(double omega_max, double duration, const char* who) {
    if (omega_max < 0.0) throw std::invalid_argument(std::string(who) + ": omega_max must be non-negative");
    if (!(duration > 0.0)) throw std::invalid_argument(std::string(who) + ": duration must be positive");
}

}  // namespace

PulseSpec write_rising_exponential(double omega_max, double tau_w) {
    check_pulse(omega_max, tau_w, "write_rising_exponential");
    PulseSpec pulse;
    pulse.kind = PulseKind::WriteRisingExponential;
    pulse.omega_max = omega_max;
    pulse.duration = tau_w;
    pulse.direction = Direction::Forward;
    return pulse;
}

PulseSpec read_square(double omega_r, double tau_r, Direction direction) {
    check_pulse(omega_r, tau_r, "read_square");
    PulseSpec pulse;
    pulse.kind = PulseKind::ReadSquare;
    pulse.omega_max = omega_r;
    pulse.duration = tau_r;
    pulse.direction = direction;
    return pulse;
}

PulseSpec pi_read_pulse(double omega_r, Direction direction) {
    if (!(omega_r > 0.0)) throw std::invalid_argument("pi_read_pulse: omega_r must be positive");
    constexpr double kPi = 3.14159265358979323846;
    return read_square(omega_r, kPi / (2.0 * omega_r), direction);
}

PulseSpec custom_pulse(std::vector<double> times, std::vector<double> omegas,
                       double characteristic_duration, Direction direction) {
    if (times.size() < 2 || times.size() != omegas.size())
        throw std::invalid_argument("custom_pulse: need matching time/omega samples");
    if (characteristic_duration < 0.0)
        throw std::invalid_argument("custom_pulse: characteristic_duration must be non-negative");
    PulseSpec pulse;
    pulse.kind = PulseKind::Custom;
    pulse.duration =
        characteristic_duration > 0.0 ? characteristic_duration : times.back() - times.front();
    pulse.direction = direction;
    for (double w : omegas) pulse.omega_max = std::max(pulse.omega_max, w);
    pulse.sample_times = std::move(times);
    pulse.sample_omegas = std::move(omegas);
    if (!(pulse.duration > 0.0)) throw std::invalid_argument("custom_pulse: times must increase");
    return pulse;
}

namespace units {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

double mhz_to_rad_per_s(double megahertz) { return kTwoPi * 1e6 * megahertz; }

double rad_per_s_to_mhz(double omega) { return omega / (kTwoPi * 1e6); }

}  // namespace units

}  // namespace spinwave
