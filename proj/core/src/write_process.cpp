// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "spinwave/write_process.hpp"

#include <cmath>
#include <stdexcept>

#include "spinwave/bessel.hpp"

namespace spinwave {

namespace {

// (1 - e^{-u}) / u, continuous through u = 0.
double expm1_ratio(double u) {
    if (u == 0.0) return 1.0;
    return -std::expm1(-u) / u;
}

const SpatialGrid& flux_grid() {
    static const SpatialGrid grid = make_grid(256, QuadratureRule::GaussLegendre);
    return grid;
}

// Collective gain rate M(x1, x2) = (d_bar gamma_es |theta0|^2 / aL)
// * (1 - e^{-aL (x1-x2)}), in 1/s; the aL -> 0 limit is handled by the
// series form of the bracket.
double gain_rate(const AtomicEnsemble& ensemble, const WritePreparation& prep, double x1,
                 double x2) {
    const double base = ensemble.d_bar * ensemble.gamma_es * prep.theta0_mag * prep.theta0_mag;
    return base * (x1 - x2) * expm1_ratio(prep.alpha_L * (x1 - x2));
}

// Spatial integral of the squared gain kernel against the excitation profile:
// integral over x of I0[2 sqrt(M(1,x) e^{-aL x} dt)]^2 e^{-aL x} dx,
// evaluated in scaled-Bessel form.
double emission_integral(const AtomicEnsemble& ensemble, const WritePreparation& prep, double dt) {
    const SpatialGrid& grid = flux_grid();
    long double acc = 0.0L;
    for (int j = 0; j < grid.size(); ++j) {
        const double x = grid.nodes[j];
        const double damp = prep.alpha_L * x;
        const double arg = 2.0 * std::sqrt(gain_rate(ensemble, prep, 1.0, x) * std::exp(-damp) * dt);
        const double h1_scaled = bessel_i_scaled(0, arg);
        // I0(arg)^2 e^{-aL x} = e^{2 arg - aL x} i0e(arg)^2
        acc += grid.weights[j] * std::exp(2.0 * arg - damp) * h1_scaled * h1_scaled;
    }
    return static_cast<double>(acc);
}

}  // namespace

WritePreparation prepare_coherence_exponential(const AtomicEnsemble& ensemble,
                                               const PulseSpec& pulse) {
    if (pulse.kind != PulseKind::WriteRisingExponential)
        throw std::invalid_argument("prepare_coherence_exponential: expected a rising exponential write pulse");
    const double gamma_tau = ensemble.gamma_eg * pulse.duration;
    WritePreparation prep;
    prep.theta0_mag = pulse.omega_max * pulse.duration / (1.0 + gamma_tau);
    prep.alpha_L = 2.0 * ensemble.d * gamma_tau / (1.0 + gamma_tau);
    prep.excited_fraction = prep.theta0_mag * prep.theta0_mag * expm1_ratio(prep.alpha_L);
    return prep;
}

std::complex<double> coherence_profile_general(const AtomicEnsemble& ensemble,
                                               const PulseSpec& pulse, double x, double t) {
    if (pulse.kind != PulseKind::Custom)
        throw std::invalid_argument("coherence_profile_general: expected a sampled (Custom) pulse");
    const auto& ts = pulse.sample_times;
    const auto& om = pulse.sample_omegas;
    if (ts.size() < 2 || ts.size() != om.size())
        throw std::invalid_argument("coherence_profile_general: need matching time/omega samples");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("coherence_profile_general: x must lie in [0,1]");

    double max_step = 0.0;
    for (size_t i = 1; i < ts.size(); ++i) {
        const double step = ts[i] - ts[i - 1];
        if (step <= 0.0)
            throw std::invalid_argument("coherence_profile_general: sample times must increase");
        if (step > max_step) max_step = step;
    }
    if (max_step > pulse.duration / 20.0)
        throw std::runtime_error("coherence_profile_general: time grid too coarse (step > duration/20)");

    // sigma_ge(x, t) = i * integral over t' <= t of
    //   e^{-gamma (t-t')} J0(2 sqrt(gamma d (t-t') x)) Omega(t') dt'
    const double gamma = ensemble.gamma_eg;
    auto integrand = [&](double tp, double omega_val) {
        const double dt = t - tp;
        return std::exp(-gamma * dt) * bessel_j(0, 2.0 * std::sqrt(gamma * ensemble.d * dt * x)) *
               omega_val;
    };

    // Composite Simpson over the sample grid up to min(t, last sample); a
    // trailing partial interval is handled by the trapezoid rule with the
    // pulse interpolated linearly.
    size_t last = 0;
    while (last + 1 < ts.size() && ts[last + 1] <= t) ++last;
    if (ts[0] > t) return {0.0, 0.0};

    long double integral = 0.0L;
    size_t i = 0;
    // Simpson needs uniform pairs; fall back to trapezoid on ragged spacing.
    while (i + 2 <= last) {
        const double h1 = ts[i + 1] - ts[i];
        const double h2 = ts[i + 2] - ts[i + 1];
        if (std::abs(h1 - h2) <= 1e-9 * h1) {
            integral += (h1 / 3.0) * (integrand(ts[i], om[i]) + 4.0 * integrand(ts[i + 1], om[i + 1]) +
                                      integrand(ts[i + 2], om[i + 2]));
            i += 2;
        } else {
            integral += 0.5 * h1 * (integrand(ts[i], om[i]) + integrand(ts[i + 1], om[i + 1]));
            i += 1;
        }
    }
    if (i + 1 <= last) {
        const double h = ts[i + 1] - ts[i];
        integral += 0.5 * h * (integrand(ts[i], om[i]) + integrand(ts[i + 1], om[i + 1]));
    }
    if (last + 1 < ts.size() && t > ts[last]) {
        const double h = t - ts[last];
        const double frac = h / (ts[last + 1] - ts[last]);
        const double om_t = om[last] + frac * (om[last + 1] - om[last]);
        integral += 0.5 * h * (integrand(ts[last], om[last]) + integrand(t, om_t));
    }
    return {0.0, static_cast<double>(integral)};
}

double write_photon_number(const AtomicEnsemble& ensemble, const WritePreparation& prep,
                           double tau_d) {
    if (!(tau_d > 0.0)) throw std::invalid_argument("write_photon_number: tau_d must be positive");
    return ensemble.d_bar * ensemble.gamma_es * tau_d * prep.theta0_mag * prep.theta0_mag *
           expm1_ratio(prep.alpha_L);
}

double write_flux(const AtomicEnsemble& ensemble, const WritePreparation& prep, double t,
                  bool include_noise_term) {
    if (t < 0.0) throw std::invalid_argument("write_flux: t must be non-negative");
    const double prefactor = ensemble.d_bar * ensemble.gamma_es * prep.theta0_mag * prep.theta0_mag;
    double flux = prefactor * std::exp(-2.0 * ensemble.gamma_es * t) *
                  emission_integral(ensemble, prep, t);
    if (include_noise_term && t > 0.0) {
        // Langevin contribution: 2 gamma_es * integral over emission delay.
        static const SpatialGrid tgrid = make_grid(64, QuadratureRule::GaussLegendre);
        long double acc = 0.0L;
        for (int k = 0; k < tgrid.size(); ++k) {
            const double dt = t * tgrid.nodes[k];
            acc += tgrid.weights[k] * std::exp(-2.0 * ensemble.gamma_es * dt) *
                   emission_integral(ensemble, prep, dt);
        }
        flux += prefactor * 2.0 * ensemble.gamma_es * t * static_cast<double>(acc);
    }
    return flux;
}

SpinWave heralded_spin_wave(const WritePreparation& prep, const SpatialGrid& grid) {
    return exponential_spin_wave(grid, prep.alpha_L);
}

bool RegimeReport::all_satisfied() const {
    for (const auto& c : conditions)
        if (!c.satisfied) return false;
    return true;
}

RegimeReport validate_regimes(const AtomicEnsemble& ensemble, const PulseSpec& write_pulse,
                              double tau_d, const PulseSpec& read_pulse, double strictness,
                              double ground_splitting) {
    if (!(strictness > 0.0)) throw std::invalid_argument("validate_regimes: strictness must be positive");
    const WritePreparation prep = prepare_coherence_exponential(ensemble, write_pulse);
    RegimeReport report;
    report.strictness = strictness;

    auto much_less = [&](std::string name, std::string expr, double left, double right) {
        const double margin = right / left;
        report.conditions.push_back(
            {std::move(name), std::move(expr), left, right, margin, margin >= strictness});
    };
    auto much_greater = [&](std::string name, std::string expr, double left, double right) {
        const double margin = left / right;
        report.conditions.push_back(
            {std::move(name), std::move(expr), left, right, margin, margin >= strictness});
    };

    much_less("weak_write", "omega_w_max * tau_w << 1",
              write_pulse.omega_max * write_pulse.duration, 1.0);
    much_less("short_write", "gamma_eg * tau_w << 1", ensemble.gamma_eg * write_pulse.duration,
              1.0);
    much_less("short_detection_es", "2 gamma_es * tau_d << 1", 2.0 * ensemble.gamma_es * tau_d,
              1.0);
    much_less("short_detection_eg", "2 gamma_eg * tau_d << 1", 2.0 * ensemble.gamma_eg * tau_d,
              1.0);
    much_less("rare_write_photon", "n_w << 1", write_photon_number(ensemble, prep, tau_d), 1.0);
    much_greater("strong_read", "2 omega_r >> gamma_eg (1 + d)", 2.0 * read_pulse.omega_max,
                 ensemble.gamma_eg * (1.0 + ensemble.d));
    much_less("fast_read", "gamma_eg (1 + d) tau_r << 2",
              ensemble.gamma_eg * (1.0 + ensemble.d) * read_pulse.duration, 2.0);
    if (ground_splitting > 0.0) {
        constexpr double kSpeedOfLight = 299792458.0;
        much_less("phase_matching", "|w_g - w_s| L / c << 1",
                  ground_splitting * ensemble.length / kSpeedOfLight, 1.0);
    }
    return report;
}

}  // namespace spinwave
