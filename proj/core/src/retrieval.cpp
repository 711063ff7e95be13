// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "spinwave/retrieval.hpp"

#include <cmath>
#include <stdexcept>

#include "spinwave/bessel.hpp"

namespace spinwave {

namespace {

constexpr int kPowerIterationCap = 100000;
constexpr double kPowerIterationTol = 1e-12;

double quadratic_form(const RetrievalKernel& kernel,
                      const std::vector<std::complex<double>>& amplitude) {
    const int n = kernel.grid.size();
    const auto& w = kernel.grid.weights;
    std::vector<std::complex<double>> t(n);
    for (int i = 0; i < n; ++i) t[i] = w[i] * amplitude[i];
    long double acc = 0.0L;
    for (int i = 0; i < n; ++i) {
        const double* row = kernel.matrix.data() + static_cast<size_t>(i) * n;
        std::complex<double> v{0.0, 0.0};
        for (int j = 0; j < n; ++j) v += row[j] * t[j];
        acc += (std::conj(t[i]) * v).real();
    }
    return static_cast<double>(acc);
}

}  // namespace

double kernel_value(double d, double x1, double x2) {
    if (!(d > 0.0)) throw std::invalid_argument("kernel_value: d must be positive");
    if (!(x1 >= 0.0 && x1 <= 1.0 && x2 >= 0.0 && x2 <= 1.0))
        throw std::invalid_argument("kernel_value: positions must lie in [0,1]");
    // (d/2) e^{-d(x1+x2)/2} I0(d sqrt(x1 x2)); the exponent is folded with the
    // Bessel scaling into -(d/2)(sqrt(x1)-sqrt(x2))^2 <= 0, finite at any d.
    const double s1 = std::sqrt(x1), s2 = std::sqrt(x2);
    const double diff = s1 - s2;
    return 0.5 * d * std::exp(-0.5 * d * diff * diff) * bessel_i_scaled(0, d * (s1 * s2));
}

RetrievalKernel build_kernel(double d, const SpatialGrid& grid) {
    const int n = grid.size();
    if (n < 2) throw std::invalid_argument("build_kernel: invalid grid");
    RetrievalKernel kernel{d, grid, std::vector<double>(static_cast<size_t>(n) * n)};
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = kernel_value(d, grid.nodes[i], grid.nodes[j]);
            kernel.matrix[static_cast<size_t>(i) * n + j] = v;
            kernel.matrix[static_cast<size_t>(j) * n + i] = v;
        }
    }
    return kernel;
}

double efficiency(const RetrievalKernel& kernel, const SpinWave& spin, Direction direction) {
    if (!(spin.grid == kernel.grid))
        throw std::invalid_argument("efficiency: spin wave and kernel grids differ");
    if (std::abs(spin_norm(spin) - 1.0) > 1e-8)
        throw std::invalid_argument("efficiency: spin wave must be normalized");
    if (direction == Direction::Forward) return quadratic_form(kernel, reverse(spin).amplitude);
    return quadratic_form(kernel, spin.amplitude);
}

OptimalSpin optimal_spin_wave(double d, const SpatialGrid& grid) {
    const RetrievalKernel kernel = build_kernel(d, grid);
    const int n = grid.size();
    const auto& w = grid.weights;

    // Symmetrized operator A = W^{1/2} K W^{1/2}; its top eigenpair is simple
    // (strictly positive kernel), so power iteration from a positive vector
    // converges.
    std::vector<double> sqw(n);
    for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(w[i]);

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), av(n);
    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            const double* row = kernel.matrix.data() + static_cast<size_t>(i) * n;
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += row[j] * sqw[j] * in[j];
            out[i] = sqw[i] * acc;
        }
    };

    double lambda = 0.0, lambda_prev = -1.0;
    bool converged = false;
    for (int iter = 0; iter < kPowerIterationCap; ++iter) {
        apply(v, av);
        double dot = 0.0, nrm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            dot += v[i] * av[i];
            nrm2 += av[i] * av[i];
        }
        lambda = dot;
        const double inv = 1.0 / std::sqrt(nrm2);
        for (int i = 0; i < n; ++i) v[i] = av[i] * inv;
        if (std::abs(lambda - lambda_prev) <= kPowerIterationTol * std::abs(lambda)) {
            converged = true;
            break;
        }
        lambda_prev = lambda;
    }
    if (!converged) throw std::runtime_error("optimal_spin_wave: power iteration did not converge");

    // Rayleigh quotient of the returned vector, so that
    // efficiency(kernel, spin, Backward) reproduces eta_star to rounding.
    apply(v, av);
    double eta = 0.0;
    for (int i = 0; i < n; ++i) eta += v[i] * av[i];

    std::vector<std::complex<double>> amp(n);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += w[i] * v[i] / sqw[i];
    const double sign = mean < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) amp[i] = sign * v[i] / sqw[i];

    return OptimalSpin{eta, spin_wave_from_samples(grid, std::move(amp), true)};
}

double flat_efficiency_analytic(double d) {
    if (!(d > 0.0)) throw std::invalid_argument("flat_efficiency_analytic: d must be positive");
    return 1.0 - (bessel_i_scaled(0, d) + bessel_i_scaled(1, d));
}

double tau_w_approx(double d) {
    if (d < 0.0) throw std::invalid_argument("tau_w_approx: d must be non-negative");
    return 1.0 / (1.0 + 0.5 * d);
}

double alpha_from_write(double d, double gamma_tau) {
    if (gamma_tau < 0.0) throw std::invalid_argument("alpha_from_write: gamma_tau must be non-negative");
    return 2.0 * d * gamma_tau / (1.0 + gamma_tau);
}

ExponentialFit best_fit_exponential(double d, const SpatialGrid& grid) {
    const RetrievalKernel kernel = build_kernel(d, grid);
    auto eta_of = [&](double alpha) {
        return quadratic_form(kernel, exponential_spin_wave(grid, alpha).amplitude);
    };

    // Golden-section maximization on [0, 4d]; the efficiency is unimodal in
    // the decay constant.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 4.0 * d;
    double c = b - invphi * (b - a);
    double e = a + invphi * (b - a);
    double fc = eta_of(c), fe = eta_of(e);
    for (int iter = 0; iter < 400 && std::abs(fc - fe) > 1e-10; ++iter) {
        if (fc > fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - invphi * (b - a);
            fc = eta_of(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + invphi * (b - a);
            fe = eta_of(e);
        }
    }
    return fc > fe ? ExponentialFit{c, fc} : ExponentialFit{e, fe};
}

EfficiencyReport efficiency_report(double d, const SpatialGrid& grid) {
    const double gamma_tau = tau_w_approx(d);
    const double alpha_l = alpha_from_write(d, gamma_tau);
    const RetrievalKernel kernel = build_kernel(d, grid);
    const SpinWave wave = exponential_spin_wave(grid, alpha_l);
    EfficiencyReport report;
    report.d = d;
    report.tau_w_used = gamma_tau;
    report.alpha_l_used = alpha_l;
    report.eta_res = efficiency(kernel, wave, Direction::Backward);
    report.eta_fwd = efficiency(kernel, wave, Direction::Forward);
    report.eta_offres = flat_efficiency_analytic(d);
    report.eta_star = optimal_spin_wave(d, grid).eta_star;
    return report;
}

}  // namespace spinwave
