// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#include "spinwave/spin_wave.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spinwave {

double spin_norm(const SpinWave& spin) {
    long double acc = 0.0L;
    for (int i = 0; i < spin.grid.size(); ++i) acc += spin.grid.weights[i] * std::norm(spin.amplitude[i]);
    return static_cast<double>(acc);
}

namespace {

void normalize_in_place(SpinWave& spin) {
    const double n2 = spin_norm(spin);
    if (!(n2 > 0.0)) throw std::invalid_argument("spin wave: cannot normalize a zero amplitude");
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& a : spin.amplitude) a *= scale;
}

}  // namespace

SpinWave spin_wave_from_samples(const SpatialGrid& grid, std::vector<std::complex<double>> amplitude,
                                bool normalize) {
    if (static_cast<int>(amplitude.size()) != grid.size())
        throw std::invalid_argument("spin_wave_from_samples: amplitude size does not match grid");
    SpinWave spin{grid, std::move(amplitude)};
    if (normalize) normalize_in_place(spin);
    return spin;
}

SpinWave flat_spin_wave(const SpatialGrid& grid) {
    // Weights sum to 1, so the constant wave is already normalized.
    return SpinWave{grid, std::vector<std::complex<double>>(grid.size(), 1.0)};
}

SpinWave exponential_spin_wave(const SpatialGrid& grid, double alpha_L) {
    if (alpha_L < 0.0) throw std::invalid_argument("exponential_spin_wave: alpha_L must be non-negative");
    SpinWave spin{grid, std::vector<std::complex<double>>(grid.size())};
    for (int i = 0; i < grid.size(); ++i) spin.amplitude[i] = std::exp(-0.5 * alpha_L * grid.nodes[i]);
    normalize_in_place(spin);
    return spin;
}

SpinWave reverse(const SpinWave& spin) {
    if (!is_symmetric(spin.grid))
        throw std::invalid_argument("reverse: grid is not symmetric about x = 1/2");
    SpinWave out{spin.grid, std::vector<std::complex<double>>(spin.amplitude.size())};
    const int n = spin.grid.size();
    for (int i = 0; i < n; ++i) out.amplitude[i] = spin.amplitude[n - 1 - i];
    return out;
}

}  // namespace spinwave
