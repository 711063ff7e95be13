// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spinwave::detail {

// Adaptive Dormand-Prince 5(4) integrator on a flat double state vector.
// rhs(t, y, dydt); observer(t, y) is called after every accepted step.
// Throws std::runtime_error when the error control drives the step under
// the floor.
template <class Rhs, class Observer>
void dopri5(Rhs&& rhs, std::vector<double>& y, double t0, double t1, double atol, double rtol,
            Observer&& observer, long& accepted_steps) {
    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
    static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                            a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
    static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                            a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    static constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0, e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                            e4 = 125.0 / 192.0 - 393.0 / 640.0,
                            e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0, e6 = 11.0 / 84.0 - 187.0 / 2100.0,
                            e7 = -1.0 / 40.0;

    if (t1 <= t0) return;
    const size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);

    double t = t0;
    double h = (t1 - t0) * 1e-4;
    const double hmin = (t1 - t0) * 1e-14;
    bool first_same_as_last = false;  // k1 holds a fresh value after each accepted step

    while (t < t1) {
        if (h > t1 - t) h = t1 - t;
        if (!first_same_as_last) rhs(t, y, k1);

        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, yt, k2);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                  e7 * k7[i]);
            const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double r = e / scale;
            err2 += r * r;
        }
        const double err = std::sqrt(err2 / static_cast<double>(n));

        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            first_same_as_last = true;
            ++accepted_steps;
            if (!observer(t, y)) return;
        } else {
            first_same_as_last = false;
        }
        const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, factor));
        if (h < hmin && t < t1)
            throw std::runtime_error("dopri5: step size underflow (tolerance unreachable)");
    }
}

}  // namespace spinwave::detail
