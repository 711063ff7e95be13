// Copyright 2026 the spinwave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace spinwave {

/// Bessel function of the first kind J_n(x) for n in {0, 1}, x >= 0.
/// Power series below x = 12, normalized downward recurrence in the
/// midrange, Hankel asymptotic expansion beyond x = 25.
double bessel_j(int n, double x);

/// Exponentially scaled modified Bessel function exp(-x) * I_n(x) for
/// n in {0, 1}, x >= 0. Finite for the whole double range (no overflow);
/// this is the primary API, use it whenever the exp(-x) factor can be
/// folded into another exponent.
double bessel_i_scaled(int n, double x);

/// Unscaled I_n(x). Throws std::overflow_error for x > 700 where exp(x)
/// no longer fits in a double times the scaled value.
double bessel_i(int n, double x);

}  // namespace spinwave
