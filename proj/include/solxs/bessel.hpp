// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace solxs {

enum class BesselBranch { Series, Asymptotic };

struct BesselEval {
    double value;
    BesselBranch branch;
    double est_error;  // absolute
};

// J0 and J1 on x >= 0. Power series below x = 12, Hankel expansion above,
// with the 12 <= x < 20 window refined by Taylor continuation of the Bessel
// ODE system from an anchor where the expansion is converged past double
// precision. Relative accuracy 1e-10 or better up to x = 1e3.
BesselEval bessel_j0(double x);
BesselEval bessel_j1(double x);

// The two-term large-x form -sqrt(2/(pi x)) cos(x - 3 pi/4), sign as printed
// in the source it reproduces (the true expansion carries +; only |J1|^2 is
// consumed downstream, so the sign never matters there).
double bessel_j1_asymptotic(double x);

// k-th positive root of J1, 1 <= k <= 100. Bracketed from the McMahon
// estimate and bisected on bessel_j1; cached after first use (thread-safe).
double bessel_j1_zero(int k);

}  // namespace solxs
