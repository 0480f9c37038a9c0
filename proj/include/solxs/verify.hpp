// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solxs/formfactor.hpp"

namespace solxs {

// Verification routines shared by the `verify` CLI subcommands, the unit
// tests and the acceptance suite. The oracles here deliberately avoid the
// evaluation paths they check.

// Integral representations J_n(x) = (1/2pi) int_0^{2pi} cos(n t - x sin t) dt,
// evaluated by the periodic trapezoid rule (spectrally convergent).
double bessel_j0_oracle(double x);
double bessel_j1_oracle(double x);

struct CheckLine {
    std::string check;
    double value;
    double threshold;
    bool pass;
};

// Max residuals of the oracle comparison on [0, 200], the derivative
// identity J1' = J0 - J1/x on [0.1, 50], and the large-x form on [20, 200].
std::vector<CheckLine> verify_bessel();

struct SpinsumVerify {
    std::uint64_t seed;
    int points;
    double max_pairwise_rel;  // worst disagreement among the three routes
};

// Randomized elastic kinematics, |p| in [0.1, 100] mc, theta in (0, pi].
SpinsumVerify verify_spinsum(int points, std::uint64_t seed);

struct FormFactorVerifyRow {
    double qr0;
    std::string region;  // "interior" / "exterior"
    double analytic_im;
    double quadrature_im;
    double rel_error;
};

struct FormFactorVerify {
    std::vector<FormFactorVerifyRow> rows;
    double max_rel_error;
    double max_combined_residual;  // against -4 pi i J1(x)/(q^2 r0)
};

// Log grid of n points, q r0 in [0.1, 20], r0 = 1.
FormFactorVerify verify_formfactor(int grid_n, double tol = 1e-9,
                                   const QuadratureOptions& opts = {});

// Deterministic uniform in [0, 1) from raw generator bits (the standard
// library distributions are implementation-defined).
double uniform01(std::uint64_t bits);

}  // namespace solxs
