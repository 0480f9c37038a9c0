// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>

namespace solxs {

// In-plane momentum transfer in inverse length units.
struct PlanarTransferQ {
    double q1 = 0.0, q2 = 0.0;

    double magnitude() const;
    std::array<double, 2> direction() const;  // unit vector
    static PlanarTransferQ from_polar(double q, double phi);
    void validate() const;  // q > 0
};

enum class FFRegion { Interior, Exterior, Combined };
enum class FFMethod { Analytic, Quadrature };

// The planar Fourier integrals evaluate to coeff * qhat_i. The coefficient
// is purely imaginary for both regions (checked by the oracles).
struct FormFactorValue {
    std::complex<double> coeff;
    FFRegion region;
    FFMethod method;
    double est_error = 0.0;  // absolute, on |coeff|

    std::array<std::complex<double>, 2> components(const PlanarTransferQ& q) const;
};

// integral over r < r0 of e^{-i q.x} x_i d^2x
//   = 2 pi i r0^3 (q_i/q) [J0(x)/x - 2 J1(x)/x^2],  x = q r0
FormFactorValue interior_analytic(const PlanarTransferQ& q, double r0);

// integral over r > r0 of e^{-i q.x} x_i/(x1^2 + x2^2) d^2x
//   = -2 pi i (q_i/q^2) J0(q r0)
FormFactorValue exterior_analytic(const PlanarTransferQ& q, double r0);

struct QuadratureOptions {
    long interior_budget = 1'000'000;  // integrand evaluations
    long exterior_budget = 100'000;    // radial evaluations
    double exterior_cutoff = 0.0;      // radial cutoff R; 0 = automatic,
                                       // r0 = analytic tail only
};

// Oracle: genuine 2D adaptive quadrature of the interior integrand over the
// disk (polar coordinates, no Bessel shortcuts). tol in [1e-12, 1e-4].
FormFactorValue interior_quadrature(const PlanarTransferQ& q, double r0, double tol,
                                    const QuadratureOptions& opts = {});

// Oracle: exact angular pre-integration reduces the exterior integral to
// -2 pi i qhat_i [ int_{r0}^{R} J1(q r) dr + J0(q R)/q ]; the radial part is
// integrated adaptively and the tail beyond R is analytic.
FormFactorValue exterior_quadrature(const PlanarTransferQ& q, double r0, double tol,
                                    const QuadratureOptions& opts = {});

// interior/r0^2 + exterior, on qhat_i: equals -4 pi i J1(q r0)/(q^2 r0).
std::complex<double> combined_coefficient(const PlanarTransferQ& q, double r0);

}  // namespace solxs
