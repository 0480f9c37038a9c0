// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "solxs/bessel.hpp"
#include "solxs/dirac.hpp"

namespace solxs {

namespace {

double bessel_oracle(int n, double x) {
    // periodic trapezoid over a full period; node count grows with x so the
    // quadrature stays spectrally converged
    const int m = 512 + 8 * static_cast<int>(std::ceil(x));
    double sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const double t = 2.0 * M_PI * k / m;
        sum += std::cos(n * t - x * std::sin(t));
    }
    return sum / m;
}

}  // namespace

double bessel_j0_oracle(double x) { return bessel_oracle(0, x); }
double bessel_j1_oracle(double x) { return bessel_oracle(1, x); }

double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<CheckLine> verify_bessel() {
    std::vector<CheckLine> out;

    // oracle comparison on [0, 200]; absolute residual (the functions are O(1))
    double worst_oracle = 0.0;
    for (int i = 0; i <= 800; ++i) {
        const double x = 200.0 * i / 800.0;
        worst_oracle = std::max(worst_oracle,
                                std::fabs(bessel_j0(x).value - bessel_j0_oracle(x)));
        worst_oracle = std::max(worst_oracle,
                                std::fabs(bessel_j1(x).value - bessel_j1_oracle(x)));
    }
    out.push_back({"oracle_abs_residual", worst_oracle, 1e-9, worst_oracle < 1e-9});

    // derivative identity J1'(x) = J0(x) - J1(x)/x by central differences
    const double h = 1e-5;
    double worst_ident = 0.0;
    for (int i = 0; i <= 499; ++i) {
        const double x = 0.1 + (50.0 - 0.1) * i / 499.0;
        const double d = (bessel_j1(x + h).value - bessel_j1(x - h).value) / (2.0 * h);
        const double rhs = bessel_j0(x).value - bessel_j1(x).value / x;
        worst_ident = std::max(worst_ident, std::fabs(d - rhs));
    }
    out.push_back({"derivative_identity_residual", worst_ident, 1e-6, worst_ident < 1e-6});

    // two-term large-x form: magnitudes differ by the next order, ~x^{-3/2}
    double worst_asym = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double x = 20.0 + (200.0 - 20.0) * i / 400.0;
        const double diff =
            std::fabs(std::fabs(bessel_j1_asymptotic(x)) - std::fabs(bessel_j1(x).value));
        worst_asym = std::max(worst_asym, diff * std::pow(x, 1.5));
    }
    out.push_back({"asymptotic_scaled_residual", worst_asym, 0.5, worst_asym < 0.5});

    return out;
}

SpinsumVerify verify_spinsum(int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double mass_c = 1.0;
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double p = 0.1 * std::pow(1000.0, uniform01(rng()));  // [0.1, 100] mc
        const double theta = (1.0 - uniform01(rng())) * M_PI;       // (0, pi]
        const double phi0 = 2.0 * M_PI * uniform01(rng());          // beam azimuth
        const FourVector p_i = on_shell(mass_c, p * std::cos(phi0), p * std::sin(phi0), 0.0);
        const FourVector p_f =
            on_shell(mass_c, p * std::cos(phi0 + theta), p * std::sin(phi0 + theta), 0.0);
        const SpinSumRoutes r = current_sq_avg_routes(p_i, p_f, mass_c);
        const double scale = std::max({std::fabs(r.kinematic), std::fabs(r.invariant_form),
                                       std::fabs(r.explicit_sum)});
        worst = std::max({worst, std::fabs(r.explicit_sum - r.invariant_form) / scale,
                          std::fabs(r.explicit_sum - r.kinematic) / scale,
                          std::fabs(r.invariant_form - r.kinematic) / scale});
    }
    return {seed, points, worst};
}

FormFactorVerify verify_formfactor(int grid_n, double tol, const QuadratureOptions& opts) {
    FormFactorVerify out;
    out.max_rel_error = 0.0;
    out.max_combined_residual = 0.0;
    const double r0 = 1.0;
    for (int i = 0; i < grid_n; ++i) {
        const double x = 0.1 * std::pow(200.0, grid_n == 1 ? 0.0 : i / (grid_n - 1.0));
        const PlanarTransferQ q = PlanarTransferQ::from_polar(x / r0, 0.3);

        const FormFactorValue ia = interior_analytic(q, r0);
        const FormFactorValue iq = interior_quadrature(q, r0, tol, opts);
        const double ierr = std::abs(iq.coeff - ia.coeff) / std::abs(ia.coeff);
        out.rows.push_back({x, "interior", ia.coeff.imag(), iq.coeff.imag(), ierr});

        const FormFactorValue ea = exterior_analytic(q, r0);
        const FormFactorValue eq = exterior_quadrature(q, r0, tol, opts);
        const double eerr = std::abs(eq.coeff - ea.coeff) / std::abs(ea.coeff);
        out.rows.push_back({x, "exterior", ea.coeff.imag(), eq.coeff.imag(), eerr});

        out.max_rel_error = std::max({out.max_rel_error, ierr, eerr});

        const std::complex<double> combined = combined_coefficient(q, r0);
        const double qm = q.magnitude();
        const std::complex<double> expected{0.0,
                                            -4.0 * M_PI * bessel_j1(x).value / (qm * qm * r0)};
        out.max_combined_residual =
            std::max(out.max_combined_residual, std::abs(combined - expected) / std::abs(expected));
    }
    return out;
}

}  // namespace solxs
