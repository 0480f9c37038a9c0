// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "solxs/bessel.hpp"
#include "solxs/dirac.hpp"
#include "solxs/verify.hpp"
#include "solxs/xsec.hpp"

using namespace solxs;

namespace {

BeamSpec natural_beam(double p, const UnitSystem& u, int f = 1) {
    return BeamSpec{1.0, p, u.e_charge, Polarization::spin_averaged(), f};
}

// momentum tuned so x = 2 p r0 sin(|theta|/2)/hbar lands on target
double p_for_x(double x, double theta, double r0, const UnitSystem& u) {
    return x * u.hbar / (2.0 * r0 * std::sin(std::fabs(theta) / 2.0));
}

}  // namespace

TEST_CASE("scatter point kinematics") {
    const UnitSystem u = UnitSystem::natural();
    CHECK_THROWS_AS(ScatterPoint::make(0.0, 1.0, 1.0, u), std::domain_error);
    CHECK_THROWS_AS(ScatterPoint::make(3.5, 1.0, 1.0, u), std::domain_error);
    CHECK_THROWS_AS(ScatterPoint::make(0.5, -1.0, 1.0, u), std::domain_error);

    const ScatterPoint pt = ScatterPoint::make(0.8, 2.0, 3.0, u);
    CHECK(pt.q == doctest::Approx(2.0 * 2.0 * std::sin(0.4)).epsilon(1e-15));
    CHECK(pt.x == doctest::Approx(pt.q * 3.0).epsilon(1e-15));

    const ScatterPoint mirrored = ScatterPoint::make(-0.8, 2.0, 3.0, u);
    CHECK(mirrored.x == pt.x);  // bit-identical
}

TEST_CASE("master cross section") {
    const UnitSystem u = UnitSystem::natural();
    const SolenoidSpec sol = SolenoidSpec::from_flux(1.0, 1.0);
    const BeamSpec beam = natural_beam(2.0, u);

    // symmetric in theta, exactly
    for (double theta : {0.3, 1.0, 2.9}) {
        const auto plus = master_xsec(beam, sol, ScatterPoint::make(theta, beam.momentum_p, sol.r0, u), u);
        const auto minus =
            master_xsec(beam, sol, ScatterPoint::make(-theta, beam.momentum_p, sol.r0, u), u);
        CHECK(plus.value == minus.value);
        CHECK(plus.value >= 0.0);
    }

    // vanishes exactly at x = j_{1,k} and nowhere between
    const double theta = 1.1;
    for (int k = 1; k <= 5; ++k) {
        const double pk = p_for_x(bessel_j1_zero(k), theta, sol.r0, u);
        const BeamSpec bk = natural_beam(pk, u);
        const ScatterPoint pt = ScatterPoint::make(theta, pk, sol.r0, u);
        const double env = classical_envelope(bk, sol, pt, u).value;
        CHECK(master_xsec(bk, sol, pt, u).value < 1e-19 * env);

        const double pm = p_for_x(bessel_j1_zero(k) + M_PI / 2, theta, sol.r0, u);
        const BeamSpec bm = natural_beam(pm, u);
        const ScatterPoint mid = ScatterPoint::make(theta, pm, sol.r0, u);
        CHECK(master_xsec(bm, sol, mid, u).value >
              0.3 * classical_envelope(bm, sol, mid, u).value);
    }

    // small-x ratio to the reduced formula
    const double ps = p_for_x(1e-4, theta, sol.r0, u);
    const BeamSpec bs = natural_beam(ps, u);
    const ScatterPoint pts = ScatterPoint::make(theta, ps, sol.r0, u);
    CHECK(std::fabs(master_xsec(bs, sol, pts, u).value / small_x_reduction(bs, sol, pts, u).value -
                    1.0) < 1e-6);
    CHECK(master_xsec(bs, sol, pts, u).regime == Regime::SmallX);

    // helicity beams must use helicity_xsec
    BeamSpec hel = beam;
    hel.polarization = Polarization::helicity(1, 1);
    CHECK_THROWS_AS(master_xsec(hel, sol, pts, u), std::domain_error);
}

TEST_CASE("master cross section is dimensionally consistent") {
    // scale the base units (mass mu, length lam, time tau) and convert every
    // input; the output must convert like a length
    const UnitSystem u = UnitSystem::cgs();
    const SolenoidSpec sol = SolenoidSpec::from_quanta(1.0, 1, u);
    const double p = momentum_from_kinetic(5.0 * kErgPerMeV, kElectronMassGram, u);
    const BeamSpec beam{kElectronMassGram, p, u.e_charge, Polarization::spin_averaged(), 1};
    const double theta = 0.9;
    const double base =
        master_xsec(beam, sol, ScatterPoint::make(theta, p, sol.r0, u), u).value;

    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const double mu = std::pow(10.0, 4.0 * uniform01(rng()) - 2.0);
        const double lam = std::pow(10.0, 4.0 * uniform01(rng()) - 2.0);
        const double tau = std::pow(10.0, 4.0 * uniform01(rng()) - 2.0);
        UnitSystem v = u;
        v.hbar = u.hbar * mu * lam * lam / tau;
        v.c = u.c * lam / tau;
        v.e_charge = u.e_charge * std::sqrt(mu) * std::pow(lam, 1.5) / tau;
        BeamSpec beam_v = beam;
        beam_v.mass = beam.mass * mu;
        beam_v.momentum_p = beam.momentum_p * mu * lam / tau;
        beam_v.charge = beam.charge * std::sqrt(mu) * std::pow(lam, 1.5) / tau;
        SolenoidSpec sol_v = sol;
        sol_v.r0 = sol.r0 * lam;
        sol_v.flux = sol.flux * std::sqrt(mu) * std::pow(lam, 1.5) / tau;
        const double got =
            master_xsec(beam_v, sol_v,
                        ScatterPoint::make(theta, beam_v.momentum_p, sol_v.r0, v), v)
                .value;
        CHECK(got / lam == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("helicity cross section") {
    const UnitSystem u = UnitSystem::natural();
    const SolenoidSpec sol = SolenoidSpec::from_flux(1.0, 0.7);
    const BeamSpec beam = natural_beam(1.5, u);
    const ScatterPoint pt = ScatterPoint::make(0.8, beam.momentum_p, sol.r0, u);

    // flip is exactly zero; conserving equals a quarter of the f = 1 master
    CHECK(helicity_xsec(beam, sol, pt, u, +1, -1).value == 0.0);
    CHECK(helicity_xsec(beam, sol, pt, u, -1, +1).value == 0.0);
    const double master1 = master_xsec(beam, sol, pt, u).value;
    for (int l : {-1, +1}) {
        const double hs = helicity_xsec(beam, sol, pt, u, l, l).value;
        CHECK(std::fabs(hs * 4.0 / master1 - 1.0) < 1e-13);
    }
    // prefactor arithmetic: (1/2pi)/4^3 * 4 = (1/4)/(8 pi)
    CHECK((1.0 / (2.0 * M_PI)) / 64.0 * 4.0 ==
          doctest::Approx((1.0 / 4.0) / (8.0 * M_PI)).epsilon(1e-15));
    CHECK_THROWS_AS(helicity_xsec(beam, sol, pt, u, 0, 1), std::invalid_argument);
}

TEST_CASE("reference forms") {
    const UnitSystem u = UnitSystem::cgs();
    const double p = momentum_from_kinetic(2.0 * kErgPerMeV, kElectronMassGram, u);
    const double phi0 = flux_quantum(u);
    const double theta = 0.4;

    // quantized flux kills the AB cross section
    const double ref = ab_exact(0.5 * phi0, p, theta, u).value;
    for (int n = 1; n <= 10; ++n)
        CHECK(ab_exact(n * phi0, p, theta, u).value < 1e-26 * ref);

    // half quantum: sin^2 = 1
    const double s = std::sin(theta / 2.0);
    CHECK(ref == doctest::Approx(u.hbar / (2.0 * M_PI * p * s * s)).epsilon(1e-14));

    // the shifted-flux identity
    const double phi = 0.37 * phi0;
    CHECK(ab_exact(phi + phi0, p, theta, u).value ==
          doctest::Approx(ab_exact(phi0 - phi, p, theta, u).value).epsilon(1e-12));

    // small flux ratio: ab matches the x << 1 reduction to (e phi/2 hbar c)^2/3
    for (double ratio : {1e-3, 1e-2}) {
        const double flux = ratio * 2.0 * u.hbar * u.c / u.e_charge;
        const SolenoidSpec sol = SolenoidSpec::from_flux(1.0, flux);
        const BeamSpec beam{kElectronMassGram, p, u.e_charge, Polarization::spin_averaged(), 1};
        const ScatterPoint pt = ScatterPoint::make(theta, p, sol.r0, u);
        const double ab = ab_exact(flux, p, theta, u).value;
        const double sx = small_x_reduction(beam, sol, pt, u).value;
        CHECK(std::fabs(ab / sx - 1.0) <= ratio * ratio / 3.0);
    }

    // Landau-Lifshitz form: 1/hbar and 1/theta^2 scalings
    const double flux = 0.2 * phi0;
    const double ll = ll_small_angle(flux, p, theta, u).value;
    CHECK(ll_small_angle(flux, p, theta, scale_hbar(u, 2.0)).value ==
          doctest::Approx(ll / 2.0).epsilon(1e-14));
    CHECK(ll_small_angle(flux, p, 2.0 * theta, u).value == doctest::Approx(ll / 4.0).epsilon(1e-14));

    // identical to small_x_small_theta at f = 1, bit for bit
    const SolenoidSpec sol = SolenoidSpec::from_flux(1.0, flux);
    const BeamSpec beam{kElectronMassGram, p, u.e_charge, Polarization::spin_averaged(), 1};
    const ScatterPoint pt = ScatterPoint::make(theta, p, sol.r0, u);
    CHECK(small_x_small_theta(beam, sol, pt, u).value == ll);

    // f = 2 halves the reductions
    BeamSpec beam2 = beam;
    beam2.f_factor = 2;
    CHECK(small_x_reduction(beam2, sol, pt, u).value ==
          doctest::Approx(0.5 * small_x_reduction(beam, sol, pt, u).value).epsilon(1e-15));

    // small_x_small_theta approaches small_x_reduction as theta -> 0
    const ScatterPoint tiny = ScatterPoint::make(0.01, p, sol.r0, u);
    CHECK(std::fabs(small_x_small_theta(beam, sol, tiny, u).value /
                        small_x_reduction(beam, sol, tiny, u).value -
                    1.0) < 1e-4);
}

TEST_CASE("quantized flux cross section") {
    const UnitSystem u = UnitSystem::cgs();
    const double p = momentum_from_kinetic(3.0 * kErgPerMeV, kElectronMassGram, u);
    const double theta = 0.7;
    const double r0 = 1.0;

    CHECK(quantized_xsec(0, r0, p, theta, 1, u).value == 0.0);

    for (int n : {1, 2, 5}) {
        const SolenoidSpec sol = SolenoidSpec::from_quanta(r0, n, u);
        const BeamSpec beam{kElectronMassGram, p, u.e_charge, Polarization::spin_averaged(), 1};
        const ScatterPoint pt = ScatterPoint::make(theta, p, r0, u);
        const double master = master_xsec(beam, sol, pt, u).value;
        const double quant = quantized_xsec(n, r0, p, theta, 1, u).value;
        CHECK(std::fabs(quant / master - 1.0) < 1e-12);
    }

    // doubling the charge unit (which halves the quantum) changes nothing
    UnitSystem u2 = u;
    u2.e_charge *= 2.0;
    CHECK(quantized_xsec(3, r0, p, theta, 1, u2).value ==
          doctest::Approx(quantized_xsec(3, r0, p, theta, 1, u).value).epsilon(1e-12));

    // n -> 2n quadruples
    CHECK(quantized_xsec(2, r0, p, theta, 1, u).value ==
          doctest::Approx(4.0 * quantized_xsec(1, r0, p, theta, 1, u).value).epsilon(1e-15));
}

TEST_CASE("quantized small-angle form") {
    const UnitSystem u = UnitSystem::natural();
    const double theta = 1e-3;
    const double p = 1.0;

    // proportional to hbar and to n^2
    const double base = quantized_small_theta(1, p, theta, 1, u).value;
    CHECK(quantized_small_theta(1, p, theta, 1, scale_hbar(u, 3.0)).value ==
          doctest::Approx(3.0 * base).epsilon(1e-14));
    CHECK(quantized_small_theta(2, p, theta, 1, u).value ==
          doctest::Approx(4.0 * base).epsilon(1e-15));

    // joint limit x << 1, theta << 1 of the quantized form; the residual is
    // O(x^2) + O(theta^2)
    const double r0 = 1e-3;  // x = 2 p r0 sin(theta/2) ~ 1e-6
    const double quant = quantized_xsec(1, r0, p, theta, 1, u).value;
    const ScatterPoint pt = ScatterPoint::make(theta, p, r0, u);
    CHECK(std::fabs(base / quant - 1.0) <
          0.5 * (pt.x * pt.x + theta * theta) + 1e-12);
}

TEST_CASE("classical envelope") {
    const UnitSystem u = UnitSystem::natural();
    const SolenoidSpec sol = SolenoidSpec::from_flux(1.0, 1.0);
    const BeamSpec beam = natural_beam(40.0, u);
    const double theta = 1.3;
    const ScatterPoint pt = ScatterPoint::make(theta, beam.momentum_p, sol.r0, u);

    // hbar^2 and 1/r0^3 prefactor scalings
    const double env = classical_envelope(beam, sol, pt, u).value;
    const UnitSystem u2 = scale_hbar(u, 2.0);
    CHECK(classical_envelope(beam, sol, ScatterPoint::make(theta, beam.momentum_p, sol.r0, u2), u2)
              .value == doctest::Approx(4.0 * env).epsilon(1e-14));
    SolenoidSpec big = sol;
    big.r0 = 2.0 * sol.r0;
    CHECK(classical_envelope(beam, big, ScatterPoint::make(theta, beam.momentum_p, big.r0, u), u)
              .value == doctest::Approx(env / 8.0).epsilon(1e-14));

    // pointwise bound for x > 20
    for (int i = 0; i < 60; ++i) {
        const double th = 0.7 + i * (M_PI - 0.7) / 59.0;
        const ScatterPoint q = ScatterPoint::make(th, beam.momentum_p, sol.r0, u);
        REQUIRE(q.x > 20.0);
        CHECK(master_xsec(beam, sol, q, u).value <=
              classical_envelope(beam, sol, q, u).value * 1.05);
    }
}

TEST_CASE("uniform field coefficient") {
    const UnitSystem u = UnitSystem::natural();
    const BeamSpec beam = natural_beam(2.0, u);
    const double mc = beam.mass * u.c;

    // in-plane deflection: flags violated, coefficient finite
    const FourVector p_i = on_shell(mc, 2.0, 0.0, 0.0);
    const FourVector p_f = on_shell(mc, 2.0 * std::cos(0.5), 2.0 * std::sin(0.5), 0.0);
    const UniformFieldCoeff c = uniform_field_coeff(beam, 1.0, p_i, p_f, u);
    CHECK_FALSE(c.flags.q1_satisfied);
    CHECK_FALSE(c.flags.q2_satisfied);
    CHECK(std::isfinite(c.value));
    CHECK(c.value > 0.0);

    // forward: flags satisfied
    const UniformFieldCoeff fwd = uniform_field_coeff(beam, 1.0, p_i, p_i, u);
    CHECK(fwd.flags.q1_satisfied);
    CHECK(fwd.flags.q2_satisfied);

    // the finite factor is the trace-form current square
    const double expect = 2.0 * M_PI * std::pow(beam.charge * beam.mass * 1.0, 2) *
                          current_sq_uniform(p_i, p_f, mc) /
                          (std::pow(spatial_norm(p_i), 3) * std::pow(std::sin(0.5), 2));
    CHECK(c.value == doctest::Approx(expect).epsilon(1e-12));
}
