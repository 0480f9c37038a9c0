// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "solxs/fourvector.hpp"
#include "solxs/units.hpp"

namespace solxs {

enum class Regime { SmallX, Intermediate, Asymptotic };

// x < 0.01 small, x > 10 asymptotic; shared with the limits module.
Regime regime_for_x(double x);
const char* regime_name(Regime r);

enum class Formula {
    Master,
    Helicity,
    AbExact,
    LlSmallAngle,
    SmallX,
    SmallXSmallTheta,
    Quantized,
    QuantizedSmallTheta,
    Envelope,
};
const char* formula_name(Formula f);

// Scattering kinematics at one angle. q = 2 p |sin(theta/2)| / hbar is the
// wavevector transfer, x = q r0 the dimensionless argument all the Bessel
// structure depends on. theta = 0 (forward) is excluded: every formula here
// is singular there.
struct ScatterPoint {
    double theta;  // rad, in (-pi, pi], nonzero
    double p;      // g cm/s
    double q;      // 1/cm
    double x;      // dimensionless

    static ScatterPoint make(double theta, double p, double r0, const UnitSystem& u);
};

// Differential cross section per unit solenoid length per angle, cm/rad.
struct XsecValue {
    double value;
    Formula formula;
    Regime regime;
};

// First-order cross section for the solenoid field, spin averaged:
//   (1/f) (hbar/c^2) (e Phi / r0)^2 |J1(x)|^2 / (8 pi p^3 sin^4(theta/2))
XsecValue master_xsec(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                      const UnitSystem& u);

// Helicity-resolved version:
//   (1/2pi) (hbar/c^2) (e Phi / r0)^2 |J1(x)|^2 / (4^3 p^3 sin^4(theta/2))
//     * (1 + li lf)^2
// Zero when li = -lf; for li = lf it equals master_xsec(f = 1)/4.
XsecValue helicity_xsec(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                        const UnitSystem& u, int lambda_i, int lambda_f);

// Aharonov-Bohm reference form: hbar sin^2(e Phi / 2 hbar c) / (2 pi p sin^2(theta/2)).
XsecValue ab_exact(double flux, double p, double theta, const UnitSystem& u);

// Landau-Lifshitz small-angle form: e^2 Phi^2 / (2 pi hbar c^2 p theta^2).
XsecValue ll_small_angle(double flux, double p, double theta, const UnitSystem& u);

// x << 1 reduction of the master formula:
//   (1/f) e^2 Phi^2 / (8 pi c^2 hbar p sin^2(theta/2))
XsecValue small_x_reduction(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                            const UnitSystem& u);

// ... and additionally theta << 1: (1/f) e^2 Phi^2 / (2 pi c^2 hbar p theta^2).
// At f = 1 this is bit-identical to ll_small_angle.
XsecValue small_x_small_theta(const BeamSpec& beam, const SolenoidSpec& sol,
                              const ScatterPoint& pt, const UnitSystem& u);

// Quantized flux Phi = n Phi0:
//   n^2 hbar^3 (pi/f) |J1(x)|^2 / (2 r0^2 p^3 sin^4(theta/2)),
// charge-independent and equal to master_xsec at Phi = n Phi0.
XsecValue quantized_xsec(int n, double r0, double p, double theta, int f, const UnitSystem& u);

// Joint x << 1, theta << 1 limit of the quantized form:
//   2 pi hbar n^2 / (f p theta^2).
XsecValue quantized_small_theta(int n, double p, double theta, int f, const UnitSystem& u);

// Upper envelope of the asymptotic (large x) master cross section, the
// cos^2 -> 1 bound of
//   (hbar^2/f) (e Phi / 2 pi c)^2 cos^2(x - 3pi/4) / (2 r0^3 p^4 |sin^5(theta/2)|).
XsecValue classical_envelope(const BeamSpec& beam, const SolenoidSpec& sol,
                             const ScatterPoint& pt, const UnitSystem& u);

// Uniform-field matrix-element coefficient,
//   2 pi (e m B0)^2 |ubar_f gamma^1 u_i|^2 / (p^3 sin^2 theta),
// with the delta-function constraints reported as flags, never evaluated.
struct DeltaFlags {
    bool q1_satisfied;
    bool q2_satisfied;
};
struct UniformFieldCoeff {
    double value;
    DeltaFlags flags;
};
UniformFieldCoeff uniform_field_coeff(const BeamSpec& beam, double b0, const FourVector& p_i,
                                      const FourVector& p_f, const UnitSystem& u);

}  // namespace solxs
