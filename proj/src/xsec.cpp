// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/xsec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "solxs/bessel.hpp"
#include "solxs/dirac.hpp"

namespace solxs {

namespace {

void check_theta(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("theta must be finite");
    if (theta == 0.0)
        throw std::domain_error("forward singularity: theta = 0 is outside the domain");
    if (std::fabs(theta) > M_PI)
        throw std::domain_error("theta must lie in (-pi, pi], nonzero");
}

// |sin(theta/2)| evaluated so that +theta and -theta are bit-identical.
double abs_sin_half(double theta) { return std::sin(std::fabs(theta) / 2.0); }

double theta_sq(double theta) { return theta * theta; }

// Shared kernel so small_x_small_theta at f = 1 is literally ll_small_angle.
double ll_kernel(double e, double flux, double p, double theta, const UnitSystem& u) {
    const double ephi = e * flux;
    return ephi * ephi / (2.0 * M_PI * u.hbar * u.c * u.c * p * theta_sq(theta));
}

void check_momentum(double p) {
    if (!(p > 0.0)) throw std::domain_error("momentum must be positive");
}

}  // namespace

Regime regime_for_x(double x) {
    if (x < 0.01) return Regime::SmallX;
    if (x > 10.0) return Regime::Asymptotic;
    return Regime::Intermediate;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::SmallX: return "small_x";
        case Regime::Intermediate: return "intermediate";
        case Regime::Asymptotic: return "asymptotic";
    }
    return "?";
}

const char* formula_name(Formula f) {
    switch (f) {
        case Formula::Master: return "master";
        case Formula::Helicity: return "helicity";
        case Formula::AbExact: return "ab";
        case Formula::LlSmallAngle: return "ll";
        case Formula::SmallX: return "small-x";
        case Formula::SmallXSmallTheta: return "small-x-small-theta";
        case Formula::Quantized: return "quantized";
        case Formula::QuantizedSmallTheta: return "quantized-small-theta";
        case Formula::Envelope: return "envelope";
    }
    return "?";
}

ScatterPoint ScatterPoint::make(double theta, double p, double r0, const UnitSystem& u) {
    check_theta(theta);
    check_momentum(p);
    if (!(r0 > 0.0)) throw std::invalid_argument("ScatterPoint: r0 must be positive");
    u.validate();
    ScatterPoint pt;
    pt.theta = theta;
    pt.p = p;
    pt.q = 2.0 * p * abs_sin_half(theta) / u.hbar;
    pt.x = pt.q * r0;
    return pt;
}

XsecValue master_xsec(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                      const UnitSystem& u) {
    beam.validate();
    sol.validate();
    u.validate();
    check_theta(pt.theta);
    check_momentum(pt.p);
    if (beam.polarization.mode != PolarizationMode::SpinAveraged)
        throw std::domain_error("master_xsec is spin-averaged; use helicity_xsec for helicity states");
    const double s = abs_sin_half(pt.theta);
    const double j1 = bessel_j1(pt.x).value;
    const double pref = beam.charge * sol.flux / sol.r0;
    const double p3 = pt.p * pt.p * pt.p;
    const double value = (1.0 / beam.f_factor) * (u.hbar / (u.c * u.c)) * pref * pref * j1 * j1 /
                         (8.0 * M_PI * p3 * s * s * s * s);
    return {value, Formula::Master, regime_for_x(pt.x)};
}

XsecValue helicity_xsec(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                        const UnitSystem& u, int lambda_i, int lambda_f) {
    beam.validate();
    sol.validate();
    u.validate();
    check_theta(pt.theta);
    check_momentum(pt.p);
    const double hf = helicity_factor(lambda_i, lambda_f);
    const double s = abs_sin_half(pt.theta);
    const double j1 = bessel_j1(pt.x).value;
    const double pref = beam.charge * sol.flux / sol.r0;
    const double p3 = pt.p * pt.p * pt.p;
    const double value = (1.0 / (2.0 * M_PI)) * (u.hbar / (u.c * u.c)) * pref * pref * j1 * j1 /
                         (64.0 * p3 * s * s * s * s) * hf;
    return {value, Formula::Helicity, regime_for_x(pt.x)};
}

XsecValue ab_exact(double flux, double p, double theta, const UnitSystem& u) {
    u.validate();
    check_theta(theta);
    check_momentum(p);
    const double s = abs_sin_half(theta);
    const double arg = u.e_charge * flux / (2.0 * u.hbar * u.c);
    const double sn = std::sin(arg);
    const double value = u.hbar * sn * sn / (2.0 * M_PI * p * s * s);
    return {value, Formula::AbExact, Regime::SmallX};
}

XsecValue ll_small_angle(double flux, double p, double theta, const UnitSystem& u) {
    u.validate();
    check_theta(theta);
    check_momentum(p);
    return {ll_kernel(u.e_charge, flux, p, theta, u), Formula::LlSmallAngle, Regime::SmallX};
}

XsecValue small_x_reduction(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                            const UnitSystem& u) {
    beam.validate();
    sol.validate();
    u.validate();
    check_theta(pt.theta);
    check_momentum(pt.p);
    const double s = abs_sin_half(pt.theta);
    const double ephi = beam.charge * sol.flux;
    const double value = (1.0 / beam.f_factor) * ephi * ephi /
                         (8.0 * M_PI * u.c * u.c * u.hbar * pt.p * s * s);
    return {value, Formula::SmallX, regime_for_x(pt.x)};
}

XsecValue small_x_small_theta(const BeamSpec& beam, const SolenoidSpec& sol,
                              const ScatterPoint& pt, const UnitSystem& u) {
    beam.validate();
    sol.validate();
    u.validate();
    check_theta(pt.theta);
    check_momentum(pt.p);
    const double value =
        ll_kernel(beam.charge, sol.flux, pt.p, pt.theta, u) / beam.f_factor;
    return {value, Formula::SmallXSmallTheta, regime_for_x(pt.x)};
}

XsecValue quantized_xsec(int n, double r0, double p, double theta, int f, const UnitSystem& u) {
    u.validate();
    check_theta(theta);
    check_momentum(p);
    if (!(r0 > 0.0)) throw std::invalid_argument("quantized_xsec: r0 must be positive");
    if (f != 1 && f != 2) throw std::invalid_argument("quantized_xsec: f must be 1 or 2");
    const double s = abs_sin_half(theta);
    const double x = 2.0 * p * r0 * s / u.hbar;
    const double j1 = bessel_j1(x).value;
    const double h3 = u.hbar * u.hbar * u.hbar;
    const double value = static_cast<double>(n) * n * h3 * (M_PI / f) * j1 * j1 /
                         (2.0 * r0 * r0 * p * p * p * s * s * s * s);
    return {value, Formula::Quantized, regime_for_x(x)};
}

XsecValue quantized_small_theta(int n, double p, double theta, int f, const UnitSystem& u) {
    u.validate();
    check_theta(theta);
    check_momentum(p);
    if (f != 1 && f != 2)
        throw std::invalid_argument("quantized_small_theta: f must be 1 or 2");
    const double value =
        2.0 * M_PI * u.hbar * static_cast<double>(n) * n / (f * p * theta_sq(theta));
    return {value, Formula::QuantizedSmallTheta, Regime::SmallX};
}

XsecValue classical_envelope(const BeamSpec& beam, const SolenoidSpec& sol,
                             const ScatterPoint& pt, const UnitSystem& u) {
    beam.validate();
    sol.validate();
    u.validate();
    check_theta(pt.theta);
    check_momentum(pt.p);
    const double s = abs_sin_half(pt.theta);
    const double ephi2pc = beam.charge * sol.flux / (2.0 * M_PI * u.c);
    const double p4 = pt.p * pt.p * pt.p * pt.p;
    const double s5 = s * s * s * s * s;
    const double r03 = sol.r0 * sol.r0 * sol.r0;
    const double value =
        (u.hbar * u.hbar / beam.f_factor) * ephi2pc * ephi2pc / (2.0 * r03 * p4 * s5);
    return {value, Formula::Envelope, regime_for_x(pt.x)};
}

UniformFieldCoeff uniform_field_coeff(const BeamSpec& beam, double b0, const FourVector& p_i,
                                      const FourVector& p_f, const UnitSystem& u) {
    beam.validate();
    u.validate();
    const double csu = current_sq_uniform(p_i, p_f, beam.mass * u.c);
    const double pi_mag = spatial_norm(p_i);
    const double pf_mag = spatial_norm(p_f);
    const FourVector q = p_f - p_i;
    const double tol = 1e-8 * std::max(pi_mag, 1e-300);
    const DeltaFlags flags{std::fabs(q.x1) <= tol, std::fabs(q.x2) <= tol};

    const double cos_theta =
        (p_i.x1 * p_f.x1 + p_i.x2 * p_f.x2 + p_i.x3 * p_f.x3) / (pi_mag * pf_mag);
    const double sin2 = std::max(0.0, 1.0 - cos_theta * cos_theta);
    const double emb = beam.charge * beam.mass * b0;
    double value;
    if (sin2 == 0.0) {
        value = std::numeric_limits<double>::infinity();
    } else {
        value = 2.0 * M_PI * emb * emb * csu / (pi_mag * pi_mag * pi_mag * sin2);
    }
    return {value, flags};
}

}  // namespace solxs
