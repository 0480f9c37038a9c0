// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/units.hpp"

#include <cmath>
#include <stdexcept>

namespace solxs {

namespace {
constexpr double kHbarCgs = 1.054571817e-27;   // erg s
constexpr double kSpeedOfLightCgs = 2.99792458e10;  // cm/s
// Flux quantum hc/e in gauss cm^2; the charge unit below is defined from it.
constexpr double kFluxQuantumCgs = 4.318e-7;
}  // namespace

UnitSystem UnitSystem::cgs() {
    UnitSystem u;
    u.hbar = kHbarCgs;
    u.c = kSpeedOfLightCgs;
    u.e_charge = 2.0 * M_PI * kHbarCgs * kSpeedOfLightCgs / kFluxQuantumCgs;
    u.label = "cgs";
    return u;
}

UnitSystem UnitSystem::natural() {
    return UnitSystem{1.0, 1.0, 1.0, "natural"};
}

void UnitSystem::validate() const {
    if (!(hbar > 0.0) || !(c > 0.0) || !(e_charge > 0.0))
        throw std::invalid_argument("UnitSystem: hbar, c and e_charge must be positive");
}

double flux_quantum(const UnitSystem& u) {
    u.validate();
    return 2.0 * M_PI * u.hbar * u.c / u.e_charge;
}

UnitSystem scale_hbar(const UnitSystem& u, double s) {
    u.validate();
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("scale_hbar: scale must be positive and finite");
    UnitSystem v = u;
    v.hbar = u.hbar * s;
    return v;
}

double momentum_from_kinetic(double kinetic, double mass, const UnitSystem& u) {
    u.validate();
    if (kinetic < 0.0) throw std::invalid_argument("momentum_from_kinetic: kinetic energy < 0");
    if (mass < 0.0) throw std::invalid_argument("momentum_from_kinetic: mass < 0");
    const double mc2 = mass * u.c * u.c;
    const double total = kinetic + mc2;
    // (T + mc^2)^2 - (mc^2)^2 = T (T + 2 mc^2), which avoids cancellation
    return std::sqrt(kinetic * (total + mc2)) / u.c;
}

Polarization Polarization::helicity(int li, int lf) {
    if ((li != 1 && li != -1) || (lf != 1 && lf != -1))
        throw std::invalid_argument("Polarization::helicity: lambdas must be +1 or -1");
    Polarization p;
    p.mode = PolarizationMode::Helicity;
    p.lambda_i = li;
    p.lambda_f = lf;
    return p;
}

void BeamSpec::validate() const {
    if (mass < 0.0) throw std::invalid_argument("BeamSpec: mass < 0");
    if (momentum_p < 0.0) throw std::invalid_argument("BeamSpec: momentum < 0");
    if (f_factor != 1 && f_factor != 2)
        throw std::invalid_argument("BeamSpec: f_factor must be 1 or 2");
}

SolenoidSpec SolenoidSpec::from_flux(double r0, double flux) {
    SolenoidSpec s{r0, flux};
    s.validate();
    return s;
}

SolenoidSpec SolenoidSpec::from_quanta(double r0, int n, const UnitSystem& u) {
    SolenoidSpec s{r0, static_cast<double>(n) * flux_quantum(u)};
    s.validate();
    return s;
}

void SolenoidSpec::validate() const {
    if (!(r0 > 0.0)) throw std::invalid_argument("SolenoidSpec: r0 must be positive");
    if (!std::isfinite(flux)) throw std::invalid_argument("SolenoidSpec: flux must be finite");
}

}  // namespace solxs
