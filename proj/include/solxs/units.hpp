// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace solxs {

// Everything is Gaussian CGS: lengths in cm, momenta in g cm/s, energies in
// erg, charge in esu, magnetic flux in gauss cm^2. hbar and c are carried as
// independently scalable parameters so Planck-limit scans are ordinary
// operations on the unit system rather than a special mode.
struct UnitSystem {
    double hbar;       // erg s
    double c;          // cm/s
    double e_charge;   // esu
    std::string label;

    // Physical Gaussian CGS. The charge unit is fixed by requiring the flux
    // quantum 2*pi*hbar*c/e to come out at 4.318e-7 gauss cm^2.
    static UnitSystem cgs();

    // hbar = c = e = 1.
    static UnitSystem natural();

    void validate() const;
};

// Flux quantum 2*pi*hbar*c/e.
double flux_quantum(const UnitSystem& u);

// Copy of u with hbar multiplied by s (s > 0); c, e untouched.
UnitSystem scale_hbar(const UnitSystem& u, double s);

// p = sqrt((T + m c^2)^2 - m^2 c^4)/c for kinetic energy T >= 0, mass m >= 0.
double momentum_from_kinetic(double kinetic, double mass, const UnitSystem& u);

enum class PolarizationMode { SpinAveraged, Helicity };

struct Polarization {
    PolarizationMode mode = PolarizationMode::SpinAveraged;
    int lambda_i = +1;  // only read in Helicity mode
    int lambda_f = +1;

    static Polarization spin_averaged() { return {}; }
    static Polarization helicity(int li, int lf);
};

struct BeamSpec {
    double mass;        // g
    double momentum_p;  // g cm/s
    double charge;      // esu
    Polarization polarization = Polarization::spin_averaged();
    int f_factor = 1;   // 1 or 2: final polarization not measured / measured

    void validate() const;
};

struct SolenoidSpec {
    double r0;    // cm
    double flux;  // gauss cm^2

    static SolenoidSpec from_flux(double r0, double flux);
    // flux = n * flux_quantum(u), exactly under the active unit system
    static SolenoidSpec from_quanta(double r0, int n, const UnitSystem& u);

    void validate() const;
};

// CODATA electron mass; beams entered in MeV through the CLI are electrons.
inline constexpr double kElectronMassGram = 9.1093837015e-28;
inline constexpr double kErgPerMeV = 1.602176634e-6;

}  // namespace solxs
