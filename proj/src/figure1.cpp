// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/figure1.hpp"

#include <cmath>
#include <stdexcept>

#include "solxs/xsec.hpp"

namespace solxs {

Figure1Spec Figure1Spec::defaults(const UnitSystem& u) {
    Figure1Spec spec;
    spec.flux = flux_quantum(u);
    return spec;
}

void Figure1Spec::validate() const {
    if (!(r0 > 0.0)) throw std::invalid_argument("Figure1Spec: r0 must be positive");
    if (!(theta_band > 0.0) || !(theta_band < M_PI))
        throw std::invalid_argument("Figure1Spec: theta band must lie in (0, pi)");
    if (n_theta < 2 || n_energies < 1)
        throw std::invalid_argument("Figure1Spec: grid sizes must be positive");
    if (!(energy_min_mev > 0.0) || !(energy_step_mev > 0.0))
        throw std::invalid_argument("Figure1Spec: energies must be positive");
}

std::vector<double> figure1_theta_grid(const Figure1Spec& spec) {
    spec.validate();
    std::vector<double> grid(spec.n_theta);
    const double lo = spec.theta_band;
    for (int j = 0; j < spec.n_theta; ++j)
        grid[j] = lo + (M_PI - lo) * (j + 1.0) / spec.n_theta;
    return grid;
}

std::vector<Figure1Row> figure1_dataset(const Figure1Spec& spec, const UnitSystem& u) {
    spec.validate();
    u.validate();
    const std::vector<double> half = figure1_theta_grid(spec);
    const SolenoidSpec sol = SolenoidSpec::from_flux(spec.r0, spec.flux);

    std::vector<Figure1Row> rows;
    rows.reserve(static_cast<size_t>(spec.n_energies) * 2 * half.size());
    for (int ie = 0; ie < spec.n_energies; ++ie) {
        const double energy_mev = spec.energy_min_mev + ie * spec.energy_step_mev;
        const double p = momentum_from_kinetic(energy_mev * kErgPerMeV, kElectronMassGram, u);
        BeamSpec beam{kElectronMassGram, p, u.e_charge, Polarization::spin_averaged(), 1};
        // negative leg first, mirrored from the positive grid
        for (auto it = half.rbegin(); it != half.rend(); ++it) {
            const ScatterPoint pt = ScatterPoint::make(-*it, p, sol.r0, u);
            rows.push_back({energy_mev, -*it, master_xsec(beam, sol, pt, u).value * spec.scale});
        }
        for (double theta : half) {
            const ScatterPoint pt = ScatterPoint::make(theta, p, sol.r0, u);
            rows.push_back({energy_mev, theta, master_xsec(beam, sol, pt, u).value * spec.scale});
        }
    }
    return rows;
}

}  // namespace solxs
