// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "solxs/units.hpp"

namespace solxs {

// The published polar-plot dataset: one quantum of flux through a 1 cm
// solenoid, electron kinetic energies 1..49 MeV in 2 MeV steps, cross section
// scaled by 1e52. The theta grid is symmetric about 0 with a forward band
// excluded, so symmetry checks compare exact grid pairs.
struct Figure1Spec {
    double flux;                  // gauss cm^2
    double r0 = 1.0;              // cm
    double energy_min_mev = 1.0;
    double energy_step_mev = 2.0;
    int n_energies = 25;
    double scale = 1e52;
    double theta_band = 1e-3;     // exclude |theta| <= band
    int n_theta = 400;            // grid points per side

    static Figure1Spec defaults(const UnitSystem& u);  // flux = one quantum
    void validate() const;
};

struct Figure1Row {
    double energy_mev;
    double theta_rad;
    double sigma_scaled;
};

// Rows ordered by energy, then theta ascending from -pi to pi.
std::vector<Figure1Row> figure1_dataset(const Figure1Spec& spec, const UnitSystem& u);

// The positive half of the theta grid (band, pi], n points.
std::vector<double> figure1_theta_grid(const Figure1Spec& spec);

}  // namespace solxs
