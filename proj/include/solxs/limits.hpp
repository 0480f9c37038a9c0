// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "solxs/units.hpp"
#include "solxs/xsec.hpp"

namespace solxs {

// The qualitative "<<" conditions, made operational. Overridable per call.
struct RegimeThresholds {
    double small_x_max = 0.01;
    double asymptotic_min = 10.0;
    double perturbative_flux_max = 0.1;  // on e Phi / (2 hbar c)
};

struct RegimeReport {
    double x;
    double flux_ratio;  // e Phi / (2 hbar c)
    Regime regime;
    bool perturbative_ok;
};

RegimeReport regime_classify(const BeamSpec& beam, const SolenoidSpec& sol,
                             const ScatterPoint& pt, const UnitSystem& u,
                             const RegimeThresholds& thr = {});

struct ScanResult {
    std::vector<std::pair<double, double>> samples;  // (scale s, sigma), s ascending
    std::vector<std::pair<double, double>> maxima;   // local maxima of the series
    double slope = 0.0;                              // log sigma_max vs log s
    double slope_stderr = 0.0;
};

// Evaluate master_xsec with hbar scaled by s over [s_min, s_max]. Samples are
// uniform in 1/s so the cos^2 oscillation is sampled evenly; every sample
// must land in the asymptotic regime. Envelope maxima are fitted by ordinary
// least squares in log-log; the slope comes out at 2.
ScanResult hbar_scan(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                     const UnitSystem& u, double s_min, double s_max, int n_samples);

// Same machinery scanning the solenoid radius r0 -> s * r0 at fixed hbar and
// fixed flux; envelope decays with slope -3.
ScanResult pr0_scan(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                    const UnitSystem& u, double s_min, double s_max, int n_samples);

// |master/small_x - 1|, the size of the correction the x << 1 reduction
// drops. Only defined for x < 1.
double reduction_residual(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                          const UnitSystem& u);

// Mean of master_xsec over [theta_center - dtheta/2, theta_center + dtheta/2]
// (n midpoint samples). The window must not straddle theta = 0 and must sit
// in the asymptotic regime. Over many oscillations this converges to half the
// classical envelope.
double window_average(const BeamSpec& beam, const SolenoidSpec& sol, const UnitSystem& u,
                      double theta_center, double dtheta, int n_samples);

}  // namespace solxs
