// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solxs {

namespace {

struct FitResult {
    double slope;
    double stderr_;
};

FitResult ols_loglog(const std::vector<std::pair<double, double>>& pts) {
    const int m = static_cast<int>(pts.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [s, v] : pts) {
        sx += std::log(s);
        sy += std::log(v);
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [s, v] : pts) {
        const double dx = std::log(s) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(v) - my);
    }
    const double slope = sxy / sxx;
    double ss_res = 0.0;
    for (const auto& [s, v] : pts) {
        const double r = (std::log(v) - my) - slope * (std::log(s) - mx);
        ss_res += r * r;
    }
    const double var = (m > 2) ? ss_res / (m - 2) : 0.0;
    return {slope, std::sqrt(var / sxx)};
}

std::vector<std::pair<double, double>> local_maxima(
    const std::vector<std::pair<double, double>>& samples) {
    std::vector<std::pair<double, double>> out;
    for (size_t i = 1; i + 1 < samples.size(); ++i)
        if (samples[i].second > samples[i - 1].second &&
            samples[i].second > samples[i + 1].second)
            out.push_back(samples[i]);
    return out;
}

ScanResult finish_scan(std::vector<std::pair<double, double>> samples, const char* who) {
    ScanResult res;
    res.samples = std::move(samples);
    res.maxima = local_maxima(res.samples);
    if (res.maxima.size() < 5)
        throw std::runtime_error(std::string(who) +
                                 ": fewer than 5 envelope maxima in the fit window");
    const FitResult fit = ols_loglog(res.maxima);
    res.slope = fit.slope;
    res.slope_stderr = fit.stderr_;
    return res;
}

void check_scan_range(double s_min, double s_max, int n, const char* who) {
    if (!(s_min > 0.0) || !(s_min < s_max))
        throw std::invalid_argument(std::string(who) + ": need 0 < s_min < s_max");
    if (n < 16) throw std::invalid_argument(std::string(who) + ": need at least 16 samples");
}

}  // namespace

RegimeReport regime_classify(const BeamSpec& beam, const SolenoidSpec& sol,
                             const ScatterPoint& pt, const UnitSystem& u,
                             const RegimeThresholds& thr) {
    beam.validate();
    sol.validate();
    u.validate();
    RegimeReport rep;
    rep.x = pt.x;
    rep.flux_ratio = beam.charge * sol.flux / (2.0 * u.hbar * u.c);
    if (pt.x < thr.small_x_max)
        rep.regime = Regime::SmallX;
    else if (pt.x > thr.asymptotic_min)
        rep.regime = Regime::Asymptotic;
    else
        rep.regime = Regime::Intermediate;
    rep.perturbative_ok = std::fabs(rep.flux_ratio) < thr.perturbative_flux_max;
    return rep;
}

ScanResult hbar_scan(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                     const UnitSystem& u, double s_min, double s_max, int n_samples) {
    check_scan_range(s_min, s_max, n_samples, "hbar_scan");
    // uniform in 1/s: the Bessel argument is proportional to 1/s, so this
    // samples the oscillation at constant phase steps
    std::vector<std::pair<double, double>> samples(n_samples);
    const double w_lo = 1.0 / s_max, w_hi = 1.0 / s_min;
    for (int j = 0; j < n_samples; ++j) {
        const double w = w_lo + (w_hi - w_lo) * j / (n_samples - 1.0);
        const double s = 1.0 / w;
        const UnitSystem us = scale_hbar(u, s);
        const ScatterPoint pts = ScatterPoint::make(pt.theta, beam.momentum_p, sol.r0, us);
        if (regime_for_x(pts.x) != Regime::Asymptotic)
            throw std::domain_error("hbar_scan: sample at s = " + std::to_string(s) +
                                    " falls outside the asymptotic regime");
        samples[n_samples - 1 - j] = {s, master_xsec(beam, sol, pts, us).value};
    }
    return finish_scan(std::move(samples), "hbar_scan");
}

ScanResult pr0_scan(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                    const UnitSystem& u, double s_min, double s_max, int n_samples) {
    check_scan_range(s_min, s_max, n_samples, "pr0_scan");
    std::vector<std::pair<double, double>> samples(n_samples);
    for (int j = 0; j < n_samples; ++j) {
        // uniform in s: the Bessel argument is proportional to s
        const double s = s_min + (s_max - s_min) * j / (n_samples - 1.0);
        SolenoidSpec sol_s = sol;
        sol_s.r0 = sol.r0 * s;
        const ScatterPoint pts = ScatterPoint::make(pt.theta, beam.momentum_p, sol_s.r0, u);
        if (regime_for_x(pts.x) != Regime::Asymptotic)
            throw std::domain_error("pr0_scan: sample at s = " + std::to_string(s) +
                                    " falls outside the asymptotic regime");
        samples[j] = {s, master_xsec(beam, sol_s, pts, u).value};
    }
    return finish_scan(std::move(samples), "pr0_scan");
}

double reduction_residual(const BeamSpec& beam, const SolenoidSpec& sol, const ScatterPoint& pt,
                          const UnitSystem& u) {
    if (!(pt.x < 1.0))
        throw std::domain_error("reduction_residual: x >= 1 is out of regime");
    const double master = master_xsec(beam, sol, pt, u).value;
    const double small = small_x_reduction(beam, sol, pt, u).value;
    return std::fabs(master / small - 1.0);
}

double window_average(const BeamSpec& beam, const SolenoidSpec& sol, const UnitSystem& u,
                      double theta_center, double dtheta, int n_samples) {
    if (!(dtheta > 0.0)) throw std::invalid_argument("window_average: dtheta must be positive");
    if (n_samples < 1) throw std::invalid_argument("window_average: need n >= 1");
    const double lo = theta_center - 0.5 * dtheta;
    const double hi = theta_center + 0.5 * dtheta;
    if (lo <= 0.0 && hi >= 0.0)
        throw std::domain_error("window_average: window straddles the forward direction");
    if (std::fabs(lo) > M_PI || std::fabs(hi) > M_PI)
        throw std::domain_error("window_average: window leaves (-pi, pi]");
    const double x_lo =
        ScatterPoint::make(std::fabs(lo) < std::fabs(hi) ? lo : hi, beam.momentum_p, sol.r0, u).x;
    if (regime_for_x(x_lo) != Regime::Asymptotic)
        throw std::domain_error("window_average: window is not in the asymptotic regime");
    double sum = 0.0;
    for (int j = 0; j < n_samples; ++j) {
        const double theta = lo + (j + 0.5) * dtheta / n_samples;
        const ScatterPoint pt = ScatterPoint::make(theta, beam.momentum_p, sol.r0, u);
        sum += master_xsec(beam, sol, pt, u).value;
    }
    return sum / n_samples;
}

}  // namespace solxs
