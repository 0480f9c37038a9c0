// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "solxs/figure1.hpp"
#include "solxs/io.hpp"
#include "solxs/limits.hpp"
#include "solxs/units.hpp"
#include "solxs/verify.hpp"
#include "solxs/xsec.hpp"

namespace solxs {

namespace {

struct Options {
    std::string units = "cgs";
    std::string formula = "master";
    double energy_mev = -1.0;
    double p = -1.0;  // momentum, active units
    double mass_mev = 0.51099895;
    double theta = 0.0;
    double theta_min = 0.0, theta_max = 0.0;
    int points = 200;
    double r0 = 1.0;
    double flux = 0.0;
    int quanta = 0;
    bool flux_set = false, quanta_set = false, theta_set = false;
    bool energy_set = false, p_set = false;
    int f = 1;
    int lambda_i = 1, lambda_f = 1;
    double smin = 0.0, smax = 0.0;
    int grid = 50;
    std::uint64_t seed = 20200915ull;
    double band = 1e-3;
    int fig_n_theta = 400;
    long interior_budget = 1'000'000;
    long exterior_budget = 100'000;
    std::string out;
    std::string format = "csv";
};

UnitSystem resolve_units(const Options& o) {
    if (o.units == "cgs") return UnitSystem::cgs();
    if (o.units == "natural") return UnitSystem::natural();
    throw std::invalid_argument("unknown unit system: " + o.units + " (use cgs or natural)");
}

double resolve_momentum(const Options& o, const UnitSystem& u) {
    if (o.p_set) return o.p;
    if (o.energy_set) {
        if (o.units != "cgs")
            throw std::invalid_argument("--energy-mev needs --units cgs; give --p instead");
        const double mass = o.mass_mev * kErgPerMeV / (u.c * u.c);
        return momentum_from_kinetic(o.energy_mev * kErgPerMeV, mass, u);
    }
    throw std::invalid_argument("give the beam momentum with --energy-mev or --p");
}

BeamSpec resolve_beam(const Options& o, const UnitSystem& u) {
    BeamSpec beam;
    beam.mass = (o.units == "cgs") ? o.mass_mev * kErgPerMeV / (u.c * u.c) : 1.0;
    beam.momentum_p = resolve_momentum(o, u);
    beam.charge = u.e_charge;
    beam.f_factor = o.f;
    beam.polarization = (o.formula == "helicity")
                            ? Polarization::helicity(o.lambda_i, o.lambda_f)
                            : Polarization::spin_averaged();
    beam.validate();
    return beam;
}

SolenoidSpec resolve_solenoid(const Options& o, const UnitSystem& u) {
    if (o.flux_set && o.quanta_set)
        throw std::invalid_argument("--flux and --quanta are mutually exclusive");
    if (o.flux_set) return SolenoidSpec::from_flux(o.r0, o.flux);
    return SolenoidSpec::from_quanta(o.r0, o.quanta_set ? o.quanta : 1, u);
}

XsecValue evaluate_formula(const Options& o, const BeamSpec& beam, const SolenoidSpec& sol,
                           double theta, const UnitSystem& u) {
    const ScatterPoint pt = ScatterPoint::make(theta, beam.momentum_p, sol.r0, u);
    if (o.formula == "master") return master_xsec(beam, sol, pt, u);
    if (o.formula == "helicity") return helicity_xsec(beam, sol, pt, u, o.lambda_i, o.lambda_f);
    if (o.formula == "ab") return ab_exact(sol.flux, beam.momentum_p, theta, u);
    if (o.formula == "ll") return ll_small_angle(sol.flux, beam.momentum_p, theta, u);
    if (o.formula == "small-x") return small_x_reduction(beam, sol, pt, u);
    if (o.formula == "small-x-small-theta") return small_x_small_theta(beam, sol, pt, u);
    if (o.formula == "quantized")
        return quantized_xsec(o.quanta_set ? o.quanta : 1, sol.r0, beam.momentum_p, theta, o.f, u);
    if (o.formula == "envelope") return classical_envelope(beam, sol, pt, u);
    throw std::invalid_argument("unknown formula: " + o.formula);
}

std::ostream* open_out(const Options& o, std::ofstream& file) {
    if (o.out.empty()) return &std::cout;
    file.open(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file for writing: " + o.out);
    return &file;
}

int cmd_xsec_point(const Options& o) {
    const UnitSystem u = resolve_units(o);
    if (!o.theta_set) throw std::invalid_argument("xsec point needs --theta");
    const BeamSpec beam = resolve_beam(o, u);
    const SolenoidSpec sol = resolve_solenoid(o, u);
    const XsecValue v = evaluate_formula(o, beam, sol, o.theta, u);

    std::ofstream file;
    std::ostream& os = *open_out(o, file);
    if (o.format == "json") {
        os << "{\"formula\":\"" << formula_name(v.formula) << "\",";
        os << "\"inputs\":{\"units\":\"" << u.label << "\",\"theta_rad\":"
           << format_double(o.theta) << ",\"p\":" << format_double(beam.momentum_p)
           << ",\"r0\":" << format_double(sol.r0) << ",\"flux\":" << format_double(sol.flux)
           << ",\"f\":" << beam.f_factor;
        if (o.formula == "helicity")
            os << ",\"lambda_i\":" << o.lambda_i << ",\"lambda_f\":" << o.lambda_f;
        os << "},";
        os << "\"value_cm_per_rad\":" << format_double(v.value) << ",";
        os << "\"regime\":\"" << regime_name(v.regime) << "\"}\n";
    } else if (o.format == "csv") {
        os << "formula,theta_rad,p,r0,flux,f,value_cm_per_rad,regime\n";
        os << formula_name(v.formula) << "," << format_double(o.theta) << ","
           << format_double(beam.momentum_p) << "," << format_double(sol.r0) << ","
           << format_double(sol.flux) << "," << beam.f_factor << "," << format_double(v.value)
           << "," << regime_name(v.regime) << "\n";
    } else {
        throw std::invalid_argument("unknown output format: " + o.format);
    }
    return 0;
}

int cmd_xsec_scan_theta(const Options& o) {
    const UnitSystem u = resolve_units(o);
    if (!(o.theta_min < o.theta_max))
        throw std::invalid_argument("xsec scan-theta needs --theta-min < --theta-max");
    if (o.points < 2) throw std::invalid_argument("xsec scan-theta needs --points >= 2");
    const BeamSpec beam = resolve_beam(o, u);
    const SolenoidSpec sol = resolve_solenoid(o, u);
    Table t;
    t.metadata = {"formula = " + o.formula, "units = " + u.label};
    t.columns = {"theta_rad", "sigma_cm_per_rad"};
    for (int i = 0; i < o.points; ++i) {
        const double theta = o.theta_min + (o.theta_max - o.theta_min) * i / (o.points - 1.0);
        t.rows.push_back({theta, evaluate_formula(o, beam, sol, theta, u).value});
    }
    emit(t, o.format, o.out);
    return 0;
}

int cmd_limits_scan(const Options& o, bool hbar) {
    const UnitSystem u = resolve_units(o);
    if (!o.theta_set) throw std::invalid_argument("limits scans need --theta");
    if (!(o.smin > 0.0) || !(o.smin < o.smax))
        throw std::invalid_argument("limits scans need 0 < --smin < --smax");
    const BeamSpec beam = resolve_beam(o, u);
    const SolenoidSpec sol = resolve_solenoid(o, u);
    const ScatterPoint pt = ScatterPoint::make(o.theta, beam.momentum_p, sol.r0, u);
    const ScanResult res = hbar ? hbar_scan(beam, sol, pt, u, o.smin, o.smax, o.points)
                                : pr0_scan(beam, sol, pt, u, o.smin, o.smax, o.points);
    Table t;
    t.metadata = {std::string("scan = ") + (hbar ? "hbar" : "pr0"), "units = " + u.label};
    t.columns = {"s", "sigma_cm_per_rad"};
    for (const auto& [s, v] : res.samples) t.rows.push_back({s, v});
    emit(t, "csv", o.out);
    // fit summary always on stdout as JSON
    std::cout << "{\"slope\":" << format_double(res.slope)
              << ",\"stderr\":" << format_double(res.slope_stderr)
              << ",\"n_maxima\":" << res.maxima.size() << "}\n";
    return 0;
}

int cmd_figure1(const Options& o) {
    const UnitSystem u = resolve_units(o);
    Figure1Spec spec = Figure1Spec::defaults(u);
    if (o.flux_set) spec.flux = o.flux;
    if (o.quanta_set) spec.flux = o.quanta * flux_quantum(u);
    spec.r0 = o.r0;
    spec.theta_band = o.band;
    spec.n_theta = o.fig_n_theta;
    Table t;
    t.columns = {"energy_mev", "theta_rad", "sigma_scaled"};
    for (const Figure1Row& r : figure1_dataset(spec, u))
        t.rows.push_back({r.energy_mev, r.theta_rad, r.sigma_scaled});
    emit(t, o.format, o.out);
    return 0;
}

int cmd_verify_bessel(const Options& o) {
    std::ofstream file;
    std::ostream& os = *open_out(o, file);
    bool all_pass = true;
    os << "check,max_residual,threshold,pass\n";
    for (const CheckLine& line : verify_bessel()) {
        os << line.check << "," << format_double(line.value) << ","
           << format_double(line.threshold) << "," << (line.pass ? "1" : "0") << "\n";
        all_pass = all_pass && line.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_verify_spinsum(const Options& o) {
    const SpinsumVerify res = verify_spinsum(o.points, o.seed);
    std::ofstream file;
    std::ostream& os = *open_out(o, file);
    os << "# seed = " << res.seed << "\n# points = " << res.points << "\n";
    os << "check,max_residual,threshold,pass\n";
    const bool pass = res.max_pairwise_rel < 1e-10;
    os << "spinsum_pairwise_rel," << format_double(res.max_pairwise_rel) << ",1e-10,"
       << (pass ? "1" : "0") << "\n";
    return pass ? 0 : 1;
}

int cmd_verify_formfactor(const Options& o) {
    QuadratureOptions qopts;
    qopts.interior_budget = o.interior_budget;
    qopts.exterior_budget = o.exterior_budget;
    const FormFactorVerify res = verify_formfactor(o.grid, 1e-9, qopts);
    std::ofstream file;
    std::ostream& os = *open_out(o, file);
    os << "qr0,region,analytic_im,quadrature_im,rel_error\n";
    for (const auto& r : res.rows)
        os << format_double(r.qr0) << "," << r.region << "," << format_double(r.analytic_im)
           << "," << format_double(r.quadrature_im) << "," << format_double(r.rel_error) << "\n";
    os << "# max_rel_error = " << format_double(res.max_rel_error) << "\n";
    os << "# max_combined_residual = " << format_double(res.max_combined_residual) << "\n";
    return (res.max_rel_error < 1e-6 && res.max_combined_residual < 1e-12) ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    Options o;
    CLI::App app{"Born cross sections for Dirac particles on a solenoidal magnetic field"};
    app.fallthrough();

    const char* env_cfg = std::getenv("SOLENOID_XSEC_CONFIG");
    app.set_config("--config", env_cfg ? env_cfg : "", "key = value configuration file");

    app.add_option("--units", o.units, "Unit system: cgs or natural")->capture_default_str();
    app.add_option("--formula", o.formula,
                   "master|helicity|ab|ll|small-x|small-x-small-theta|quantized|envelope")
        ->capture_default_str();
    auto* oe = app.add_option("--energy-mev", o.energy_mev, "Beam kinetic energy (MeV, cgs only)");
    auto* op = app.add_option("--p", o.p, "Beam momentum (active units)");
    app.add_option("--mass-mev", o.mass_mev, "Beam mass (MeV/c^2, cgs only)")
        ->capture_default_str();
    auto* ot = app.add_option("--theta", o.theta, "Scattering angle (rad), nonzero");
    app.add_option("--theta-min", o.theta_min, "Scan start angle (rad)");
    app.add_option("--theta-max", o.theta_max, "Scan end angle (rad)");
    app.add_option("--points", o.points, "Number of samples for scans/verification")
        ->capture_default_str();
    app.add_option("--r0-cm", o.r0, "Solenoid radius (cm or natural length)")
        ->capture_default_str();
    auto* of = app.add_option("--flux", o.flux, "Magnetic flux (gauss cm^2)");
    auto* oq = app.add_option("--quanta", o.quanta, "Flux as integer multiples of 2 pi hbar c/e");
    app.add_option("--f", o.f, "Final-polarization factor, 1 or 2")->capture_default_str();
    app.add_option("--lambda-i", o.lambda_i, "Initial helicity (+1 or -1)")
        ->capture_default_str();
    app.add_option("--lambda-f", o.lambda_f, "Final helicity (+1 or -1)")->capture_default_str();
    app.add_option("--smin", o.smin, "Scan scale lower bound");
    app.add_option("--smax", o.smax, "Scan scale upper bound");
    app.add_option("--grid", o.grid, "Verification grid size")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for randomized verification grids")
        ->capture_default_str();
    app.add_option("--band", o.band, "Excluded forward band |theta| <= band (rad)")
        ->capture_default_str();
    app.add_option("--n-theta", o.fig_n_theta, "Grid points per theta side")
        ->capture_default_str();
    app.add_option("--interior-budget", o.interior_budget,
                   "Interior quadrature evaluation budget")
        ->capture_default_str();
    app.add_option("--exterior-budget", o.exterior_budget,
                   "Exterior radial quadrature evaluation budget")
        ->capture_default_str();
    app.add_option("--out", o.out, "Output path (default: stdout)");
    app.add_option("--format", o.format, "Output format: csv or json")->capture_default_str();

    auto* xsec_cmd = app.add_subcommand("xsec", "Differential cross sections");
    auto* xsec_point = xsec_cmd->add_subcommand("point", "One angle, one formula");
    auto* xsec_scan = xsec_cmd->add_subcommand("scan-theta", "Angular scan");
    auto* limits_cmd = app.add_subcommand("limits", "Planck-limit scans");
    auto* scan_hbar = limits_cmd->add_subcommand("scan-hbar", "Scale hbar, fit the envelope");
    auto* scan_pr0 = limits_cmd->add_subcommand("scan-pr0", "Scale r0, fit the envelope");
    auto* figure1_cmd = app.add_subcommand("figure1", "Published polar-plot dataset");
    auto* verify_cmd = app.add_subcommand("verify", "Self-checks against independent oracles");
    auto* verify_bessel_cmd = verify_cmd->add_subcommand("bessel", "Bessel identities/oracle");
    auto* verify_spinsum_cmd = verify_cmd->add_subcommand("spinsum", "Spin-sum agreement");
    auto* verify_ff_cmd = verify_cmd->add_subcommand("formfactor", "Form-factor oracle");
    for (CLI::App* sub : {xsec_cmd, xsec_point, xsec_scan, limits_cmd, scan_hbar, scan_pr0,
                          figure1_cmd, verify_cmd, verify_bessel_cmd, verify_spinsum_cmd,
                          verify_ff_cmd})
        sub->fallthrough();
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    o.theta_set = ot->count() > 0;
    o.flux_set = of->count() > 0;
    o.quanta_set = oq->count() > 0;
    o.energy_set = oe->count() > 0;
    o.p_set = op->count() > 0;

    try {
        if (xsec_point->parsed()) return cmd_xsec_point(o);
        if (xsec_scan->parsed()) return cmd_xsec_scan_theta(o);
        if (scan_hbar->parsed()) return cmd_limits_scan(o, true);
        if (scan_pr0->parsed()) return cmd_limits_scan(o, false);
        if (figure1_cmd->parsed()) return cmd_figure1(o);
        if (verify_bessel_cmd->parsed()) return cmd_verify_bessel(o);
        if (verify_spinsum_cmd->parsed()) return cmd_verify_spinsum(o);
        if (verify_ff_cmd->parsed()) return cmd_verify_formfactor(o);
        std::cerr << "error: no command given (try --help)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace solxs
