// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "solxs/bessel.hpp"
#include "solxs/figure1.hpp"
#include "solxs/limits.hpp"
#include "solxs/units.hpp"
#include "solxs/xsec.hpp"

namespace py = pybind11;
using namespace solxs;

PYBIND11_MODULE(_solxs, m) {
    m.doc() = "Born cross sections for Dirac particles on a solenoidal magnetic field";

    py::class_<UnitSystem>(m, "UnitSystem")
        .def_static("cgs", &UnitSystem::cgs)
        .def_static("natural", &UnitSystem::natural)
        .def_readwrite("hbar", &UnitSystem::hbar)
        .def_readwrite("c", &UnitSystem::c)
        .def_readwrite("e_charge", &UnitSystem::e_charge)
        .def_readonly("label", &UnitSystem::label);

    m.def("flux_quantum", &flux_quantum, py::arg("u"));
    m.def("scale_hbar", &scale_hbar, py::arg("u"), py::arg("s"));
    m.def("momentum_from_kinetic", &momentum_from_kinetic, py::arg("kinetic"), py::arg("mass"),
          py::arg("u"));
    m.attr("ELECTRON_MASS_G") = kElectronMassGram;
    m.attr("ERG_PER_MEV") = kErgPerMeV;

    py::class_<Polarization>(m, "Polarization")
        .def_static("spin_averaged", &Polarization::spin_averaged)
        .def_static("helicity", &Polarization::helicity, py::arg("lambda_i"), py::arg("lambda_f"));

    py::class_<BeamSpec>(m, "BeamSpec")
        .def(py::init([](double mass, double momentum_p, double charge, int f) {
                 BeamSpec b{mass, momentum_p, charge, Polarization::spin_averaged(), f};
                 b.validate();
                 return b;
             }),
             py::arg("mass"), py::arg("momentum_p"), py::arg("charge"), py::arg("f") = 1)
        .def_readwrite("mass", &BeamSpec::mass)
        .def_readwrite("momentum_p", &BeamSpec::momentum_p)
        .def_readwrite("charge", &BeamSpec::charge)
        .def_readwrite("f_factor", &BeamSpec::f_factor);

    py::class_<SolenoidSpec>(m, "SolenoidSpec")
        .def_static("from_flux", &SolenoidSpec::from_flux, py::arg("r0"), py::arg("flux"))
        .def_static("from_quanta", &SolenoidSpec::from_quanta, py::arg("r0"), py::arg("n"),
                    py::arg("u"))
        .def_readwrite("r0", &SolenoidSpec::r0)
        .def_readwrite("flux", &SolenoidSpec::flux);

    py::class_<BesselEval>(m, "BesselEval")
        .def_readonly("value", &BesselEval::value)
        .def_readonly("est_error", &BesselEval::est_error);
    m.def("bessel_j0", [](double x) { return bessel_j0(x); });
    m.def("bessel_j1", [](double x) { return bessel_j1(x); });
    m.def("bessel_j1_asymptotic", &bessel_j1_asymptotic);
    m.def("bessel_j1_zero", &bessel_j1_zero);

    py::enum_<Regime>(m, "Regime")
        .value("SmallX", Regime::SmallX)
        .value("Intermediate", Regime::Intermediate)
        .value("Asymptotic", Regime::Asymptotic);

    py::class_<ScatterPoint>(m, "ScatterPoint")
        .def_static("make", &ScatterPoint::make, py::arg("theta"), py::arg("p"), py::arg("r0"),
                    py::arg("u"))
        .def_readonly("theta", &ScatterPoint::theta)
        .def_readonly("p", &ScatterPoint::p)
        .def_readonly("q", &ScatterPoint::q)
        .def_readonly("x", &ScatterPoint::x);

    py::class_<XsecValue>(m, "XsecValue")
        .def_readonly("value", &XsecValue::value)
        .def_readonly("regime", &XsecValue::regime)
        .def_property_readonly("formula",
                               [](const XsecValue& v) { return formula_name(v.formula); });

    m.def("master_xsec", &master_xsec);
    m.def("helicity_xsec", &helicity_xsec);
    m.def("ab_exact", &ab_exact);
    m.def("ll_small_angle", &ll_small_angle);
    m.def("small_x_reduction", &small_x_reduction);
    m.def("small_x_small_theta", &small_x_small_theta);
    m.def("quantized_xsec", &quantized_xsec);
    m.def("quantized_small_theta", &quantized_small_theta);
    m.def("classical_envelope", &classical_envelope);

    py::class_<RegimeReport>(m, "RegimeReport")
        .def_readonly("x", &RegimeReport::x)
        .def_readonly("flux_ratio", &RegimeReport::flux_ratio)
        .def_readonly("regime", &RegimeReport::regime)
        .def_readonly("perturbative_ok", &RegimeReport::perturbative_ok);
    m.def("regime_classify",
          [](const BeamSpec& b, const SolenoidSpec& s, const ScatterPoint& pt,
             const UnitSystem& u) { return regime_classify(b, s, pt, u); });

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("samples", &ScanResult::samples)
        .def_readonly("maxima", &ScanResult::maxima)
        .def_readonly("slope", &ScanResult::slope)
        .def_readonly("slope_stderr", &ScanResult::slope_stderr);
    m.def("hbar_scan", &hbar_scan);
    m.def("pr0_scan", &pr0_scan);
    m.def("reduction_residual", &reduction_residual);
    m.def("window_average", &window_average);

    py::class_<Figure1Spec>(m, "Figure1Spec")
        .def_static("defaults", &Figure1Spec::defaults)
        .def_readwrite("flux", &Figure1Spec::flux)
        .def_readwrite("r0", &Figure1Spec::r0)
        .def_readwrite("n_theta", &Figure1Spec::n_theta)
        .def_readwrite("theta_band", &Figure1Spec::theta_band);
    m.def("figure1_dataset", [](const Figure1Spec& spec, const UnitSystem& u) {
        py::list out;
        for (const Figure1Row& r : figure1_dataset(spec, u))
            out.append(py::make_tuple(r.energy_mev, r.theta_rad, r.sigma_scaled));
        return out;
    });
}
