// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/formfactor.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "solxs/bessel.hpp"
#include "solxs/quadrature.hpp"

namespace solxs {

double PlanarTransferQ::magnitude() const { return std::hypot(q1, q2); }

std::array<double, 2> PlanarTransferQ::direction() const {
    const double q = magnitude();
    return {q1 / q, q2 / q};
}

PlanarTransferQ PlanarTransferQ::from_polar(double q, double phi) {
    return {q * std::cos(phi), q * std::sin(phi)};
}

void PlanarTransferQ::validate() const {
    const double q = magnitude();
    if (!(q > 0.0) || !std::isfinite(q))
        throw std::domain_error("form factor: q = 0 (forward direction) is out of domain");
}

std::array<std::complex<double>, 2> FormFactorValue::components(const PlanarTransferQ& q) const {
    const auto qhat = q.direction();
    return {coeff * qhat[0], coeff * qhat[1]};
}

namespace {

void check_inputs(const PlanarTransferQ& q, double r0) {
    q.validate();
    if (!(r0 > 0.0)) throw std::invalid_argument("form factor: r0 must be positive");
}

void check_tol(double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-4))
        throw std::invalid_argument("form factor quadrature: tol must be in [1e-12, 1e-4]");
}

}  // namespace

FormFactorValue interior_analytic(const PlanarTransferQ& q, double r0) {
    check_inputs(q, r0);
    const double qm = q.magnitude();
    const double x = qm * r0;
    const BesselEval j0 = bessel_j0(x);
    const BesselEval j1 = bessel_j1(x);
    const double bracket = j0.value / x - 2.0 * j1.value / (x * x);
    const std::complex<double> coeff{0.0, 2.0 * M_PI * r0 * r0 * r0 * bracket};
    return {coeff, FFRegion::Interior, FFMethod::Analytic,
            2.0 * M_PI * r0 * r0 * r0 * (j0.est_error / x + 2.0 * j1.est_error / (x * x))};
}

FormFactorValue exterior_analytic(const PlanarTransferQ& q, double r0) {
    check_inputs(q, r0);
    const double qm = q.magnitude();
    const BesselEval j0 = bessel_j0(qm * r0);
    const std::complex<double> coeff{0.0, -2.0 * M_PI * j0.value / qm};
    return {coeff, FFRegion::Exterior, FFMethod::Analytic, 2.0 * M_PI * j0.est_error / qm};
}

namespace {

using Vec4 = std::array<double, 4>;  // re x1, im x1, re x2, im x2

// Angular integral of e^{-i q.x} x_i r at fixed radius: periodic smooth, so
// the doubling trapezoid converges spectrally. Budget-counted.
Vec4 angular_integral(const PlanarTransferQ& q, double r, double abs_tol, long& budget,
                      const char* who) {
    auto pass = [&](int m) {
        Vec4 acc{0, 0, 0, 0};
        for (int k = 0; k < m; ++k) {
            const double alpha = 2.0 * M_PI * k / m;
            const double x1 = r * std::cos(alpha);
            const double x2 = r * std::sin(alpha);
            const double phase = q.q1 * x1 + q.q2 * x2;
            const double c = std::cos(phase), s = -std::sin(phase);
            acc[0] += c * x1;
            acc[1] += s * x1;
            acc[2] += c * x2;
            acc[3] += s * x2;
        }
        const double w = 2.0 * M_PI * r / m;
        for (double& v : acc) v *= w;
        return acc;
    };
    int m = 16 + 4 * static_cast<int>(std::ceil(q.magnitude() * r));
    if (budget < 3L * m) throw QuadratureFailure(std::string(who) + ": budget exhausted", 0.0, 1.0);
    budget -= m;
    Vec4 prev = pass(m);
    for (int round = 0; round < 12; ++round) {
        m *= 2;
        if (budget < m)
            throw QuadratureFailure(std::string(who) + ": budget exhausted", 0.0, 1.0);
        budget -= m;
        const Vec4 cur = pass(m);
        double diff = 0.0;
        for (int i = 0; i < 4; ++i) diff = std::max(diff, std::fabs(cur[i] - prev[i]));
        prev = cur;
        if (diff < abs_tol) break;
    }
    return prev;
}

struct VecSegment {
    double a, b;
    Vec4 value;
    double error;
    bool operator<(const VecSegment& o) const { return error < o.error; }
};

// GK15 on the vector of components, error = max over components.
template <typename F>
VecSegment gk15_vec(F&& f, double a, double b) {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Vec4 resk{0, 0, 0, 0}, resg{0, 0, 0, 0};
    const Vec4 fc = f(mid);
    for (int i = 0; i < 4; ++i) {
        resk[i] = fc[i] * wgk[7];
        resg[i] = fc[i] * wg[3];
    }
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const Vec4 f1 = f(mid - dx);
        const Vec4 f2 = f(mid + dx);
        for (int i = 0; i < 4; ++i) {
            resk[i] += wgk[j] * (f1[i] + f2[i]);
            if (j % 2 == 1) resg[i] += wg[j / 2] * (f1[i] + f2[i]);
        }
    }
    VecSegment seg;
    seg.a = a;
    seg.b = b;
    seg.error = 0.0;
    for (int i = 0; i < 4; ++i) {
        seg.value[i] = resk[i] * h;
        seg.error = std::max(seg.error, std::fabs((resk[i] - resg[i]) * h));
    }
    return seg;
}

}  // namespace

FormFactorValue interior_quadrature(const PlanarTransferQ& q, double r0, double tol,
                                    const QuadratureOptions& opts) {
    check_inputs(q, r0);
    check_tol(tol);

    // tolerance scale: the coefficient magnitude is O(r0^3) across the x range
    const double scale = M_PI * r0 * r0 * r0;
    const double outer_tol = 0.2 * tol * scale;
    const double inner_tol = 0.02 * tol * scale / r0;

    long budget = opts.interior_budget;
    auto integrand = [&](double r) {
        return angular_integral(q, r, inner_tol, budget, "interior_quadrature");
    };

    std::priority_queue<VecSegment> heap;
    try {
        VecSegment first = gk15_vec(integrand, 0.0, r0);
        Vec4 total = first.value;
        double total_err = first.error;
        heap.push(first);
        while (total_err > outer_tol) {
            VecSegment worst = heap.top();
            const double mid = 0.5 * (worst.a + worst.b);
            if (mid <= worst.a || mid >= worst.b) break;
            heap.pop();
            VecSegment left = gk15_vec(integrand, worst.a, mid);
            VecSegment right = gk15_vec(integrand, mid, worst.b);
            for (int i = 0; i < 4; ++i)
                total[i] += left.value[i] + right.value[i] - worst.value[i];
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }
        const auto qhat = q.direction();
        const std::complex<double> v1{total[0], total[1]};
        const std::complex<double> v2{total[2], total[3]};
        return {v1 * qhat[0] + v2 * qhat[1], FFRegion::Interior, FFMethod::Quadrature,
                total_err + inner_tol * r0};
    } catch (const QuadratureFailure& e) {
        throw QuadratureFailure("interior_quadrature: budget of " +
                                    std::to_string(opts.interior_budget) +
                                    " integrand evaluations exhausted (achieved error " +
                                    std::to_string(e.achieved_error) + ")",
                                e.value, e.achieved_error);
    }
}

FormFactorValue exterior_quadrature(const PlanarTransferQ& q, double r0, double tol,
                                    const QuadratureOptions& opts) {
    check_inputs(q, r0);
    check_tol(tol);
    const double qm = q.magnitude();
    double cutoff = opts.exterior_cutoff;
    if (cutoff == 0.0) cutoff = r0 + 30.0 * M_PI / qm;
    if (cutoff < r0)
        throw std::invalid_argument("exterior_quadrature: cutoff below r0");

    double radial = 0.0, radial_err = 0.0;
    if (cutoff > r0) {
        auto f = [&](double r) { return bessel_j1(qm * r).value; };
        try {
            const QuadratureResult res =
                integrate_adaptive(f, r0, cutoff, 0.1 * tol / qm, 0.0, opts.exterior_budget);
            radial = res.value;
            radial_err = res.est_error;
        } catch (const QuadratureFailure& e) {
            throw QuadratureFailure(
                "exterior_quadrature: radial budget of " + std::to_string(opts.exterior_budget) +
                    " evaluations exhausted (achieved error " + std::to_string(e.achieved_error) +
                    ")",
                e.value, e.achieved_error);
        }
    }
    // analytic tail: int_R^inf J1(q r) dr = J0(q R)/q
    const BesselEval tail = bessel_j0(qm * cutoff);
    const double total = radial + tail.value / qm;
    const std::complex<double> coeff{0.0, -2.0 * M_PI * total};
    return {coeff, FFRegion::Exterior, FFMethod::Quadrature,
            2.0 * M_PI * (radial_err + tail.est_error / qm)};
}

std::complex<double> combined_coefficient(const PlanarTransferQ& q, double r0) {
    check_inputs(q, r0);
    const double r02 = r0 * r0;
    return interior_analytic(q, r0).coeff / r02 + exterior_analytic(q, r0).coeff;
}

}  // namespace solxs
