// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solxs {

Matrix4 operator*(const Matrix4& m, const Matrix4& n) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const complexd mik = m.at(i, k);
            if (mik == complexd{}) continue;
            for (int j = 0; j < 4; ++j) r.at(i, j) += mik * n.at(k, j);
        }
    return r;
}

Matrix4 operator+(const Matrix4& m, const Matrix4& n) {
    Matrix4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = m.a[i] + n.a[i];
    return r;
}

Matrix4 operator*(complexd s, const Matrix4& m) {
    Matrix4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = s * m.a[i];
    return r;
}

Matrix4 Matrix4::dagger() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

complexd Matrix4::trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }

Matrix4 Matrix4::identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
    return r;
}

GammaSet GammaSet::bjorken_drell() {
    GammaSet g;
    g.id = Matrix4::identity();
    const complexd I{0.0, 1.0};
    // gamma^0 = diag(1, 1, -1, -1)
    g.gamma[0].at(0, 0) = 1.0;
    g.gamma[0].at(1, 1) = 1.0;
    g.gamma[0].at(2, 2) = -1.0;
    g.gamma[0].at(3, 3) = -1.0;
    // gamma^k = [[0, sigma_k], [-sigma_k, 0]]
    g.gamma[1].at(0, 3) = 1.0;
    g.gamma[1].at(1, 2) = 1.0;
    g.gamma[1].at(2, 1) = -1.0;
    g.gamma[1].at(3, 0) = -1.0;
    g.gamma[2].at(0, 3) = -I;
    g.gamma[2].at(1, 2) = I;
    g.gamma[2].at(2, 1) = I;
    g.gamma[2].at(3, 0) = -I;
    g.gamma[3].at(0, 2) = 1.0;
    g.gamma[3].at(1, 3) = -1.0;
    g.gamma[3].at(2, 0) = -1.0;
    g.gamma[3].at(3, 1) = 1.0;
    return g;
}

Matrix4 slash(const FourVector& v, const GammaSet& g) {
    Matrix4 r;
    for (int i = 0; i < 16; ++i)
        r.a[i] = v.t * g.gamma[0].a[i] - v.x1 * g.gamma[1].a[i] - v.x2 * g.gamma[2].a[i] -
                 v.x3 * g.gamma[3].a[i];
    return r;
}

namespace {

void check_on_shell(const FourVector& p, double mass_c, const char* who) {
    const double scale =
        std::max({p.t * p.t, spatial_norm2(p), mass_c * mass_c, 1e-300});
    if (std::fabs(mdot(p, p) - mass_c * mass_c) > 1e-8 * scale)
        throw std::invalid_argument(std::string(who) + ": momentum is off shell");
    if (!(p.t > 0.0)) throw std::invalid_argument(std::string(who) + ": energy must be positive");
}

DiracSpinor assemble(const FourVector& p, double mass_c, const std::array<complexd, 2>& chi) {
    // lower doublet = (sigma.p) chi / (p_t + mc)
    const double denom = p.t + mass_c;
    const complexd l0 = (p.x3 * chi[0] + complexd(p.x1, -p.x2) * chi[1]) / denom;
    const complexd l1 = (complexd(p.x1, p.x2) * chi[0] - p.x3 * chi[1]) / denom;
    const double norm = std::sqrt(denom / (2.0 * mass_c));
    DiracSpinor u;
    u.c = {norm * chi[0], norm * chi[1], norm * l0, norm * l1};
    u.momentum = p;
    u.mass_c = mass_c;
    return u;
}

}  // namespace

DiracSpinor free_spinor(const FourVector& p, double mass_c, Spin s) {
    if (!(mass_c > 0.0)) throw std::invalid_argument("free_spinor: mass must be positive");
    check_on_shell(p, mass_c, "free_spinor");
    const std::array<complexd, 2> chi =
        (s == Spin::Up) ? std::array<complexd, 2>{1.0, 0.0} : std::array<complexd, 2>{0.0, 1.0};
    return assemble(p, mass_c, chi);
}

DiracSpinor helicity_spinor(const FourVector& p, double mass_c, int lambda) {
    if (!(mass_c > 0.0)) throw std::invalid_argument("helicity_spinor: mass must be positive");
    if (lambda != 1 && lambda != -1)
        throw std::invalid_argument("helicity_spinor: lambda must be +1 or -1");
    check_on_shell(p, mass_c, "helicity_spinor");
    const double pmag = spatial_norm(p);
    if (!(pmag > 0.0))
        throw std::invalid_argument("helicity_spinor: helicity undefined at zero momentum");
    const double ct = p.x3 / pmag;
    const double half = 0.5 * std::acos(std::clamp(ct, -1.0, 1.0));
    const double phi = std::atan2(p.x2, p.x1);
    const complexd eip = std::polar(1.0, phi);
    std::array<complexd, 2> chi;
    if (lambda == 1) {
        chi = {std::cos(half), eip * std::sin(half)};
    } else {
        chi = {-std::conj(eip) * std::sin(half), std::cos(half)};
    }
    return assemble(p, mass_c, chi);
}

complexd bilinear(const DiracSpinor& uf, const Matrix4& M, const DiracSpinor& ui,
                  const GammaSet& g) {
    // ubar = u^dag gamma^0
    Spinor4 ubar{};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) ubar[j] += std::conj(uf.c[i]) * g.gamma[0].at(i, j);
    complexd r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r += ubar[i] * M.at(i, j) * ui.c[j];
    return r;
}

double helicity_factor(int lambda_i, int lambda_f) {
    if ((lambda_i != 1 && lambda_i != -1) || (lambda_f != 1 && lambda_f != -1))
        throw std::invalid_argument("helicity_factor: lambdas must be +1 or -1");
    const double s = 1.0 + lambda_i * lambda_f;
    return s * s;
}

FourVector epsilon_current_vector(const FourVector& q) {
    // eps_{ij3} q_i gamma^j = slash of (0, q2, -q1, 0)
    return {0.0, q.x2, -q.x1, 0.0};
}

namespace {

void check_elastic_planar(const FourVector& p_i, const FourVector& p_f, const char* who) {
    const double scale = std::max({std::fabs(p_i.t), spatial_norm(p_i), 1e-300});
    const FourVector q = p_f - p_i;
    if (std::fabs(q.t) > 1e-8 * scale)
        throw std::invalid_argument(std::string(who) + ": q0 != 0 (inelastic kinematics)");
    if (std::fabs(q.x3) > 1e-8 * scale)
        throw std::invalid_argument(std::string(who) +
                                    ": q3 != 0 (axial momentum not conserved)");
}

}  // namespace

SpinSumRoutes current_sq_avg_routes(const FourVector& p_i, const FourVector& p_f, double mass_c) {
    check_on_shell(p_i, mass_c, "current_sq_avg");
    check_on_shell(p_f, mass_c, "current_sq_avg");
    check_elastic_planar(p_i, p_f, "current_sq_avg");

    const FourVector q = p_f - p_i;
    const FourVector a = epsilon_current_vector(q);

    // explicit sum over Bjorken-Drell spinors; (2mc)^2 restores relativistic
    // normalization so the result is in momentum^4
    const GammaSet g = GammaSet::bjorken_drell();
    const Matrix4 A = slash(a, g);
    double sum = 0.0;
    for (Spin si : {Spin::Up, Spin::Down})
        for (Spin sf : {Spin::Up, Spin::Down}) {
            const complexd m = bilinear(free_spinor(p_f, mass_c, sf), A,
                                        free_spinor(p_i, mass_c, si), g);
            sum += std::norm(m);
        }
    const double explicit_sum = 2.0 * mass_c * mass_c * sum;

    // half-trace of (pf_slash + mc) a_slash (pi_slash + mc) a_slash
    const double invariant_form =
        2.0 * (mdot(a, a) * (mass_c * mass_c - mdot(p_f, p_i)) + 2.0 * mdot(p_i, a) * mdot(p_f, a));

    // 16 p^4 sin^2(theta/2) = 4 p_perp^2 |q_perp|^2
    const double p_perp2 = p_i.x1 * p_i.x1 + p_i.x2 * p_i.x2;
    const double q_perp2 = q.x1 * q.x1 + q.x2 * q.x2;
    const double kinematic = 4.0 * p_perp2 * q_perp2;

    return {explicit_sum, invariant_form, kinematic};
}

double current_sq_avg(const FourVector& p_i, const FourVector& p_f, double mass_c) {
    return current_sq_avg_routes(p_i, p_f, mass_c).invariant_form;
}

double current_sq_helicity(const FourVector& p_i, const FourVector& p_f, double mass_c,
                           int lambda_i, int lambda_f) {
    check_on_shell(p_i, mass_c, "current_sq_helicity");
    check_on_shell(p_f, mass_c, "current_sq_helicity");
    check_elastic_planar(p_i, p_f, "current_sq_helicity");
    const GammaSet g = GammaSet::bjorken_drell();
    const Matrix4 A = slash(epsilon_current_vector(p_f - p_i), g);
    const complexd m = bilinear(helicity_spinor(p_f, mass_c, lambda_f), A,
                                helicity_spinor(p_i, mass_c, lambda_i), g);
    return 4.0 * mass_c * mass_c * std::norm(m);
}

UniformCurrentRoutes current_sq_uniform_routes(const FourVector& p_i, const FourVector& p_f,
                                               double mass_c) {
    check_on_shell(p_i, mass_c, "current_sq_uniform");
    check_on_shell(p_f, mass_c, "current_sq_uniform");
    const GammaSet g = GammaSet::bjorken_drell();

    double sum = 0.0;
    for (Spin si : {Spin::Up, Spin::Down})
        for (Spin sf : {Spin::Up, Spin::Down}) {
            const complexd m = bilinear(free_spinor(p_f, mass_c, sf), g.gamma[1],
                                        free_spinor(p_i, mass_c, si), g);
            sum += std::norm(m);
        }
    const double matrix_sum = 0.5 * sum;

    const Matrix4 pf_s = slash(p_f, g) + mass_c * g.id;
    const Matrix4 pi_s = slash(p_i, g) + mass_c * g.id;
    const Matrix4 prod = pf_s * g.gamma[1] * pi_s * g.gamma[1];
    const double trace_form = prod.trace().real() / (8.0 * mass_c * mass_c);

    return {matrix_sum, trace_form};
}

double current_sq_uniform(const FourVector& p_i, const FourVector& p_f, double mass_c) {
    return current_sq_uniform_routes(p_i, p_f, mass_c).trace_form;
}

}  // namespace solxs
