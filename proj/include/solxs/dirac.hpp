// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>

#include "solxs/fourvector.hpp"

namespace solxs {

using complexd = std::complex<double>;

struct Matrix4 {
    std::array<complexd, 16> a{};

    complexd& at(int r, int c) { return a[4 * r + c]; }
    const complexd& at(int r, int c) const { return a[4 * r + c]; }

    friend Matrix4 operator*(const Matrix4& m, const Matrix4& n);
    friend Matrix4 operator+(const Matrix4& m, const Matrix4& n);
    friend Matrix4 operator*(complexd s, const Matrix4& m);
    Matrix4 dagger() const;
    complexd trace() const;
    static Matrix4 identity();
};

using Spinor4 = std::array<complexd, 4>;

// Dirac matrices in a fixed representation. Bjorken-Drell everywhere in the
// library; other representations can be constructed in tests to check that
// spin sums do not depend on it.
struct GammaSet {
    std::array<Matrix4, 4> gamma;  // gamma^0 .. gamma^3
    Matrix4 id;

    static GammaSet bjorken_drell();
};

// v_mu gamma^mu for contravariant v.
Matrix4 slash(const FourVector& v, const GammaSet& g);

enum class Spin { Up, Down };

struct DiracSpinor {
    Spinor4 c{};
    FourVector momentum;
    double mass_c = 0.0;  // mc
};

// Free positive-energy solution, ubar u = 1, u^dag u = E/(mc^2). The momentum
// must be on shell against mass_c to 1e-8 relative.
DiracSpinor free_spinor(const FourVector& p, double mass_c, Spin s);

// Helicity eigenstate: sigma.phat on the upper (and lower) two components
// gives lambda times them. Rejects |p| = 0.
DiracSpinor helicity_spinor(const FourVector& p, double mass_c, int lambda);

// ubar_f M u_i
complexd bilinear(const DiracSpinor& uf, const Matrix4& M, const DiracSpinor& ui,
                  const GammaSet& g);

// (1 + li*lf)^2, the helicity selection weight.
double helicity_factor(int lambda_i, int lambda_f);

// The current the solenoid S matrix contracts is eps_{ij3} q_i gamma^j, the
// slash of the in-plane transfer rotated by 90 degrees. Exposed so the
// explicit-matrix and closed-form routes can share it.
FourVector epsilon_current_vector(const FourVector& q);

struct SpinSumRoutes {
    double explicit_sum;    // 4x4 matrix arithmetic over all spin pairs
    double invariant_form;  // Minkowski dot products only
    double kinematic;       // 16 p^4 sin^2(theta/2)
};

// Spin-averaged squared current for elastic in-plane kinematics
// (q0 = q3 = 0 enforced to 1e-8 relative), relativistic normalization, in
// momentum^4. All three routes agree to ~1e-14 relative.
SpinSumRoutes current_sq_avg_routes(const FourVector& p_i, const FourVector& p_f, double mass_c);
double current_sq_avg(const FourVector& p_i, const FourVector& p_f, double mass_c);

// |ubar(lf) (eps q gamma) u(li)|^2 with relativistic normalization.
double current_sq_helicity(const FourVector& p_i, const FourVector& p_f, double mass_c,
                           int lambda_i, int lambda_f);

struct UniformCurrentRoutes {
    double matrix_sum;  // (1/2) sum over spins of |ubar_f gamma^1 u_i|^2
    double trace_form;  // Tr[(pf_slash + mc) gamma^1 (pi_slash + mc) gamma^1] / (8 m^2 c^2)
};

// Spin-averaged |ubar_f gamma^1 u_i|^2 (ubar u = 1 normalization), the matrix
// element of the uniform-field problem.
UniformCurrentRoutes current_sq_uniform_routes(const FourVector& p_i, const FourVector& p_f,
                                               double mass_c);
double current_sq_uniform(const FourVector& p_i, const FourVector& p_f, double mass_c);

}  // namespace solxs
