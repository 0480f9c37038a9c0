// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace solxs {

// Contravariant components, metric (+,-,-,-). Momentum four-vectors are kept
// in momentum units: p = (E/c, px, py, pz), so on-shell means p.p = (mc)^2.
struct FourVector {
    double t = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.t + b.t, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.t - b.t, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a.t, s * a.x1, s * a.x2, s * a.x3};
    }
};

inline double mdot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3;
}

inline double spatial_norm2(const FourVector& a) {
    return a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3;
}

inline double spatial_norm(const FourVector& a) { return std::sqrt(spatial_norm2(a)); }

// On-shell momentum with positive energy from spatial components and mc.
inline FourVector on_shell(double mass_c, double px, double py, double pz) {
    return {std::sqrt(mass_c * mass_c + px * px + py * py + pz * pz), px, py, pz};
}

}  // namespace solxs
