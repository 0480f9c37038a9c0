// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/bessel.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace solxs {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;
constexpr double kSeriesMax = 12.0;     // series branch below
constexpr double kHankelDirect = 20.0;  // plain Hankel evaluation from here up

void check_argument(double x, const char* who) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(who) + ": non-finite argument");
    if (x < 0.0) throw std::invalid_argument(std::string(who) + ": negative argument");
}

// Ascending series, accumulated in long double. Worst cancellation is at the
// branch edge x = 12 and stays below ~1e-15 absolute.
BesselEval j0_series(double x) {
    const long double z = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L, max_term = 1.0L;
    for (int k = 1; k < 80; ++k) {
        term *= -z / (static_cast<long double>(k) * k);
        sum += term;
        if (fabsl(term) > max_term) max_term = fabsl(term);
        if (fabsl(term) < 1e-22L * fabsl(sum) + 1e-32L) break;
    }
    const double err = static_cast<double>(max_term) * 1.1e-19 + 1e-18;
    return {static_cast<double>(sum), BesselBranch::Series, err};
}

BesselEval j1_series(double x) {
    const long double z = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L, max_term = 1.0L;
    for (int k = 1; k < 80; ++k) {
        term *= -z / (static_cast<long double>(k) * (k + 1));
        sum += term;
        if (fabsl(term) > max_term) max_term = fabsl(term);
        if (fabsl(term) < 1e-22L * fabsl(sum) + 1e-32L) break;
    }
    const double err = static_cast<double>(max_term) * 1.1e-19 * (x / 2) + 1e-18;
    return {static_cast<double>(x / 2.0L * sum), BesselBranch::Series, err};
}

// Hankel expansion J_nu ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)] with
// chi = x - (2 nu + 1) pi/4. t_k = prod_{j<=k}(mu - (2j-1)^2) / (k! (8x)^k),
// P = sum over even k of (-1)^{k/2} t_k, Q over odd k of (-1)^{(k-1)/2} t_k.
// Truncated at the smallest term.
void hankel_pq(int nu, double x, long double& P, long double& Q, double& trunc) {
    const long double mu = 4.0L * nu * nu;
    const long double x8 = 8.0L * x;
    long double term = 1.0L;
    P = 1.0L;
    Q = 0.0L;
    long double prev = std::numeric_limits<long double>::max();
    trunc = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        term *= (mu - odd * odd) / (x8 * k);
        const long double mag = fabsl(term);
        if (mag >= prev) break;  // asymptotic tail turned around
        prev = mag;
        if (k % 2 == 1) {
            Q += (((k - 1) / 2) % 2) ? -term : term;
        } else {
            P += ((k / 2) % 2) ? -term : term;
        }
        trunc = static_cast<double>(mag);
        if (mag < 1e-20L) break;
    }
}

double hankel_eval(int nu, double x, double* err_out) {
    long double P, Q;
    double trunc;
    hankel_pq(nu, x, P, Q, trunc);
    const long double chi = static_cast<long double>(x) - (2 * nu + 1) * 0.25L * kPiL;
    const long double amp = sqrtl(2.0L / (kPiL * x));
    const long double v = amp * (P * cosl(chi) - Q * sinl(chi));
    if (err_out) *err_out = static_cast<double>(amp) * trunc + std::fabs(static_cast<double>(v)) * 1e-15;
    return static_cast<double>(v);
}

// One Taylor step of the system u' = -v, x v' = x u - v (u = J0, v = J1)
// from x0 to x0 + h. Entire functions, so only |h| limits the order needed.
void taylor_step(double x0, double h, double& u, double& v) {
    constexpr int K = 34;
    long double a[K + 1], b[K + 1];
    a[0] = u;
    b[0] = v;
    for (int k = 0; k < K; ++k) {
        a[k + 1] = -b[k] / (k + 1.0L);
        const long double am1 = (k >= 1) ? a[k - 1] : 0.0L;
        b[k + 1] = (x0 * a[k] + am1 - (k + 1.0L) * b[k]) / (x0 * (k + 1.0L));
    }
    long double su = a[K], sv = b[K];
    for (int k = K - 1; k >= 0; --k) {
        su = su * h + a[k];
        sv = sv * h + b[k];
    }
    u = static_cast<double>(su);
    v = static_cast<double>(sv);
}

// x in [kSeriesMax, kHankelDirect): seed both orders at the anchor where the
// Hankel tail is already below double roundoff, then march down.
void j01_refined(double x, double& j0, double& j1, double& err) {
    double x0 = kHankelDirect;
    double e0, e1;
    j0 = hankel_eval(0, x0, &e0);
    j1 = hankel_eval(1, x0, &e1);
    int steps = 0;
    while (x0 > x + 1e-14) {
        const double h = -std::min(2.0, x0 - x);
        taylor_step(x0, h, j0, j1);
        x0 += h;
        ++steps;
    }
    err = e0 + e1 + steps * 1e-16;
}

// k-th positive root of J1, no cache involvement.
double j1_root(int k) {
    const double b = (k + 0.25) * M_PI;
    const double guess = b - 3.0 / (8.0 * b);
    double lo = std::max(0.5, guess - 0.6);
    double hi = guess + 0.6;
    double flo = bessel_j1(lo).value;
    double fhi = bessel_j1(hi).value;
    for (int widen = 0; widen < 8 && flo * fhi > 0.0; ++widen) {
        lo = std::max(0.5, lo - 0.2);
        hi += 0.2;
        flo = bessel_j1(lo).value;
        fhi = bessel_j1(hi).value;
    }
    if (flo * fhi > 0.0) throw std::runtime_error("bessel_j1_zero: failed to bracket root");
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j1(mid).value;
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

BesselEval bessel_j0(double x) {
    check_argument(x, "bessel_j0");
    if (x < kSeriesMax) return j0_series(x);
    if (x >= kHankelDirect) {
        double err;
        const double v = hankel_eval(0, x, &err);
        return {v, BesselBranch::Asymptotic, err};
    }
    double j0, j1, err;
    j01_refined(x, j0, j1, err);
    return {j0, BesselBranch::Asymptotic, err};
}

BesselEval bessel_j1(double x) {
    check_argument(x, "bessel_j1");
    if (x < kSeriesMax) return j1_series(x);
    if (x >= kHankelDirect) {
        double err;
        const double v = hankel_eval(1, x, &err);
        return {v, BesselBranch::Asymptotic, err};
    }
    double j0, j1, err;
    j01_refined(x, j0, j1, err);
    return {j1, BesselBranch::Asymptotic, err};
}

double bessel_j1_asymptotic(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::invalid_argument("bessel_j1_asymptotic: argument must be positive");
    return -std::sqrt(2.0 / (M_PI * x)) * std::cos(x - 0.75 * M_PI);
}

double bessel_j1_zero(int k) {
    if (k < 1 || k > 100) throw std::invalid_argument("bessel_j1_zero: k must be in [1, 100]");
    static std::mutex mutex;
    static std::vector<double> cache;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) < k)
        cache.push_back(j1_root(static_cast<int>(cache.size()) + 1));
    return cache[k - 1];
}

}  // namespace solxs
