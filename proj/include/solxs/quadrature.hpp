// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>

namespace solxs {

struct QuadratureResult {
    double value;
    double est_error;  // absolute
    long evals;
};

// Raised when an adaptive integral exhausts its evaluation budget before
// reaching the requested tolerance. Carries what was achieved.
class QuadratureFailure : public std::runtime_error {
  public:
    QuadratureFailure(const std::string& msg, double value, double achieved_error)
        : std::runtime_error(msg), value(value), achieved_error(achieved_error) {}
    double value;
    double achieved_error;
};

// Globally adaptive Gauss-Kronrod 15(7) on [a, b]. Splits the segment with
// the largest error estimate until the total satisfies
// max(abs_tol, rel_tol * |integral|), or throws QuadratureFailure once
// max_evals integrand evaluations are spent.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, long max_evals);

}  // namespace solxs
