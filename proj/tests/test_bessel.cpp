// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "solxs/bessel.hpp"
#include "solxs/verify.hpp"

using namespace solxs;

TEST_CASE("J0/J1 small-argument behavior") {
    CHECK(bessel_j0(0.0).value == 1.0);
    CHECK(bessel_j1(0.0).value == 0.0);
    const double x = 1e-6;
    CHECK(std::fabs(bessel_j0(x).value - (1.0 - x * x / 4.0)) < 1e-18);
    CHECK(std::fabs(bessel_j1(x).value - x / 2.0) < 1e-18);
}

TEST_CASE("J0/J1 against the integral representation") {
    // spot values on both branches
    CHECK(std::fabs(bessel_j0(20.0).value - bessel_j0_oracle(20.0)) < 1e-9);
    CHECK(std::fabs(bessel_j1(20.0).value - bessel_j1_oracle(20.0)) < 1e-9);

    // dense grid through the branch switch and beyond
    for (int i = 0; i <= 600; ++i) {
        const double x = 0.05 + i * (200.0 - 0.05) / 600.0;
        CHECK(std::fabs(bessel_j0(x).value - bessel_j0_oracle(x)) < 1e-11);
        CHECK(std::fabs(bessel_j1(x).value - bessel_j1_oracle(x)) < 1e-11);
    }

    // relative accuracy away from zeros up to 1e3
    for (double x : {120.0, 347.1, 612.0, 999.5}) {
        const double ref0 = bessel_j0_oracle(x);
        const double ref1 = bessel_j1_oracle(x);
        if (std::fabs(ref0) > 0.01)
            CHECK(std::fabs(bessel_j0(x).value / ref0 - 1.0) < 1e-10);
        if (std::fabs(ref1) > 0.01)
            CHECK(std::fabs(bessel_j1(x).value / ref1 - 1.0) < 1e-10);
    }
}

TEST_CASE("J0/J1 rejects bad arguments") {
    CHECK_THROWS_AS(bessel_j0(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j1(-1e-9), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j0(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j1(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("branch bookkeeping") {
    CHECK(bessel_j1(5.0).branch == BesselBranch::Series);
    CHECK(bessel_j1(15.0).branch == BesselBranch::Asymptotic);
    CHECK(bessel_j1(50.0).branch == BesselBranch::Asymptotic);
    CHECK(bessel_j0(15.0).est_error >= 0.0);
}

TEST_CASE("derivative identity J1' = J0 - J1/x") {
    const double h = 1e-5;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.1 + i * (50.0 - 0.1) / 200.0;
        const double d = (bessel_j1(x + h).value - bessel_j1(x - h).value) / (2.0 * h);
        const double rhs = bessel_j0(x).value - bessel_j1(x).value / x;
        CHECK(std::fabs(d - rhs) < 1e-6);
    }
}

TEST_CASE("printed asymptotic form") {
    // the formula's own zero: cos(x - 3pi/4) = 0 at x = 3pi/4 + pi/2; at
    // x = 3pi/4 the cosine is 1 and the value is minus the envelope
    const double x0 = 0.75 * M_PI;
    CHECK(bessel_j1_asymptotic(x0) == doctest::Approx(-std::sqrt(2.0 / (M_PI * x0))));
    CHECK(std::fabs(bessel_j1_asymptotic(x0 + M_PI / 2)) < 1e-15);

    // envelope bound
    const double x1 = 1e4;
    CHECK(std::fabs(bessel_j1_asymptotic(x1)) <= std::sqrt(2.0 / (M_PI * x1)));

    // magnitude agreement with J1: within 2e-3 of the envelope at x = 100,
    // and the difference decays like x^{-3/2}
    const double env100 = std::sqrt(2.0 / (M_PI * 100.0));
    CHECK(std::fabs(std::fabs(bessel_j1_asymptotic(100.0)) -
                    std::fabs(bessel_j1(100.0).value)) < 2e-3 * env100);
    for (int i = 0; i <= 180; ++i) {
        const double x = 20.0 + i;
        const double diff =
            std::fabs(std::fabs(bessel_j1_asymptotic(x)) - std::fabs(bessel_j1(x).value));
        CHECK(diff * std::pow(x, 1.5) < 0.5);
    }

    CHECK_THROWS_AS(bessel_j1_asymptotic(0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j1_asymptotic(-3.0), std::invalid_argument);
}

TEST_CASE("J1 zeros") {
    CHECK(bessel_j1_zero(1) == doctest::Approx(3.8317).epsilon(1e-4));
    CHECK(bessel_j1_zero(2) == doctest::Approx(7.0156).epsilon(1e-4));

    double prev = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double z = bessel_j1_zero(k);
        CHECK(std::fabs(bessel_j1(z).value) < 1e-10);
        CHECK(z > prev);
        prev = z;
    }
    // spacing approaches pi
    CHECK(bessel_j1_zero(100) - bessel_j1_zero(99) == doctest::Approx(M_PI).epsilon(1e-4));
    CHECK_THROWS_AS(bessel_j1_zero(0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_j1_zero(101), std::invalid_argument);
}

TEST_CASE("verify_bessel summary lines pass") {
    for (const CheckLine& line : verify_bessel()) {
        INFO(line.check, " = ", line.value);
        CHECK(line.pass);
    }
}
