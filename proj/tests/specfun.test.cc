// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvtele/specfun.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace cvtele::specfun;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(specfun, bessel_i0_known_values) {
    EXPECT_EQ(bessel_i0(0.0), 1.0);
    EXPECT_LE(rel_err(bessel_i0(1.0), 1.2660658777520084), 1e-15);
    EXPECT_EQ(bessel_i0(-2.0), bessel_i0(2.0));
}

TEST(specfun, bessel_i1_known_values) {
    EXPECT_EQ(bessel_i1(0.0), 0.0);
    EXPECT_LE(rel_err(bessel_i1(1.0), 0.5651591039924850), 1e-15);
    EXPECT_EQ(bessel_i1(-3.5), -bessel_i1(3.5));
    for (double x : {1e-8, 1e-10, 1e-12}) {
        EXPECT_LE(rel_err(bessel_i1(x), 0.5 * x), 1e-12) << x;
    }
}

TEST(specfun, bessel_matches_series_oracle_across_switchover) {
    for (double x = 0.0; x <= 40.0; x += 0.173) {
        EXPECT_LE(rel_err(bessel_i0(x), cvtele::oracle::bessel_series(0, x)), 1e-12) << x;
        if (x > 0.0) {
            EXPECT_LE(rel_err(bessel_i1(x), cvtele::oracle::bessel_series(1, x)), 1e-12) << x;
        }
    }
    for (double x : {14.999999, 15.0, 15.000001}) {
        EXPECT_LE(rel_err(bessel_i0(x), cvtele::oracle::bessel_series(0, x)), 1e-13) << x;
        EXPECT_LE(rel_err(bessel_i1(x), cvtele::oracle::bessel_series(1, x)), 1e-13) << x;
    }
}

TEST(specfun, bessel_large_argument_reference_values) {
    // 40-digit reference values.
    struct Ref {
        double x, i0, i1;
    };
    const Ref refs[] = {
        {20.0, 43558282.559553533272, 42454973.385127770181},
        {50.0, 2.9325537838493363267e+20, 2.9030785901035567968e+20},
        {100.0, 1.0737517071310738235e+42, 1.0683693903381624812e+42},
        {300.0, 4.4758473679350521181e+128, 4.4683813850369544139e+128},
        {700.0, 1.5295933476718737363e+302, 1.5285003902339006881e+302},
    };
    for (const Ref &r : refs) {
        EXPECT_LE(rel_err(bessel_i0(r.x), r.i0), 1e-12) << r.x;
        EXPECT_LE(rel_err(bessel_i1(r.x), r.i1), 1e-12) << r.x;
        EXPECT_LE(rel_err(bessel_i0e(r.x), r.i0 * std::exp(-r.x)), 1e-12) << r.x;
    }
}

TEST(specfun, bessel_overflow_and_domain) {
    EXPECT_THROW(bessel_i0(720.0), std::overflow_error);
    EXPECT_THROW(bessel_i1(-720.0), std::overflow_error);
    EXPECT_THROW(bessel_i0(std::nan("")), std::domain_error);
    EXPECT_NO_THROW(bessel_i0e(1e6));
    EXPECT_GT(bessel_i0e(1e6), 0.0);
}

TEST(specfun, derivative_of_i0_is_i1) {
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const double x = 0.1 + i * (20.0 - 0.1) / 19.0;
        const double fd = (bessel_i0(x + h) - bessel_i0(x - h)) / (2.0 * h);
        EXPECT_LE(rel_err(fd, bessel_i1(x)), 1e-6) << x;
    }
}

TEST(specfun, monotone_on_positive_axis) {
    double prev0 = bessel_i0(0.0);
    double prev1 = bessel_i1(0.0);
    double prevw = lambert_w0(0.0);
    for (double x = 0.05; x < 60.0; x += 0.05) {
        EXPECT_GE(bessel_i0(x), prev0);
        EXPECT_GE(bessel_i1(x), prev1);
        EXPECT_GE(lambert_w0(x), prevw);
        prev0 = bessel_i0(x);
        prev1 = bessel_i1(x);
        prevw = lambert_w0(x);
    }
}

TEST(specfun, one_minus_i0e_small_and_large) {
    for (double z : {1e-12, 1e-8, 1e-4}) {
        const double series = z - 0.75 * z * z + 5.0 / 12.0 * z * z * z;
        EXPECT_LE(rel_err(one_minus_i0e(z), series), 1e-12) << z;
    }
    for (double z : {0.3, 0.999999, 1.0, 3.0, 25.0}) {
        const double direct = 1.0 - cvtele::oracle::bessel_series(0, z) * std::exp(-z);
        EXPECT_LE(rel_err(one_minus_i0e(z), direct), 1e-12) << z;
    }
    EXPECT_THROW(one_minus_i0e(-1.0), std::domain_error);
}

TEST(specfun, lambert_w0_known_values) {
    EXPECT_EQ(lambert_w0(0.0), 0.0);
    EXPECT_LE(rel_err(lambert_w0(std::numbers::e), 1.0), 1e-15);
    EXPECT_LE(rel_err(lambert_w0(1.0), 0.5671432904097838), 1e-15);
    EXPECT_LE(rel_err(lambert_w0(1.0), cvtele::oracle::lambert_newton(1.0)), 1e-15);
}

TEST(specfun, lambert_w0_residual_property) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(0.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(gen);
        const double w = lambert_w0(x);
        EXPECT_GE(w, 0.0);
        EXPECT_LE(std::abs(w * std::exp(w) - x), 1e-11 * x) << x;
    }
    for (double x : {1e-300, 1e-10, 1e10, 1e300}) {
        const double w = lambert_w0(x);
        EXPECT_LE(rel_err(w, cvtele::oracle::lambert_newton(x)), 1e-13) << x;
    }
}

TEST(specfun, lambert_w0_halley_reports_convergence) {
    const SpecFunResult result = lambert_w0_halley(5.0);
    EXPECT_TRUE(result.converged);
    EXPECT_TRUE(std::isfinite(result.value));
}

TEST(specfun, lambert_w0_domain) {
    EXPECT_THROW(lambert_w0(-0.1), std::domain_error);
    EXPECT_THROW(lambert_w0(std::nan("")), std::domain_error);
}

TEST(specfun, lambert_w0_of_exp_matches_direct_and_extends) {
    for (double l : {-20.0, 0.0, 1.0, 10.0, 300.0, 699.0}) {
        EXPECT_LE(rel_err(lambert_w0_of_exp(l), lambert_w0(std::exp(l))), 1e-14) << l;
    }
    // Continuous across the internal switch at 700: dW/dL = W / (1 + W).
    const double w700 = lambert_w0_of_exp(700.0);
    const double step = 1e-9 * w700 / (1.0 + w700);
    EXPECT_LE(rel_err(lambert_w0_of_exp(700.0 - 1e-9) + step, w700), 1e-14);
    for (double l : {701.0, 1e4, 1e8}) {
        const double w = lambert_w0_of_exp(l);
        EXPECT_LE(std::abs(w + std::log(w) - l), 1e-12 * l) << l;
    }
}
