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
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvtele::specfun {

namespace {

constexpr double kSeriesLimit = 15.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char *name) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(name) + ": argument must be finite");
    }
}

// sum_k (x/2)^(2k+nu) / (k! (k+nu)!) for nu in {0, 1}, x >= 0.
double bessel_series(int nu, double x) {
    const double half = 0.5 * x;
    const double q = half * half;
    double term = nu == 0 ? 1.0 : half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
        sum += term;
        if (term < kEps * 0.25 * sum) {
            break;
        }
    }
    return sum;
}

// Hankel expansion without the exp(x) / sqrt(2 pi x) prefactor, x >= 15.
double bessel_asymptotic_sum(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) {
            break;  // past the smallest term of the divergent series
        }
        term = next;
        sum += term;
        if (std::abs(term) < 0.25 * kEps * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double scaled_bessel(int nu, double x) {
    const double ax = std::abs(x);
    double value;
    if (ax < kSeriesLimit) {
        value = bessel_series(nu, ax) * std::exp(-ax);
    } else {
        value = bessel_asymptotic_sum(nu, ax) / std::sqrt(2.0 * std::numbers::pi * ax);
    }
    return (nu == 1 && x < 0.0) ? -value : value;
}

double unscaled_bessel(int nu, double x, const char *name) {
    require_finite(x, name);
    const double ax = std::abs(x);
    double value;
    if (ax < kSeriesLimit) {
        value = bessel_series(nu, ax);
    } else {
        const double log_value = ax - 0.5 * std::log(2.0 * std::numbers::pi * ax) +
                                 std::log(bessel_asymptotic_sum(nu, ax));
        if (log_value >= std::log(std::numeric_limits<double>::max())) {
            throw std::overflow_error(std::string(name) + ": result overflows double at x = " +
                                      std::to_string(x));
        }
        value = std::exp(log_value);
    }
    return (nu == 1 && x < 0.0) ? -value : value;
}

}  // namespace

double bessel_i0(double x) { return unscaled_bessel(0, x, "bessel_i0"); }

double bessel_i1(double x) { return unscaled_bessel(1, x, "bessel_i1"); }

double bessel_i0e(double x) {
    require_finite(x, "bessel_i0e");
    return scaled_bessel(0, x);
}

double bessel_i1e(double x) {
    require_finite(x, "bessel_i1e");
    return scaled_bessel(1, x);
}

double one_minus_i0e(double z) {
    if (!(z >= 0.0)) {
        throw std::domain_error("one_minus_i0e: argument must be non-negative");
    }
    if (z >= 1.0) {
        return 1.0 - bessel_i0e(z);
    }
    // exp(-z) I0(z) = M(1/2, 1, -2z); the k = 0 term is the 1 being removed.
    double term = -z;
    double sum = term;
    for (int k = 2; k < 200; ++k) {
        term *= (k - 0.5) * (-2.0 * z) / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 0.25 * kEps * std::abs(sum)) {
            break;
        }
    }
    return -sum;
}

SpecFunResult lambert_w0_halley(double x) {
    if (x == 0.0) {
        return {0.0, true};
    }
    double w = std::log1p(x);
    for (int i = 0; i < 50; ++i) {
        // (w e^w - x) / e^w, kept in this form so e^w never multiplies a large w.
        const double g = w - x * std::exp(-w);
        const double step = g / ((w + 1.0) - (w + 2.0) * g / (2.0 * w + 2.0));
        w -= step;
        if (std::abs(step) <= 1e-14 * std::abs(w)) {
            return {w, std::isfinite(w)};
        }
    }
    return {w, false};
}

double lambert_w0(double x) {
    if (!(x >= 0.0)) {
        throw std::domain_error("lambert_w0: argument must be >= 0, got " + std::to_string(x));
    }
    if (std::isinf(x)) {
        return x;
    }
    const SpecFunResult result = lambert_w0_halley(x);
    if (!result.converged) {
        throw std::runtime_error("lambert_w0: Halley iteration did not converge for x = " +
                                 std::to_string(x));
    }
    return result.value;
}

double lambert_w0_of_exp(double log_x) {
    if (std::isnan(log_x)) {
        throw std::domain_error("lambert_w0_of_exp: NaN argument");
    }
    if (log_x < 700.0) {
        return lambert_w0(std::exp(log_x));
    }
    // Solve w + ln w = log_x.
    double w = log_x - std::log(log_x);
    for (int i = 0; i < 50; ++i) {
        const double h = w + std::log(w) - log_x;
        const double d1 = 1.0 + 1.0 / w;
        const double d2 = -1.0 / (w * w);
        const double step = h / (d1 - 0.5 * h * d2 / d1);
        w -= step;
        if (std::abs(step) <= 1e-14 * w) {
            return w;
        }
    }
    throw std::runtime_error("lambert_w0_of_exp: iteration did not converge");
}

}  // namespace cvtele::specfun
