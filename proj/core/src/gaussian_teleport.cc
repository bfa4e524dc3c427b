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

#include "cvtele/gaussian_teleport.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvtele {

namespace {

using cd = std::complex<double>;

void check_squeezing(double r, const char *where) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument(std::string(where) + ": squeezing must be finite and >= 0");
    }
}

void check_transmission(double t, const char *where) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument(std::string(where) + ": transmission must lie in [0, 1], got " +
                                    std::to_string(t));
    }
}

// cosh(2r) - 1 without cancellation at small r.
double cosh2r_minus_one(double r) {
    const double s = std::sinh(r);
    return 2.0 * s * s;
}

}  // namespace

TeleportParams::TeleportParams(double r, double t_a, double t_b) : r_(r), t_a_(t_a), t_b_(t_b) {
    check_squeezing(r, "TeleportParams");
    check_transmission(t_a, "TeleportParams");
    check_transmission(t_b, "TeleportParams");
}

Covariance4 CovarianceBlocks::assemble() const {
    Covariance4 out;
    out.m.topLeftCorner<2, 2>() = a_block;
    out.m.topRightCorner<2, 2>() = c_block;
    out.m.bottomLeftCorner<2, 2>() = c_block.transpose();
    out.m.bottomRightCorner<2, 2>() = b_block;
    return out;
}

QuadratureBlocks to_quadrature_basis(const CovarianceBlocks &blocks) {
    // (beta, beta*)^T = U (x, p)^T; U^+ U = 2 I.
    Eigen::Matrix2cd u;
    u << cd(1, 0), cd(0, 1), cd(1, 0), cd(0, -1);
    const auto convert = [&u](const Eigen::Matrix2d &m) -> Eigen::Matrix2cd {
        return 0.5 * u.adjoint() * m.cast<cd>() * u;
    };
    return {convert(blocks.a_block), convert(blocks.b_block), convert(blocks.c_block)};
}

GaussianCharacteristic::GaussianCharacteristic(Eigen::MatrixXd covariance, std::vector<cd> displacement)
    : covariance_(std::move(covariance)), displacement_(std::move(displacement)) {
    const auto dim = static_cast<Eigen::Index>(2 * displacement_.size());
    if (covariance_.rows() != dim || covariance_.cols() != dim) {
        throw std::invalid_argument("GaussianCharacteristic: covariance must be (2n x 2n) for n modes");
    }
}

GaussianCharacteristic GaussianCharacteristic::coherent(cd alpha) {
    return GaussianCharacteristic(Eigen::MatrixXd::Identity(2, 2), {alpha});
}

GaussianCharacteristic GaussianCharacteristic::two_mode(const Covariance4 &covariance) {
    return GaussianCharacteristic(covariance.m, {cd(0), cd(0)});
}

cd GaussianCharacteristic::operator()(std::span<const cd> beta) const {
    if (beta.size() != displacement_.size()) {
        throw std::invalid_argument("GaussianCharacteristic: wrong number of arguments");
    }
    Eigen::VectorXcd v(2 * beta.size());
    cd phase = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        v(2 * j) = beta[j];
        v(2 * j + 1) = std::conj(beta[j]);
        phase += beta[j] * std::conj(displacement_[j]) - std::conj(beta[j]) * displacement_[j];
    }
    const cd quadratic = v.adjoint() * covariance_.cast<cd>() * v;
    return std::exp(-0.25 * quadratic + phase);
}

Covariance4 epr_covariance(double r) {
    check_squeezing(r, "epr_covariance");
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    Covariance4 v;
    // clang-format off
    v.m <<  c, 0, 0, -s,
            0, c, -s, 0,
            0, -s, c, 0,
           -s, 0, 0, c;
    // clang-format on
    return v;
}

CovarianceBlocks output_covariance_blocks(const TeleportParams &p) {
    const double excess = cosh2r_minus_one(p.r());
    const double a = 1.0 + p.t_a() * p.t_a() * excess;
    const double b = 1.0 + p.t_b() * p.t_b() * excess;
    const double c = -p.t_a() * p.t_b() * std::sinh(2.0 * p.r());
    CovarianceBlocks blocks;
    blocks.a_block = a * Eigen::Matrix2d::Identity();
    blocks.b_block = b * Eigen::Matrix2d::Identity();
    blocks.c_block << 0.0, c, c, 0.0;
    return blocks;
}

double fidelity_det_form(const TeleportParams &p) {
    const QuadratureBlocks q = to_quadrature_basis(output_covariance_blocks(p));
    Eigen::Matrix2cd rot = Eigen::Matrix2cd::Zero();
    rot(0, 0) = 1.0;
    rot(1, 1) = -1.0;
    const Eigen::Matrix2cd e = 2.0 * Eigen::Matrix2cd::Identity() + rot * q.a_block * rot +
                               q.c_block.adjoint() * rot + rot * q.c_block + q.b_block;
    return 2.0 / std::sqrt(e.determinant().real());
}

double fidelity_closed_form(const TeleportParams &p) {
    const double ta = p.t_a();
    const double tb = p.t_b();
    const double s = std::sinh(p.r());
    const double d = ta - tb;
    // 4 + (ta^2 + tb^2)(cosh 2r - 1) - 2 ta tb sinh 2r, regrouped so the two
    // large terms never cancel.
    const double denom = 4.0 + 2.0 * ta * tb * std::expm1(-2.0 * p.r()) + 2.0 * d * d * s * s;
    return 2.0 / denom;
}

double fidelity_numerical_oracle(const TeleportParams &p, const OracleOptions &options) {
    if (options.grid_points < 64) {
        throw std::invalid_argument("fidelity_numerical_oracle: need at least 64 grid points");
    }
    if (!(options.grid_half_width > 0.0)) {
        throw std::invalid_argument("fidelity_numerical_oracle: grid half width must be positive");
    }
    const auto input = GaussianCharacteristic::coherent(options.alpha);
    const auto noise = GaussianCharacteristic::two_mode(output_covariance_blocks(p).assemble());

    const auto integrand = [&](cd beta) {
        const cd minus = -beta;
        const std::array<cd, 1> arg_in{beta};
        const std::array<cd, 1> arg_out{minus};
        const std::array<cd, 2> arg_noise{std::conj(minus), minus};
        return input(arg_in) * input(arg_out) * noise(arg_noise);
    };

    const int n = options.grid_points;
    const double half = options.grid_half_width;
    const double h = 2.0 * half / (n - 1);
    cd sum = 0.0;
    double edge = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -half + i * h;
        const double wx = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        for (int j = 0; j < n; ++j) {
            const double y = -half + j * h;
            const double wy = (j == 0 || j == n - 1) ? 0.5 : 1.0;
            const cd value = integrand(cd(x, y));
            if (wx < 1.0 || wy < 1.0) {
                edge = std::max(edge, std::abs(value));
            }
            sum += wx * wy * value;
        }
    }
    if (edge > 1e-12) {
        throw std::runtime_error("fidelity_numerical_oracle: integrand at the window edge is " +
                                 std::to_string(edge) + ", widen grid_half_width");
    }
    return (sum * h * h).real() / std::numbers::pi;
}

std::optional<double> optimal_squeezing(double t_a, double t_b) {
    check_transmission(t_a, "optimal_squeezing");
    check_transmission(t_b, "optimal_squeezing");
    if (t_a == 0.0 && t_b == 0.0) {
        throw std::domain_error("optimal_squeezing: both transmissions are zero");
    }
    const double arg = 2.0 * t_a * t_b / (t_a * t_a + t_b * t_b);
    if (arg >= 1.0) {
        return std::nullopt;
    }
    return 0.5 * std::atanh(arg);
}

double adaptive_fidelity(double r, double t) {
    check_squeezing(r, "adaptive_fidelity");
    check_transmission(t, "adaptive_fidelity");
    return 1.0 / (2.0 + t * t * std::expm1(-2.0 * r));
}

double adaptive_asymptote(double t) {
    check_transmission(t, "adaptive_asymptote");
    return 1.0 / (2.0 - t * t);
}

std::optional<double> crossover_squeezing(double t_b) {
    check_transmission(t_b, "crossover_squeezing");
    const double arg = 2.0 * t_b / (1.0 + t_b);
    if (arg >= 1.0) {
        return std::nullopt;
    }
    return std::atanh(arg);
}

}  // namespace cvtele
