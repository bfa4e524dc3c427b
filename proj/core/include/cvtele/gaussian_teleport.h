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

#ifndef CVTELE_GAUSSIAN_TELEPORT_H
#define CVTELE_GAUSSIAN_TELEPORT_H

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cvtele {

/// Squeezing r of the two-mode squeezed vacuum plus the amplitude
/// transmissions of its two arms. Intensity loss of arm X is 1 - t_x^2.
class TeleportParams {
   public:
    /// Throws std::invalid_argument unless r >= 0 and both t in [0, 1].
    TeleportParams(double r, double t_a, double t_b);

    double r() const { return r_; }
    double t_a() const { return t_a_; }
    double t_b() const { return t_b_; }

   private:
    double r_;
    double t_a_;
    double t_b_;
};

/// 4x4 covariance of a two-mode Gaussian characteristic function, written in
/// the complex amplitude ordering (beta_A, beta_A*, beta_B, beta_B*).
struct Covariance4 {
    Eigen::Matrix4d m;
};

/// The A, B and C blocks of the covariance of the Gaussian noise factor the
/// lossy protocol convolves the input with:
///
///     V = [ A   C ]
///         [ C^+ B ]
///
/// Blocks are stored in the same complex amplitude basis as Covariance4.
struct CovarianceBlocks {
    Eigen::Matrix2d a_block;
    Eigen::Matrix2d b_block;
    Eigen::Matrix2d c_block;

    Covariance4 assemble() const;
};

/// Blocks re-expressed in the real quadrature basis (x, p) with
/// beta = x + i p. In this basis the cross block of the EPR state is
/// proportional to diag(1, -1).
struct QuadratureBlocks {
    Eigen::Matrix2cd a_block;
    Eigen::Matrix2cd b_block;
    Eigen::Matrix2cd c_block;
};

QuadratureBlocks to_quadrature_basis(const CovarianceBlocks &blocks);

/// Zero-mean-or-displaced Gaussian characteristic function
///
///     C(beta) = exp(-1/4 v^+ V v) * prod_j exp(beta_j alpha_j* - beta_j* alpha_j)
///
/// with v = (beta_1, beta_1*, beta_2, beta_2*, ...). Any number of modes.
class GaussianCharacteristic {
   public:
    GaussianCharacteristic(Eigen::MatrixXd covariance, std::vector<std::complex<double>> displacement);

    /// Coherent state |alpha>: identity covariance, displacement alpha.
    static GaussianCharacteristic coherent(std::complex<double> alpha);

    /// Two-mode state with the given 4x4 covariance and no displacement.
    static GaussianCharacteristic two_mode(const Covariance4 &covariance);

    std::size_t modes() const { return displacement_.size(); }

    std::complex<double> operator()(std::span<const std::complex<double>> beta) const;

   private:
    Eigen::MatrixXd covariance_;
    std::vector<std::complex<double>> displacement_;
};

/// EPR (two-mode squeezed vacuum) covariance: cosh(2r) on the diagonal,
/// -sinh(2r) on the anti-diagonal of the cross blocks.
Covariance4 epr_covariance(double r);

/// Blocks of the output noise factor after losses t_a, t_b on the two arms.
CovarianceBlocks output_covariance_blocks(const TeleportParams &p);

/// Coherent-state fidelity F = 2 / sqrt(det E) with
/// E = 2I + RAR + C^+R + RC + B and R = diag(1, -1), blocks in the
/// quadrature basis.
double fidelity_det_form(const TeleportParams &p);

/// Coherent-state fidelity
///
///     F = 2 / [4 + (t_a^2 + t_b^2)(cosh 2r - 1) - 2 t_a t_b sinh 2r].
double fidelity_closed_form(const TeleportParams &p);

struct OracleOptions {
    double grid_half_width = 7.0;
    int grid_points = 129;
    /// Amplitude of the coherent input. The fidelity does not depend on it.
    std::complex<double> alpha = 0.0;
};

/// Brute-force fidelity (1/pi) Int d^2 beta C_I(beta) C_O(-beta), with
/// C_O(beta) = C_I(beta) C_G(beta*, beta), on a 2-D trapezoidal grid.
///
/// Throws std::invalid_argument for fewer than 64 grid points and
/// std::runtime_error when the integrand at the window edge exceeds 1e-12.
double fidelity_numerical_oracle(const TeleportParams &p, const OracleOptions &options = {});

/// Squeezing that maximises fidelity_closed_form at fixed transmissions.
/// std::nullopt means there is no finite optimum (t_a == t_b, fidelity
/// monotone in r). Throws std::domain_error if both transmissions are zero.
std::optional<double> optimal_squeezing(double t_a, double t_b);

/// Fidelity of the adaptive scheme (t_a = t_b = t): 1 / (2 - t^2 (1 - e^{-2r})).
double adaptive_fidelity(double r, double t);

/// Large-squeezing limit of adaptive_fidelity: 1 / (2 - t^2).
double adaptive_asymptote(double t);

/// Squeezing above which the adaptive scheme beats the direct one (t_a = 1):
/// arctanh(2 t_b / (1 + t_b)). std::nullopt at t_b = 1 (never crosses).
std::optional<double> crossover_squeezing(double t_b);

}  // namespace cvtele

#endif  // CVTELE_GAUSSIAN_TELEPORT_H
