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

#ifndef CVTELE_ATMOSPHERE_H
#define CVTELE_ATMOSPHERE_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvtele/counter_rng.h"

namespace cvtele {

/// How the sampled shape parameter Theta maps to the ellipse semi-axes.
///
///   kPositive: W^2 = W0^2 exp(+Theta)   (default; beams spread with distance)
///   kNegative: W^2 = W0^2 exp(-Theta)
///
/// The moments of Theta make the mean spot larger than W0 only under
/// kPositive. kNegative is kept for sensitivity runs.
enum class ThetaSign { kPositive, kNegative };

const char *to_string(ThetaSign sign);

/// Physical constants of an elliptic-beam free-space link. SI units.
struct EllipticBeamParams {
    double wavelength;  ///< m
    double w0;          ///< beam-spot radius at the transmitter, m
    double length;      ///< propagation distance, m
    double aperture;    ///< receiver aperture radius, m
    double eta_m;       ///< deterministic intensity attenuation, (0, 1]
    double cn2;         ///< refractive-index structure constant, m^(-2/3)
    ThetaSign theta_sign = ThetaSign::kPositive;

    /// Throws std::invalid_argument on non-positive fields or eta_m > 1.
    void validate() const;

    /// 1.6 km Erlangen link: 809 nm, W0 = 20 mm, a = 40 mm, eta_m = 0.7.
    static EllipticBeamParams erlangen(double cn2);
};

/// Quantities derived from EllipticBeamParams that drive the sampler.
struct DerivedBeamParams {
    double k;              ///< wavenumber 2 pi / lambda, 1/m
    double fresnel_omega;  ///< k W0^2 / (2 L)
    double rytov2;         ///< 1.23 Cn^2 k^(7/6) L^(11/6)
    double theta_mean;     ///< <Theta_1> = <Theta_2>
    double x0_var;         ///< <dx0^2> = <dy0^2>, m^2
    double theta_var;      ///< <dTheta_1^2> = <dTheta_2^2>
    double theta_cov;      ///< <dTheta_1 dTheta_2>
    double w0;
    ThetaSign theta_sign;
};

DerivedBeamParams derive_params(const EllipticBeamParams &p);

/// One random beam realisation: centroid offset, shape parameters and the
/// ellipse orientation chi in [0, pi/2].
struct BeamSample {
    double x0;
    double y0;
    double theta1;
    double theta2;
    double chi;
};

/// Draws x0, y0 ~ N(0, x0_var) independently, (Theta_1, Theta_2) from the
/// correlated 2-D Gaussian via its symmetric square root, and chi uniform.
BeamSample sample_beam(const DerivedBeamParams &d, PhiloxStream &rng);

/// Squared ellipse semi-axes (W_1^2, W_2^2) of a sample.
std::pair<double, double> semi_axes_squared(const BeamSample &s, const DerivedBeamParams &d);

/// Effective spot radius W_eff of an ellipse with semi-axes w1, w2 rotated by
/// chi relative to the aperture of radius a. Equals W when w1 == w2 == W.
double effective_spot_radius(double w1, double w2, double chi, double a);

/// Shape scale R(xi) and exponent lambda(xi) of the centroid-offset factor.
struct ShapeFactors {
    double scale;
    double exponent;
};
ShapeFactors shape_factors(double xi, double a);

/// Transmittance of a centred ellipse, eta_0(Theta_1, Theta_2), from its
/// semi-axes.
double centred_transmittance(double w1, double w2, double a);

/// Thrown when a transmittance leaves [0, 1] by more than rounding noise.
class NumericalInconsistency : public std::runtime_error {
   public:
    explicit NumericalInconsistency(const std::string &what) : std::runtime_error(what) {}
};

/// Intensity transmittance eta of one beam realisation through the aperture.
/// Values within [-1e-12, 1 + 1e-9] are clamped into [0, 1]; anything outside
/// throws NumericalInconsistency.
double aperture_transmittance(const BeamSample &s, const DerivedBeamParams &d, double a);

/// Immutable set of amplitude-transmission samples T = sqrt(eta_m * eta).
/// Sample order is the generation order, so two ensembles can be paired by
/// index.
class TransmittanceEnsemble {
   public:
    /// Wraps externally produced samples (synthetic channels, tests). Throws
    /// std::invalid_argument if any sample lies outside [0, 1].
    static TransmittanceEnsemble from_samples(std::vector<double> samples, std::uint64_t seed = 0);

    std::span<const double> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    double operator[](std::size_t i) const { return samples_[i]; }

    std::uint64_t seed() const { return seed_; }
    std::uint32_t stream_id() const { return stream_id_; }
    const std::optional<EllipticBeamParams> &params() const { return params_; }

    double mean() const;
    /// Population standard deviation sqrt(<T^2> - <T>^2).
    double stddev() const;

    /// FNV-1a over the sample bits, in order.
    std::uint64_t content_hash() const;

    /// New ensemble over `samples` that keeps this one's seed, stream and
    /// channel parameters (e.g. a postselected subset).
    TransmittanceEnsemble with_samples(std::vector<double> samples) const;

   private:
    friend TransmittanceEnsemble sample_transmittance_ensemble(const EllipticBeamParams &, std::size_t,
                                                               std::uint64_t, std::uint32_t, unsigned);

    TransmittanceEnsemble(std::vector<double> samples, std::uint64_t seed, std::uint32_t stream_id,
                          std::optional<EllipticBeamParams> params)
        : samples_(std::move(samples)), seed_(seed), stream_id_(stream_id), params_(std::move(params)) {}

    std::vector<double> samples_;
    std::uint64_t seed_ = 0;
    std::uint32_t stream_id_ = 0;
    std::optional<EllipticBeamParams> params_;
};

/// Draws n samples with substream (seed, i, stream_id) for sample i. The
/// result is bit-identical for any `threads` value. Errors from
/// aperture_transmittance are rethrown as NumericalInconsistency naming the
/// first failing sample index.
TransmittanceEnsemble sample_transmittance_ensemble(const EllipticBeamParams &p, std::size_t n,
                                                    std::uint64_t seed, std::uint32_t stream_id = 0,
                                                    unsigned threads = 0);

/// Normalised histogram of T over [0, 1]. `bin_edges` has bins + 1 entries.
struct EmpiricalPdt {
    std::vector<double> bin_edges;
    std::vector<double> probabilities;

    std::vector<double> bin_centers() const;
};

EmpiricalPdt empirical_pdt(const TransmittanceEnsemble &e, std::size_t bins = 100);

/// Fraction of samples with T >= t_min (the PDT exceedance).
double exceedance(const TransmittanceEnsemble &e, double t_min);

/// Fraction of samples with T < t. exceedance(e, t) + fraction_below(e, t) == 1.
double fraction_below(const TransmittanceEnsemble &e, double t);

/// Stable hash of the channel parameters, used in exported headers.
std::uint64_t params_hash(const EllipticBeamParams &p);

/// One sample per line under a comment header carrying seed and params hash.
void write_ensemble_csv(std::ostream &out, const TransmittanceEnsemble &e);

}  // namespace cvtele

#endif  // CVTELE_ATMOSPHERE_H
