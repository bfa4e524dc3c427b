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

#include "cvtele/atmosphere.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "cvtele/numeric.h"
#include "cvtele/parallel.h"
#include "cvtele/specfun.h"

namespace cvtele {

namespace {

constexpr double kClampAbove = 1e-9;
constexpr double kClampBelow = 1e-12;
// a * |1/W1 - 1/W2| below this counts as a circular beam.
constexpr double kSymmetricGuard = 1e-6;

// ln[2 (1 - e^{-z/2}) / (1 - e^{-z} I0(z))]. The ratio tends to 1 + z/2 as
// z -> 0, so the difference of numerator and denominator is summed as a
// series there instead of being formed by subtraction.
double log_shape_ratio(double z, double den) {
    if (z >= 0.5) {
        const double num = -2.0 * std::expm1(-0.5 * z);
        return std::log(num / den);
    }
    double e = 1.0;  // (-1/2)^k / k!
    double g = 1.0;  // (1/2)_k (-2)^k / (k!)^2
    double zk = 1.0;
    double diff = 0.0;
    for (int k = 1; k < 80; ++k) {
        e *= -0.5 / k;
        g *= (k - 0.5) * -2.0 / (static_cast<double>(k) * k);
        zk *= z;
        const double term = (g - 2.0 * e) * zk;
        diff += term;
        if (k > 2 && std::abs(term) < 0.25 * std::numeric_limits<double>::epsilon() * std::abs(diff)) {
            break;
        }
    }
    return std::log1p(diff / den);
}

}  // namespace

const char *to_string(ThetaSign sign) { return sign == ThetaSign::kPositive ? "+1" : "-1"; }

void EllipticBeamParams::validate() const {
    const auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("EllipticBeamParams: ") + name + " must be positive");
        }
    };
    positive(wavelength, "wavelength");
    positive(w0, "w0");
    positive(length, "length");
    positive(aperture, "aperture");
    positive(eta_m, "eta_m");
    positive(cn2, "cn2");
    if (eta_m > 1.0) {
        throw std::invalid_argument("EllipticBeamParams: eta_m must not exceed 1");
    }
}

EllipticBeamParams EllipticBeamParams::erlangen(double cn2) {
    return EllipticBeamParams{809e-9, 0.020, 1600.0, 0.04, 0.7, cn2, ThetaSign::kPositive};
}

DerivedBeamParams derive_params(const EllipticBeamParams &p) {
    p.validate();
    DerivedBeamParams d{};
    d.k = 2.0 * std::numbers::pi / p.wavelength;
    d.fresnel_omega = d.k * p.w0 * p.w0 / (2.0 * p.length);
    d.rytov2 = 1.23 * p.cn2 * std::pow(d.k, 7.0 / 6.0) * std::pow(p.length, 11.0 / 6.0);

    const double q = d.rytov2 * std::pow(d.fresnel_omega, 5.0 / 6.0);
    const double b = 1.0 + 2.96 * q;
    const double omega2 = d.fresnel_omega * d.fresnel_omega;
    d.theta_mean = std::log(b * b / (omega2 * std::sqrt(b * b + 1.2 * q)));
    d.x0_var = 0.33 * p.w0 * p.w0 * d.rytov2 * std::pow(d.fresnel_omega, -7.0 / 6.0);
    d.theta_var = std::log1p(1.2 * q / (b * b));
    d.theta_cov = std::log1p(-0.8 * q / (b * b));
    d.w0 = p.w0;
    d.theta_sign = p.theta_sign;
    return d;
}

BeamSample sample_beam(const DerivedBeamParams &d, PhiloxStream &rng) {
    BeamSample s{};
    const auto [n1, n2] = rng.normal_pair();
    const double sigma_x = std::sqrt(d.x0_var);
    s.x0 = sigma_x * n1;
    s.y0 = sigma_x * n2;

    // Symmetric square root of [[v, c], [c, v]]: eigenvalues v + c, v - c on
    // (1, 1) and (1, -1).
    const double root_plus = std::sqrt(std::max(0.0, d.theta_var + d.theta_cov));
    const double root_minus = std::sqrt(std::max(0.0, d.theta_var - d.theta_cov));
    const double diag = 0.5 * (root_plus + root_minus);
    const double off = 0.5 * (root_plus - root_minus);
    const auto [z1, z2] = rng.normal_pair();
    s.theta1 = d.theta_mean + diag * z1 + off * z2;
    s.theta2 = d.theta_mean + off * z1 + diag * z2;

    s.chi = 0.5 * std::numbers::pi * rng.uniform();
    return s;
}

std::pair<double, double> semi_axes_squared(const BeamSample &s, const DerivedBeamParams &d) {
    const double sign = d.theta_sign == ThetaSign::kPositive ? 1.0 : -1.0;
    const double w0sq = d.w0 * d.w0;
    return {w0sq * std::exp(sign * s.theta1), w0sq * std::exp(sign * s.theta2)};
}

double effective_spot_radius(double w1, double w2, double chi, double a) {
    const double a2 = a * a;
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    const double log_arg = std::log(4.0 * a2 / (w1 * w2)) + a2 / (w1 * w1) * (1.0 + 2.0 * c * c) +
                           a2 / (w2 * w2) * (1.0 + 2.0 * s * s);
    const double w = specfun::lambert_w0_of_exp(log_arg);
    return 2.0 * a / std::sqrt(w);
}

ShapeFactors shape_factors(double xi, double a) {
    const double z = a * a * xi * xi;
    if (!(z > 0.0)) {
        throw std::domain_error("shape_factors: xi must be non-zero");
    }
    const double den = specfun::one_minus_i0e(z);
    const double log_ratio = log_shape_ratio(z, den);
    const double exponent = 2.0 * z * specfun::bessel_i1e(z) / den / log_ratio;
    return {std::pow(log_ratio, -1.0 / exponent), exponent};
}

double centred_transmittance(double w1, double w2, double a) {
    const double a2 = a * a;
    const double inv1 = 1.0 / (w1 * w1);
    const double inv2 = 1.0 / (w2 * w2);
    const double x = std::abs(a2 * (inv1 - inv2));
    const double first = specfun::bessel_i0e(x) * std::exp(x - a2 * (inv1 + inv2));

    const double xi = 1.0 / w1 - 1.0 / w2;
    double second = 0.0;
    if (a * std::abs(xi) >= kSymmetricGuard) {
        const double prefactor = -2.0 * std::expm1(-0.5 * a2 * xi * xi);
        const ShapeFactors sf = shape_factors(xi, a);
        const double ratio = (w1 + w2) / std::abs(w1 - w2);
        second = prefactor * std::exp(-std::pow(ratio / sf.scale, sf.exponent));
    }
    return 1.0 - first - second;
}

double aperture_transmittance(const BeamSample &s, const DerivedBeamParams &d, double a) {
    const auto [w1sq, w2sq] = semi_axes_squared(s, d);
    const double w1 = std::sqrt(w1sq);
    const double w2 = std::sqrt(w2sq);
    const double w_eff = effective_spot_radius(w1, w2, s.chi, a);
    const double eta0 = centred_transmittance(w1, w2, a);

    const double r0 = std::hypot(s.x0, s.y0);
    const ShapeFactors sf = shape_factors(2.0 / w_eff, a);
    const double eta = eta0 * std::exp(-std::pow((r0 / a) / sf.scale, sf.exponent));

    if (!(eta <= 1.0 + kClampAbove && eta >= -kClampBelow)) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "transmittance %.17g outside [0, 1] (W1=%.6g W2=%.6g chi=%.6g r0=%.6g)", eta, w1, w2,
                      s.chi, r0);
        throw NumericalInconsistency(buf);
    }
    return std::clamp(eta, 0.0, 1.0);
}

TransmittanceEnsemble TransmittanceEnsemble::from_samples(std::vector<double> samples, std::uint64_t seed) {
    for (double t : samples) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("TransmittanceEnsemble: sample outside [0, 1]");
        }
    }
    return TransmittanceEnsemble(std::move(samples), seed, 0, std::nullopt);
}

TransmittanceEnsemble TransmittanceEnsemble::with_samples(std::vector<double> samples) const {
    return TransmittanceEnsemble(std::move(samples), seed_, stream_id_, params_);
}

double TransmittanceEnsemble::mean() const {
    if (samples_.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return pairwise_sum(samples_) / static_cast<double>(samples_.size());
}

double TransmittanceEnsemble::stddev() const {
    const double m = mean();
    std::vector<double> dev(samples_.size());
    std::transform(samples_.begin(), samples_.end(), dev.begin(), [m](double t) { return (t - m) * (t - m); });
    return std::sqrt(pairwise_sum(dev) / static_cast<double>(samples_.size()));
}

std::uint64_t TransmittanceEnsemble::content_hash() const {
    Fnv1a64 h;
    for (double t : samples_) {
        h.update(t);
    }
    return h.digest();
}

TransmittanceEnsemble sample_transmittance_ensemble(const EllipticBeamParams &p, std::size_t n,
                                                    std::uint64_t seed, std::uint32_t stream_id,
                                                    unsigned threads) {
    if (n == 0) {
        throw std::invalid_argument("sample_transmittance_ensemble: need at least one sample");
    }
    const DerivedBeamParams d = derive_params(p);
    std::vector<double> samples(n);
    parallel_for_chunks(n, threads == 0 ? default_thread_count() : threads,
                        [&](std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i) {
                                PhiloxStream rng(seed, i, stream_id);
                                const BeamSample s = sample_beam(d, rng);
                                try {
                                    samples[i] = std::sqrt(p.eta_m * aperture_transmittance(s, d, p.aperture));
                                } catch (const NumericalInconsistency &e) {
                                    throw NumericalInconsistency("sample " + std::to_string(i) + ": " + e.what());
                                }
                            }
                        });
    return TransmittanceEnsemble(std::move(samples), seed, stream_id, p);
}

std::vector<double> EmpiricalPdt::bin_centers() const {
    std::vector<double> centers(probabilities.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        centers[i] = 0.5 * (bin_edges[i] + bin_edges[i + 1]);
    }
    return centers;
}

EmpiricalPdt empirical_pdt(const TransmittanceEnsemble &e, std::size_t bins) {
    if (bins < 2) {
        throw std::invalid_argument("empirical_pdt: need at least 2 bins");
    }
    if (e.empty()) {
        throw std::invalid_argument("empirical_pdt: empty ensemble");
    }
    EmpiricalPdt pdt;
    pdt.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        pdt.bin_edges[i] = static_cast<double>(i) / static_cast<double>(bins);
    }
    std::vector<std::size_t> counts(bins, 0);
    for (double t : e.samples()) {
        const auto idx = static_cast<std::size_t>(t * static_cast<double>(bins));
        ++counts[std::min(idx, bins - 1)];
    }
    pdt.probabilities.resize(bins);
    const auto n = static_cast<double>(e.size());
    for (std::size_t i = 0; i < bins; ++i) {
        pdt.probabilities[i] = static_cast<double>(counts[i]) / n;
    }
    return pdt;
}

double exceedance(const TransmittanceEnsemble &e, double t_min) {
    if (e.empty()) {
        throw std::invalid_argument("exceedance: empty ensemble");
    }
    const auto kept = std::count_if(e.samples().begin(), e.samples().end(), [t_min](double t) { return t >= t_min; });
    return static_cast<double>(kept) / static_cast<double>(e.size());
}

double fraction_below(const TransmittanceEnsemble &e, double t) {
    if (e.empty()) {
        throw std::invalid_argument("fraction_below: empty ensemble");
    }
    const auto below = std::count_if(e.samples().begin(), e.samples().end(), [t](double v) { return v < t; });
    return static_cast<double>(below) / static_cast<double>(e.size());
}

std::uint64_t params_hash(const EllipticBeamParams &p) {
    Fnv1a64 h;
    h.update(p.wavelength).update(p.w0).update(p.length).update(p.aperture).update(p.eta_m).update(p.cn2);
    h.update(std::string_view(to_string(p.theta_sign)));
    return h.digest();
}

void write_ensemble_csv(std::ostream &out, const TransmittanceEnsemble &e) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(e.params() ? params_hash(*e.params()) : 0));
    out << "# seed=" << e.seed() << " stream=" << e.stream_id() << " params_hash=" << hash << " n=" << e.size()
        << "\n";
    out << "T\n";
    for (double t : e.samples()) {
        out << format_g17(t) << "\n";
    }
}

}  // namespace cvtele
