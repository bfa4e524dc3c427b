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

#include "cvtele/strategies.h"

#include <algorithm>
#include <cmath>

#include "cvtele/gaussian_teleport.h"
#include "cvtele/numeric.h"

namespace cvtele {

namespace {

void check_threshold(double t, const char *where) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument(std::string(where) + ": threshold must lie in [0, 1], got " + std::to_string(t));
    }
}

// Mean is accumulated as offsets from the first value so a constant sequence
// averages to exactly that constant.
MeanFidelityResult summarize(std::span<const double> fidelities, std::size_t total) {
    const std::size_t n = fidelities.size();
    const double anchor = fidelities.front();
    std::vector<double> scratch(n);
    std::transform(fidelities.begin(), fidelities.end(), scratch.begin(), [anchor](double f) { return f - anchor; });
    const double mean = anchor + pairwise_sum(scratch) / static_cast<double>(n);

    double std_error = 0.0;
    if (n > 1) {
        std::transform(fidelities.begin(), fidelities.end(), scratch.begin(),
                       [mean](double f) { return (f - mean) * (f - mean); });
        const double variance = pairwise_sum(scratch) / static_cast<double>(n - 1);
        std_error = std::sqrt(variance / static_cast<double>(n));
    }
    return {mean, std_error, static_cast<double>(n) / static_cast<double>(total), n};
}

[[noreturn]] void throw_empty(double threshold) {
    throw EmptySelection("no events survive postselection at T_min = " + format_g17(threshold), threshold);
}

}  // namespace

std::string_view to_string(SchemeMode mode) {
    switch (mode) {
        case SchemeMode::kDirectSingle:
            return "direct-single";
        case SchemeMode::kAdaptiveSingle:
            return "adaptive-single";
        case SchemeMode::kDirectDual:
            return "direct-dual";
        case SchemeMode::kAdaptiveDual:
            return "adaptive-dual";
    }
    return "unknown";
}

SchemeMode parse_scheme_mode(std::string_view text) {
    for (SchemeMode m : {SchemeMode::kDirectSingle, SchemeMode::kAdaptiveSingle, SchemeMode::kDirectDual,
                         SchemeMode::kAdaptiveDual}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown scheme mode '" + std::string(text) +
                                "' (expected direct-single, adaptive-single, direct-dual or adaptive-dual)");
}

void SchemeSpec::validate() const {
    if (postselect_threshold) {
        check_threshold(*postselect_threshold, "SchemeSpec");
    }
    if (threshold_a) {
        check_threshold(*threshold_a, "SchemeSpec");
    }
}

TransmittanceEnsemble postselect(const TransmittanceEnsemble &ens, double t_min) {
    check_threshold(t_min, "postselect");
    std::vector<double> kept;
    kept.reserve(ens.size());
    std::copy_if(ens.samples().begin(), ens.samples().end(), std::back_inserter(kept),
                 [t_min](double t) { return t >= t_min; });
    if (kept.empty()) {
        throw_empty(t_min);
    }
    return ens.with_samples(std::move(kept));
}

ChannelPair adaptive_pair_map(double t_a, double t_b) {
    const double m = std::min(t_a, t_b);
    return {m, m};
}

MeanFidelityResult mean_fidelity_single(double r, const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme) {
    scheme.validate();
    if (scheme.is_dual()) {
        throw std::invalid_argument("mean_fidelity_single: scheme " + std::string(to_string(scheme.mode)) +
                                    " needs two channels");
    }
    if (ens_b.empty()) {
        throw std::invalid_argument("mean_fidelity_single: empty ensemble");
    }
    const double t_min = scheme.postselect_threshold.value_or(0.0);
    std::vector<double> fidelities;
    fidelities.reserve(ens_b.size());
    for (double t : ens_b.samples()) {
        if (t < t_min) {
            continue;
        }
        fidelities.push_back(scheme.is_adaptive() ? adaptive_fidelity(r, t)
                                                  : fidelity_closed_form(TeleportParams(r, 1.0, t)));
    }
    if (fidelities.empty()) {
        throw_empty(t_min);
    }
    return summarize(fidelities, ens_b.size());
}

MeanFidelityResult mean_fidelity_dual(double r, const TransmittanceEnsemble &ens_a, const TransmittanceEnsemble &ens_b,
                                      const SchemeSpec &scheme) {
    scheme.validate();
    if (!scheme.is_dual()) {
        throw std::invalid_argument("mean_fidelity_dual: scheme " + std::string(to_string(scheme.mode)) +
                                    " is single-channel");
    }
    if (ens_a.size() != ens_b.size()) {
        throw std::invalid_argument("mean_fidelity_dual: ensembles differ in length (" + std::to_string(ens_a.size()) +
                                    " vs " + std::to_string(ens_b.size()) + ")");
    }
    if (ens_b.empty()) {
        throw std::invalid_argument("mean_fidelity_dual: empty ensembles");
    }
    const double min_b = scheme.postselect_threshold.value_or(0.0);
    const double min_a = scheme.threshold_a.value_or(min_b);
    std::vector<double> fidelities;
    fidelities.reserve(ens_b.size());
    for (std::size_t i = 0; i < ens_b.size(); ++i) {
        // Thresholds act on the measured transmissions, before any adaptation.
        if (ens_a[i] < min_a || ens_b[i] < min_b) {
            continue;
        }
        ChannelPair pair{ens_a[i], ens_b[i]};
        if (scheme.is_adaptive()) {
            pair = adaptive_pair_map(pair.t_a, pair.t_b);
        }
        fidelities.push_back(fidelity_closed_form(TeleportParams(r, pair.t_a, pair.t_b)));
    }
    if (fidelities.empty()) {
        throw_empty(std::max(min_a, min_b));
    }
    return summarize(fidelities, ens_b.size());
}

namespace {

template <typename Evaluate>
std::vector<ThresholdRow> sweep_thresholds(std::span<const double> thresholds, const SchemeSpec &scheme,
                                           Evaluate evaluate) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        check_threshold(thresholds[i], "fidelity_vs_threshold");
        if (i > 0 && thresholds[i] < thresholds[i - 1]) {
            throw std::invalid_argument("fidelity_vs_threshold: thresholds must be ascending");
        }
    }
    std::vector<ThresholdRow> rows;
    rows.reserve(thresholds.size());
    bool exhausted = false;
    for (double t : thresholds) {
        if (!exhausted) {
            SchemeSpec s = scheme;
            s.postselect_threshold = t;
            s.threshold_a.reset();
            try {
                const MeanFidelityResult result = evaluate(s);
                rows.push_back({t, result.retained_fraction, result});
                continue;
            } catch (const EmptySelection &) {
                exhausted = true;
            }
        }
        rows.push_back({t, 0.0, std::nullopt});
    }
    return rows;
}

}  // namespace

std::vector<ThresholdRow> fidelity_vs_threshold(double r, const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme,
                                                std::span<const double> thresholds) {
    return sweep_thresholds(thresholds, scheme, [&](const SchemeSpec &s) { return mean_fidelity_single(r, ens_b, s); });
}

std::vector<ThresholdRow> fidelity_vs_threshold(double r, const TransmittanceEnsemble &ens_a,
                                                const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme,
                                                std::span<const double> thresholds) {
    return sweep_thresholds(thresholds, scheme,
                            [&](const SchemeSpec &s) { return mean_fidelity_dual(r, ens_a, ens_b, s); });
}

double paired_exceedance(const TransmittanceEnsemble &ens_a, const TransmittanceEnsemble &ens_b, double t_min) {
    if (ens_a.size() != ens_b.size() || ens_a.empty()) {
        throw std::invalid_argument("paired_exceedance: ensembles must be non-empty and equally long");
    }
    std::size_t kept = 0;
    for (std::size_t i = 0; i < ens_a.size(); ++i) {
        kept += std::min(ens_a[i], ens_b[i]) >= t_min ? 1 : 0;
    }
    return static_cast<double>(kept) / static_cast<double>(ens_a.size());
}

double min_map_ks_distance(const TransmittanceEnsemble &ens_a, const TransmittanceEnsemble &ens_b) {
    if (ens_a.size() != ens_b.size() || ens_a.empty()) {
        throw std::invalid_argument("min_map_ks_distance: ensembles must be non-empty and equally long");
    }
    const std::size_t n = ens_a.size();
    std::vector<double> a(ens_a.samples().begin(), ens_a.samples().end());
    std::vector<double> b(ens_b.samples().begin(), ens_b.samples().end());
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = adaptive_pair_map(a[i], b[i]).t_a;
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(m.begin(), m.end());

    const auto inv_n = 1.0 / static_cast<double>(n);
    // CDF at t (inclusive) or just below t (exclusive).
    const auto cdf = [inv_n](const std::vector<double> &sorted, double t, bool inclusive) {
        const auto it = inclusive ? std::upper_bound(sorted.begin(), sorted.end(), t)
                                  : std::lower_bound(sorted.begin(), sorted.end(), t);
        return static_cast<double>(it - sorted.begin()) * inv_n;
    };
    double worst = 0.0;
    for (const auto *points : {&a, &b, &m}) {
        for (double t : *points) {
            for (bool inclusive : {true, false}) {
                const double fa = cdf(a, t, inclusive);
                const double fb = cdf(b, t, inclusive);
                const double predicted = 1.0 - (1.0 - fa) * (1.0 - fb);
                worst = std::max(worst, std::abs(cdf(m, t, inclusive) - predicted));
            }
        }
    }
    return worst;
}

}  // namespace cvtele
