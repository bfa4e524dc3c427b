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

#ifndef CVTELE_STRATEGIES_H
#define CVTELE_STRATEGIES_H

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cvtele/atmosphere.h"

namespace cvtele {

// Teleportation schemes under a fluctuating channel.
//
//   direct-single    mode B crosses the channel, mode A is lossless
//   adaptive-single  mode A is attenuated to the measured T_B of each event
//   direct-dual      both modes cross independent channels
//   adaptive-dual    the better arm is attenuated to the worse one
//
// Postselection drops events whose transmission is below T_min; averages are
// then taken over the surviving events only, which is the 1/E(T_min)
// renormalisation of the postselected distribution.

enum class SchemeMode { kDirectSingle, kAdaptiveSingle, kDirectDual, kAdaptiveDual };

std::string_view to_string(SchemeMode mode);
/// Parses "direct-single" etc. Throws std::invalid_argument on anything else.
SchemeMode parse_scheme_mode(std::string_view text);

struct SchemeSpec {
    SchemeMode mode = SchemeMode::kDirectSingle;
    /// Common threshold; applies to mode B and, for dual schemes, to mode A.
    std::optional<double> postselect_threshold;
    /// Separate threshold for mode A in dual schemes. Defaults to the common one.
    std::optional<double> threshold_a;

    bool is_dual() const { return mode == SchemeMode::kDirectDual || mode == SchemeMode::kAdaptiveDual; }
    bool is_adaptive() const { return mode == SchemeMode::kAdaptiveSingle || mode == SchemeMode::kAdaptiveDual; }

    /// Throws std::invalid_argument if a threshold lies outside [0, 1].
    void validate() const;
};

struct MeanFidelityResult {
    double mean_fidelity;
    /// Sample standard deviation of per-event fidelities over sqrt(n_used).
    double std_error;
    /// Postselection efficiency E: retained events over all events.
    double retained_fraction;
    std::size_t n_used;
};

/// Raised when postselection leaves no events.
class EmptySelection : public std::runtime_error {
   public:
    EmptySelection(const std::string &what, double threshold) : std::runtime_error(what), threshold_(threshold) {}
    double threshold() const { return threshold_; }

   private:
    double threshold_;
};

/// Samples with T >= t_min. Throws EmptySelection if none survive and
/// std::invalid_argument for t_min outside [0, 1].
TransmittanceEnsemble postselect(const TransmittanceEnsemble &ens, double t_min);

struct ChannelPair {
    double t_a;
    double t_b;
};

/// Adaptive loss correlation for two arms: both become min(t_a, t_b).
ChannelPair adaptive_pair_map(double t_a, double t_b);

/// Mean fidelity for a channel on mode B only. Throws std::invalid_argument
/// for dual modes or an empty ensemble, EmptySelection if postselection
/// removes every event.
MeanFidelityResult mean_fidelity_single(double r, const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme);

/// Mean fidelity with both arms on independent channels, paired by index.
/// Throws std::invalid_argument for single modes or mismatched lengths.
MeanFidelityResult mean_fidelity_dual(double r, const TransmittanceEnsemble &ens_a,
                                      const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme);

/// One row of a threshold sweep. `result` is empty once no event survives.
struct ThresholdRow {
    double t_min;
    double efficiency;
    std::optional<MeanFidelityResult> result;
};

/// Sweeps the postselection threshold. Thresholds must be ascending in [0, 1];
/// the scheme's own threshold is replaced by each row's value.
std::vector<ThresholdRow> fidelity_vs_threshold(double r, const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme,
                                                std::span<const double> thresholds);
std::vector<ThresholdRow> fidelity_vs_threshold(double r, const TransmittanceEnsemble &ens_a,
                                                const TransmittanceEnsemble &ens_b, const SchemeSpec &scheme,
                                                std::span<const double> thresholds);

/// Fraction of index-paired events with min(T_a, T_b) >= t_min.
double paired_exceedance(const TransmittanceEnsemble &ens_a, const TransmittanceEnsemble &ens_b, double t_min);

/// Kolmogorov distance between the empirical CDF of min(T_a, T_b) over
/// index-paired events and the order-statistics prediction
/// 1 - (1 - F_a)(1 - F_b) built from the two marginal empirical CDFs.
double min_map_ks_distance(const TransmittanceEnsemble &ens_a, const TransmittanceEnsemble &ens_b);

}  // namespace cvtele

#endif  // CVTELE_STRATEGIES_H
