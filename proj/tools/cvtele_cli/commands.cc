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


#include "cvtele_cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "cvtele/gaussian_teleport.h"
#include "cvtele/numeric.h"

namespace cvtele::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kClassicalLimit = 0.5;
// Mode B always draws stream 0 so single and dual runs share it.
constexpr std::uint32_t kStreamB = 0;
constexpr std::uint32_t kStreamA = 1;

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

const EllipticBeamParams &require_channel(const RunConfig &cfg, const char *command) {
    if (!cfg.channel) {
        throw ConfigError(std::string(command) + " needs a [channel] section");
    }
    return *cfg.channel;
}

TransmittanceEnsemble sample(const RunConfig &cfg, std::uint32_t stream) {
    return sample_transmittance_ensemble(*cfg.channel, cfg.samples, cfg.seed, stream, cfg.threads);
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json header(const RunConfig &cfg, const char *command) {
    json j;
    j["command"] = command;
    j["config"] = cfg.to_json();
    return j;
}

void add_hashes(json &j, const TransmittanceEnsemble &b, const std::optional<TransmittanceEnsemble> &a) {
    j["params_hash"] = hex64(params_hash(*b.params()));
    j["ensemble_hash"] = hex64(b.content_hash());
    if (a) {
        j["ensemble_hash_a"] = hex64(a->content_hash());
    }
}

json optional_number(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

std::string csv_field(const std::optional<double> &v) { return v ? format_g17(*v) : std::string(); }

struct SweepRow {
    double r;
    std::optional<MeanFidelityResult> result;
    double efficiency;
};

SweepRow constant_loss_row(const RunConfig &cfg, double r) {
    const SchemeSpec &s = cfg.scheme;
    const double t_min = s.postselect_threshold.value_or(0.0);
    const double t_min_a = s.threshold_a.value_or(t_min);
    const bool kept = cfg.t_b >= t_min && (!s.is_dual() || cfg.t_a >= t_min_a);
    if (!kept) {
        return {r, std::nullopt, 0.0};
    }
    double f;
    if (s.is_adaptive()) {
        const ChannelPair m = adaptive_pair_map(cfg.t_a, cfg.t_b);
        f = fidelity_closed_form(TeleportParams(r, m.t_a, m.t_b));
    } else {
        f = fidelity_closed_form(TeleportParams(r, cfg.t_a, cfg.t_b));
    }
    return {r, MeanFidelityResult{f, 0.0, 1.0, 1}, 1.0};
}

}  // namespace

CommandOutput run_pdt(const RunConfig &cfg, OutputFormat format) {
    cfg.validate();
    const EllipticBeamParams &p = require_channel(cfg, "pdt");
    const TransmittanceEnsemble e = sample(cfg, kStreamB);
    const EmpiricalPdt pdt = empirical_pdt(e, cfg.bins);
    const std::vector<double> centers = pdt.bin_centers();

    json summary = header(cfg, "pdt");
    summary["seed"] = cfg.seed;
    summary["samples"] = cfg.samples;
    summary["theta_sign"] = to_string(p.theta_sign);
    add_hashes(summary, e, std::nullopt);
    summary["mean"] = e.mean();
    summary["stddev"] = e.stddev();

    CommandOutput out;
    if (format == OutputFormat::kJson) {
        json hist = json::array();
        for (std::size_t i = 0; i < centers.size(); ++i) {
            hist.push_back({{"bin_center", centers[i]}, {"probability", pdt.probabilities[i]}});
        }
        summary["histogram"] = std::move(hist);
        out.primary = dump(summary);
        return out;
    }
    std::ostringstream csv;
    csv << "bin_center,probability\n";
    for (std::size_t i = 0; i < centers.size(); ++i) {
        csv << format_g17(centers[i]) << ',' << format_g17(pdt.probabilities[i]) << '\n';
    }
    out.primary = csv.str();
    out.summary = dump(summary);
    return out;
}

std::string ensemble_csv(const RunConfig &cfg) {
    cfg.validate();
    require_channel(cfg, "ensemble export");
    std::ostringstream out;
    write_ensemble_csv(out, sample(cfg, kStreamB));
    return out.str();
}

CommandOutput run_fidelity_sweep(const RunConfig &cfg, OutputFormat format) {
    cfg.validate();
    const SchemeSpec &scheme = cfg.scheme;
    std::vector<SweepRow> rows;
    json doc = header(cfg, "fidelity-sweep");

    if (!cfg.channel) {
        for (double r : cfg.r_grid()) {
            rows.push_back(constant_loss_row(cfg, r));
        }
    } else {
        const TransmittanceEnsemble b = sample(cfg, kStreamB);
        std::optional<TransmittanceEnsemble> a;
        if (scheme.is_dual()) {
            a = sample(cfg, kStreamA);
        }
        add_hashes(doc, b, a);
        for (double r : cfg.r_grid()) {
            try {
                const MeanFidelityResult res =
                    a ? mean_fidelity_dual(r, *a, b, scheme) : mean_fidelity_single(r, b, scheme);
                rows.push_back({r, res, res.retained_fraction});
            } catch (const EmptySelection &) {
                rows.push_back({r, std::nullopt, 0.0});
            }
        }
    }

    const std::string mode(to_string(scheme.mode));
    const double t_min = scheme.postselect_threshold.value_or(0.0);
    if (format == OutputFormat::kJson) {
        json list = json::array();
        for (const SweepRow &row : rows) {
            list.push_back({{"r", row.r},
                            {"scheme", mode},
                            {"t_min", t_min},
                            {"mean_fidelity", optional_number(row.result ? std::optional(row.result->mean_fidelity)
                                                                         : std::nullopt)},
                            {"std_error", optional_number(row.result ? std::optional(row.result->std_error)
                                                                     : std::nullopt)},
                            {"efficiency", row.efficiency},
                            {"n_used", row.result ? row.result->n_used : 0},
                            {"classical_limit", kClassicalLimit},
                            {"status", row.result ? "ok" : "empty"}});
        }
        doc["rows"] = std::move(list);
        return {dump(doc), ""};
    }
    std::ostringstream csv;
    csv << "r,scheme,t_min,mean_fidelity,std_error,efficiency,n_used,classical_limit,status\n";
    for (const SweepRow &row : rows) {
        csv << format_g17(row.r) << ',' << mode << ',' << format_g17(t_min) << ','
            << csv_field(row.result ? std::optional(row.result->mean_fidelity) : std::nullopt) << ','
            << csv_field(row.result ? std::optional(row.result->std_error) : std::nullopt) << ','
            << format_g17(row.efficiency) << ',' << (row.result ? row.result->n_used : 0) << ','
            << format_g17(kClassicalLimit) << ',' << (row.result ? "ok" : "empty") << '\n';
    }
    return {csv.str(), ""};
}

CommandOutput run_postselect_sweep(const RunConfig &cfg, OutputFormat format) {
    cfg.validate();
    require_channel(cfg, "postselect-sweep");
    if (cfg.t_min_list.empty()) {
        throw ConfigError("postselect-sweep needs a [sweep] t_min list");
    }
    const bool dual = cfg.scheme.is_dual();
    const TransmittanceEnsemble b = sample(cfg, kStreamB);
    std::optional<TransmittanceEnsemble> a;
    if (dual) {
        a = sample(cfg, kStreamA);
    }

    SchemeSpec direct = cfg.scheme;
    SchemeSpec adaptive = cfg.scheme;
    direct.mode = dual ? SchemeMode::kDirectDual : SchemeMode::kDirectSingle;
    adaptive.mode = dual ? SchemeMode::kAdaptiveDual : SchemeMode::kAdaptiveSingle;
    const auto sweep = [&](const SchemeSpec &s) {
        return a ? fidelity_vs_threshold(cfg.r, *a, b, s, cfg.t_min_list)
                 : fidelity_vs_threshold(cfg.r, b, s, cfg.t_min_list);
    };
    const std::vector<ThresholdRow> d = sweep(direct);
    const std::vector<ThresholdRow> ad = sweep(adaptive);

    json doc = header(cfg, "postselect-sweep");
    add_hashes(doc, b, a);
    const auto field = [](const ThresholdRow &row, double MeanFidelityResult::*member) {
        return row.result ? std::optional<double>((*row.result).*member) : std::nullopt;
    };

    if (format == OutputFormat::kJson) {
        json list = json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            list.push_back({{"t_min", d[i].t_min},
                            {"mean_fidelity_direct", optional_number(field(d[i], &MeanFidelityResult::mean_fidelity))},
                            {"mean_fidelity_adaptive",
                             optional_number(field(ad[i], &MeanFidelityResult::mean_fidelity))},
                            {"efficiency", d[i].efficiency},
                            {"std_error_direct", optional_number(field(d[i], &MeanFidelityResult::std_error))},
                            {"std_error_adaptive", optional_number(field(ad[i], &MeanFidelityResult::std_error))},
                            {"n_used", d[i].result ? d[i].result->n_used : 0},
                            {"status", d[i].result ? "ok" : "empty"}});
        }
        doc["r"] = cfg.r;
        doc["rows"] = std::move(list);
        return {dump(doc), ""};
    }
    std::ostringstream csv;
    csv << "t_min,mean_fidelity_direct,mean_fidelity_adaptive,efficiency,std_error_direct,std_error_adaptive,"
           "n_used,status\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        csv << format_g17(d[i].t_min) << ',' << csv_field(field(d[i], &MeanFidelityResult::mean_fidelity)) << ','
            << csv_field(field(ad[i], &MeanFidelityResult::mean_fidelity)) << ',' << format_g17(d[i].efficiency)
            << ',' << csv_field(field(d[i], &MeanFidelityResult::std_error)) << ','
            << csv_field(field(ad[i], &MeanFidelityResult::std_error)) << ','
            << (d[i].result ? d[i].result->n_used : 0) << ',' << (d[i].result ? "ok" : "empty") << '\n';
    }
    return {csv.str(), ""};
}

}  // namespace cvtele::cli
