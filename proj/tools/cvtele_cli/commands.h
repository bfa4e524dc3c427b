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


#ifndef CVTELE_CLI_COMMANDS_H
#define CVTELE_CLI_COMMANDS_H

#include <string>

#include "cvtele_cli/run_config.h"

namespace cvtele::cli {

/// Text produced by a command. Commands never touch the filesystem, so equal
/// inputs give byte-equal outputs that tests can compare directly.
struct CommandOutput {
    /// CSV or JSON document in the requested format.
    std::string primary;
    /// JSON run summary; only pdt fills it when the primary output is CSV.
    std::string summary;
};

/// Histogram of the amplitude transmission. CSV columns: bin_center,
/// probability. The JSON summary carries mean, stddev, seed, the resolved
/// config and the ensemble hash.
CommandOutput run_pdt(const RunConfig &cfg, OutputFormat format);

/// The sampled ensemble behind run_pdt, one T per line.
std::string ensemble_csv(const RunConfig &cfg);

/// Mean fidelity over the squeezing grid. CSV columns: r, scheme, t_min,
/// mean_fidelity, std_error, efficiency, n_used, classical_limit, status.
CommandOutput run_fidelity_sweep(const RunConfig &cfg, OutputFormat format);

/// Direct and adaptive mean fidelity over the threshold list at fixed r.
/// CSV columns: t_min, mean_fidelity_direct, mean_fidelity_adaptive,
/// efficiency, std_error_direct, std_error_adaptive, n_used, status.
CommandOutput run_postselect_sweep(const RunConfig &cfg, OutputFormat format);

}  // namespace cvtele::cli

#endif  // CVTELE_CLI_COMMANDS_H
