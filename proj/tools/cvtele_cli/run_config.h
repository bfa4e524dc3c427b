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


#ifndef CVTELE_CLI_RUN_CONFIG_H
#define CVTELE_CLI_RUN_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvtele/atmosphere.h"
#include "cvtele/strategies.h"
#include "json.hpp"

namespace cvtele::cli {

/// Bad or inconsistent configuration. Maps to exit status 1.
class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

enum class OutputFormat { kCsv, kJson };

/// Everything a command needs. Without a [channel] section the run is in
/// constant-loss mode and uses t_a, t_b.
struct RunConfig {
    std::optional<EllipticBeamParams> channel;
    double t_a = 1.0;
    double t_b = 1.0;

    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    std::size_t bins = 100;

    double r_lo = 0.0;
    double r_hi = 3.0;
    double r_step = 0.05;
    /// Squeezing for threshold sweeps.
    double r = 1.0;
    std::vector<double> t_min_list;

    SchemeSpec scheme;

    /// Worker threads for sampling; 0 picks the CVTELE_THREADS default.
    /// Never affects results.
    unsigned threads = 0;

    /// Throws ConfigError on any broken invariant.
    void validate() const;

    /// Squeezing grid r_lo, r_lo + step, ... up to r_hi inclusive.
    std::vector<double> r_grid() const;

    /// Fully resolved configuration, in config-file units.
    nlohmann::ordered_json to_json() const;
};

/// Parses INI text with sections [channel], [sweep], [scheme]. Unknown
/// sections or keys are errors. `origin` names the source in messages.
RunConfig parse_config(const std::string &text, const std::string &origin = "<config>");

/// Reads and parses a config file. Throws ConfigError if it cannot be read.
RunConfig load_config(const std::string &path);

/// Parses "0, 0.1, 0.5" or the inclusive range "lo:step:hi".
std::vector<double> parse_threshold_list(const std::string &text);

}  // namespace cvtele::cli

#endif  // CVTELE_CLI_RUN_CONFIG_H
