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


#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvtele/atmosphere.h"
#include "cvtele_cli/commands.h"
#include "cvtele_cli/run_config.h"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::string out;
    std::string format = "csv";
    std::string summary;
    std::string ensemble;
};

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) {
        throw cvtele::cli::ConfigError("cannot write '" + path + "'");
    }
}

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--config", o.config, "INI file with [channel], [sweep], [scheme]")->required();
    cmd->add_option("--seed", o.seed, "override [sweep] seed");
    cmd->add_option("--samples", o.samples, "override [sweep] samples (at least 100)");
    cmd->add_option("--out", o.out, "output file, stdout if omitted");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

int run(const std::string &command, const Options &o) {
    using namespace cvtele::cli;
    RunConfig cfg = load_config(o.config);
    if (o.seed) {
        cfg.seed = *o.seed;
    }
    if (o.samples) {
        cfg.samples = *o.samples;
    }
    const OutputFormat format = o.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

    CommandOutput result;
    if (command == "pdt") {
        result = run_pdt(cfg, format);
        if (!o.ensemble.empty()) {
            write_text(o.ensemble, ensemble_csv(cfg));
        }
    } else if (command == "fidelity-sweep") {
        result = run_fidelity_sweep(cfg, format);
    } else {
        result = run_postselect_sweep(cfg, format);
    }
    write_text(o.out, result.primary);

    if (!result.summary.empty()) {
        std::string path = o.summary;
        if (path.empty() && !o.out.empty() && o.out != "-") {
            path = std::filesystem::path(o.out).replace_extension(".summary.json").string();
        }
        if (!path.empty()) {
            write_text(path, result.summary);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Teleportation fidelity through lossy and turbulent free-space channels"};
    app.require_subcommand(1);
    Options opts;

    auto *pdt = app.add_subcommand("pdt", "Histogram of the channel transmission");
    add_common(pdt, opts);
    pdt->add_option("--summary", opts.summary, "JSON summary path (default: next to --out)");
    pdt->add_option("--ensemble", opts.ensemble, "also export the raw samples as CSV");
    add_common(app.add_subcommand("fidelity-sweep", "Mean fidelity against squeezing"), opts);
    add_common(app.add_subcommand("postselect-sweep", "Direct and adaptive fidelity against T_min"), opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opts);
    } catch (const cvtele::cli::ConfigError &e) {
        std::cerr << "cvtele: config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "cvtele: invalid parameter: " << e.what() << "\n";
        return kExitConfig;
    } catch (const cvtele::NumericalInconsistency &e) {
        std::cerr << "cvtele: numerical inconsistency: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "cvtele: " << e.what() << "\n";
        return kExitNumerical;
    }
}
