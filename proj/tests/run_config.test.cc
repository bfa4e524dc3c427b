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


#include "cvtele_cli/run_config.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

using namespace cvtele;
using namespace cvtele::cli;

namespace {

const char *kChannel = R"([channel]
wavelength_nm = 809
w0_mm = 20
length_m = 1600
aperture_m = 0.04
eta_m = 0.7
cn2 = 1.5e-14
)";

std::string config_path(const char *name) { return std::string(CVTELE_CONFIG_DIR) + "/" + name; }

}  // namespace

TEST(parse_config, channel_units) {
    const RunConfig cfg = parse_config(kChannel);
    ASSERT_TRUE(cfg.channel);
    EXPECT_DOUBLE_EQ(cfg.channel->wavelength, 809e-9);
    EXPECT_DOUBLE_EQ(cfg.channel->w0, 0.02);
    EXPECT_EQ(cfg.channel->length, 1600.0);
    EXPECT_EQ(cfg.channel->aperture, 0.04);
    EXPECT_EQ(cfg.channel->eta_m, 0.7);
    EXPECT_EQ(cfg.channel->cn2, 1.5e-14);
    EXPECT_EQ(cfg.channel->theta_sign, ThetaSign::kPositive);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(parse_config, defaults_without_sections) {
    const RunConfig cfg = parse_config("");
    EXPECT_FALSE(cfg.channel);
    EXPECT_EQ(cfg.samples, 100000u);
    EXPECT_EQ(cfg.seed, 1u);
    EXPECT_EQ(cfg.bins, 100u);
    EXPECT_EQ(cfg.r, 1.0);
    EXPECT_EQ(cfg.scheme.mode, SchemeMode::kDirectSingle);
    EXPECT_FALSE(cfg.scheme.postselect_threshold);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(parse_config, sweep_and_scheme) {
    const RunConfig cfg = parse_config(std::string(kChannel) + R"(theta_sign = -1
[sweep]
samples = 5000
seed = 18446744073709551615
bins = 40
r_lo = 0.5
r_hi = 2
r_step = 0.25
r = 1.5
t_min = 0.1, 0.2,0.5
[scheme]
mode = adaptive-dual
t_min = 0.4
t_min_a = 0.3
)");
    EXPECT_EQ(cfg.channel->theta_sign, ThetaSign::kNegative);
    EXPECT_EQ(cfg.samples, 5000u);
    EXPECT_EQ(cfg.seed, 18446744073709551615ull);
    EXPECT_EQ(cfg.bins, 40u);
    EXPECT_EQ(cfg.r, 1.5);
    EXPECT_EQ(cfg.t_min_list, (std::vector<double>{0.1, 0.2, 0.5}));
    EXPECT_EQ(cfg.scheme.mode, SchemeMode::kAdaptiveDual);
    EXPECT_EQ(cfg.scheme.postselect_threshold, 0.4);
    EXPECT_EQ(cfg.scheme.threshold_a, 0.3);
    EXPECT_EQ(cfg.r_grid(), (std::vector<double>{0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0}));
}

TEST(parse_config, constant_loss_transmissions) {
    const RunConfig cfg = parse_config("[scheme]\nt_a = 0.9\nt_b = 0.8\n");
    EXPECT_EQ(cfg.t_a, 0.9);
    EXPECT_EQ(cfg.t_b, 0.8);
    EXPECT_THROW(parse_config(std::string(kChannel) + "[scheme]\nt_b = 0.8\n"), ConfigError);
    EXPECT_THROW(parse_config("[scheme]\nt_b = 1.8\n").validate(), ConfigError);
}

TEST(parse_config, rejects_malformed_input) {
    EXPECT_THROW(parse_config("[channel]\nwavelength_nm = 809\n"), ConfigError);
    EXPECT_THROW(parse_config(std::string(kChannel) + "colour = red\n"), ConfigError);
    EXPECT_THROW(parse_config("[output]\npath = x\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep]\nsamples = many\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep]\nsamples = -5\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep]\nr_lo = 1x\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep]\nr_lo = nan\n"), ConfigError);
    EXPECT_THROW(parse_config("[scheme]\nmode = teleport\n"), ConfigError);
    EXPECT_THROW(parse_config(std::string(kChannel) + "theta_sign = 2\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep\nr = 1\n"), ConfigError);
    EXPECT_THROW(parse_config("[sweep]\nseed = 1\nseed = 2\n"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/cvtele.ini"), ConfigError);
}

TEST(validate, invariants) {
    const auto with = [](const std::string &sweep) { return parse_config("[sweep]\n" + sweep); };
    EXPECT_THROW(with("samples = 50\n").validate(), ConfigError);
    EXPECT_NO_THROW(with("samples = 100\n").validate());
    EXPECT_THROW(with("r_lo = 2\nr_hi = 2\n").validate(), ConfigError);
    EXPECT_THROW(with("r_lo = -0.1\n").validate(), ConfigError);
    EXPECT_THROW(with("r_hi = 10.5\n").validate(), ConfigError);
    EXPECT_NO_THROW(with("r_hi = 10\n").validate());
    EXPECT_THROW(with("r_step = 0\n").validate(), ConfigError);
    EXPECT_THROW(with("bins = 1\n").validate(), ConfigError);
    EXPECT_THROW(with("t_min = 0.5, 0.2\n").validate(), ConfigError);
    EXPECT_THROW(with("t_min = 0.5, 1.2\n").validate(), ConfigError);
    EXPECT_THROW(parse_config("[scheme]\nt_min = 1.5\n").validate(), ConfigError);
    EXPECT_THROW(parse_config(std::string(kChannel).replace(std::string(kChannel).find("0.7"), 3, "1.7")).validate(),
                 ConfigError);
}

TEST(parse_threshold_list, ranges_and_lists) {
    const auto r = parse_threshold_list("0:0.1:0.5");
    ASSERT_EQ(r.size(), 6u);
    EXPECT_EQ(r.front(), 0.0);
    EXPECT_NEAR(r.back(), 0.5, 1e-15);
    EXPECT_EQ(parse_threshold_list(" 0.7 "), (std::vector<double>{0.7}));
    EXPECT_EQ(parse_threshold_list("0.2:1:0.2"), (std::vector<double>{0.2}));
    EXPECT_THROW(parse_threshold_list("0:0:1"), ConfigError);
    EXPECT_THROW(parse_threshold_list("1:0.1:0"), ConfigError);
    EXPECT_THROW(parse_threshold_list("0:1"), ConfigError);
    EXPECT_THROW(parse_threshold_list("0.1,,0.2"), ConfigError);
}

TEST(to_json, round_trips_the_resolved_values) {
    const RunConfig cfg = load_config(config_path("erlangen_moderate.ini"));
    const auto j = cfg.to_json();
    EXPECT_DOUBLE_EQ(j["channel"]["wavelength_nm"].get<double>(), 809.0);
    EXPECT_DOUBLE_EQ(j["channel"]["w0_mm"].get<double>(), 20.0);
    EXPECT_EQ(j["channel"]["theta_sign"], "+1");
    EXPECT_EQ(j["sweep"]["samples"], 100000);
    EXPECT_EQ(j["scheme"]["mode"], "direct-single");
    EXPECT_TRUE(j["scheme"]["t_min"].is_null());
    EXPECT_TRUE(parse_config("").to_json()["channel"].is_null());
}

TEST(shipped_configs, all_parse_and_validate) {
    for (const char *name : {"erlangen_weak.ini", "erlangen_moderate.ini", "erlangen_strong.ini",
                             "constant_loss.ini", "postselect_moderate.ini", "dual_moderate.ini"}) {
        EXPECT_NO_THROW(load_config(config_path(name)).validate()) << name;
    }
}
