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

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cvtele/numeric.h"

namespace cvtele::cli {

namespace {

using boost::property_tree::ptree;

// Grid points lo + i * step snapped to 12 decimals, so 0.15 prints as 0.15.
double grid_point(double lo, double step, std::size_t i) {
    return std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &raw, const std::string &key) {
    const std::string text = trim(raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(key + ": expected a number, got '" + raw + "'");
    }
    if (!std::isfinite(value)) {
        throw ConfigError(key + ": value must be finite");
    }
    return value;
}

std::uint64_t parse_unsigned(const std::string &raw, const std::string &key) {
    const std::string text = trim(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + raw + "'");
    }
    return value;
}

// Walks one section, rejecting keys it does not know.
class Section {
   public:
    Section(const ptree &tree, std::string name, std::set<std::string> allowed)
        : name_(std::move(name)), allowed_(std::move(allowed)) {
        for (const auto &[key, child] : tree) {
            if (!child.empty()) {
                throw ConfigError("[" + name_ + "] " + key + ": nested values are not supported");
            }
            if (!allowed_.count(key)) {
                throw ConfigError("[" + name_ + "] unknown key '" + key + "'");
            }
            values_[key] = child.data();
        }
    }

    std::optional<std::string> get(const std::string &key) const {
        const auto it = values_.find(key);
        return it == values_.end() ? std::nullopt : std::optional<std::string>(it->second);
    }

    std::string label(const std::string &key) const { return "[" + name_ + "] " + key; }

    double number(const std::string &key, double fallback) const {
        const auto v = get(key);
        return v ? parse_double(*v, label(key)) : fallback;
    }

    double required(const std::string &key) const {
        const auto v = get(key);
        if (!v) {
            throw ConfigError(label(key) + " is required");
        }
        return parse_double(*v, label(key));
    }

   private:
    std::string name_;
    std::set<std::string> allowed_;
    std::map<std::string, std::string> values_;
};

ThetaSign parse_theta_sign(const std::string &raw) {
    const std::string text = trim(raw);
    if (text == "+1" || text == "1" || text == "+") {
        return ThetaSign::kPositive;
    }
    if (text == "-1" || text == "-") {
        return ThetaSign::kNegative;
    }
    throw ConfigError("[channel] theta_sign: expected +1 or -1, got '" + raw + "'");
}

}  // namespace

std::vector<double> parse_threshold_list(const std::string &raw) {
    const std::string text = trim(raw);
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string part; std::getline(ss, part, ':');) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw ConfigError("t_min range must read lo:step:hi, got '" + raw + "'");
        }
        const double lo = parse_double(parts[0], "t_min range lo");
        const double step = parse_double(parts[1], "t_min range step");
        const double hi = parse_double(parts[2], "t_min range hi");
        if (!(step > 0.0) || hi < lo) {
            throw ConfigError("t_min range needs step > 0 and lo <= hi");
        }
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(std::min(hi, grid_point(lo, step, i)));
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(parse_double(item, "t_min list"));
    }
    if (out.empty()) {
        throw ConfigError("t_min list is empty");
    }
    return out;
}

void RunConfig::validate() const {
    if (channel) {
        try {
            channel->validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    const auto unit = [](double v, const char *name) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ConfigError(std::string(name) + " must lie in [0, 1]");
        }
    };
    unit(t_a, "t_a");
    unit(t_b, "t_b");
    if (samples < 100) {
        throw ConfigError("samples must be at least 100, got " + std::to_string(samples));
    }
    if (bins < 2) {
        throw ConfigError("bins must be at least 2");
    }
    if (!(r_lo >= 0.0 && r_lo < r_hi && r_hi <= 10.0)) {
        throw ConfigError("squeezing range needs 0 <= r_lo < r_hi <= 10");
    }
    if (!(r_step > 0.0)) {
        throw ConfigError("r_step must be positive");
    }
    if (!(r >= 0.0 && r <= 10.0)) {
        throw ConfigError("r must lie in [0, 10]");
    }
    for (std::size_t i = 0; i < t_min_list.size(); ++i) {
        unit(t_min_list[i], "t_min");
        if (i > 0 && t_min_list[i] < t_min_list[i - 1]) {
            throw ConfigError("t_min list must be ascending");
        }
    }
    try {
        scheme.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

std::vector<double> RunConfig::r_grid() const {
    const auto count = static_cast<std::size_t>(std::floor((r_hi - r_lo) / r_step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = std::min(r_hi, grid_point(r_lo, r_step, i));
    }
    return grid;
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    if (channel) {
        j["channel"] = {{"wavelength_nm", channel->wavelength * 1e9},
                        {"w0_mm", channel->w0 * 1e3},
                        {"length_m", channel->length},
                        {"aperture_m", channel->aperture},
                        {"eta_m", channel->eta_m},
                        {"cn2", channel->cn2},
                        {"theta_sign", to_string(channel->theta_sign)}};
    } else {
        j["channel"] = nullptr;
    }
    j["sweep"] = {{"samples", samples}, {"seed", seed},   {"bins", bins}, {"r_lo", r_lo},
                  {"r_hi", r_hi},       {"r_step", r_step}, {"r", r},     {"t_min", t_min_list}};
    nlohmann::ordered_json s = {{"mode", std::string(to_string(scheme.mode))}, {"t_a", t_a}, {"t_b", t_b}};
    s["t_min"] = scheme.postselect_threshold ? nlohmann::ordered_json(*scheme.postselect_threshold) : nullptr;
    s["t_min_a"] = scheme.threshold_a ? nlohmann::ordered_json(*scheme.threshold_a) : nullptr;
    j["scheme"] = s;
    return j;
}

RunConfig parse_config(const std::string &text, const std::string &origin) {
    ptree tree;
    try {
        std::istringstream in(text);
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw ConfigError(origin + ": line " + std::to_string(e.line()) + ": " + e.message());
    }

    RunConfig cfg;
    for (const auto &[name, section] : tree) {
        if (section.empty() && !section.data().empty()) {
            throw ConfigError(origin + ": key '" + name + "' must sit inside a section");
        }
        if (name != "channel" && name != "sweep" && name != "scheme") {
            throw ConfigError(origin + ": unknown section [" + name + "]");
        }
    }

    try {
        if (const auto node = tree.get_child_optional("channel")) {
            const Section ch(*node, "channel",
                             {"wavelength_nm", "w0_mm", "length_m", "aperture_m", "eta_m", "cn2", "theta_sign"});
            EllipticBeamParams p{};
            p.wavelength = ch.required("wavelength_nm") * 1e-9;
            p.w0 = ch.required("w0_mm") * 1e-3;
            p.length = ch.required("length_m");
            p.aperture = ch.required("aperture_m");
            p.eta_m = ch.required("eta_m");
            p.cn2 = ch.required("cn2");
            if (const auto sign = ch.get("theta_sign")) {
                p.theta_sign = parse_theta_sign(*sign);
            }
            cfg.channel = p;
        }

        const Section sw(tree.get_child("sweep", ptree()), "sweep",
                         {"samples", "seed", "bins", "r_lo", "r_hi", "r_step", "r", "t_min"});
        if (const auto v = sw.get("samples")) {
            cfg.samples = parse_unsigned(*v, sw.label("samples"));
        }
        if (const auto v = sw.get("seed")) {
            cfg.seed = parse_unsigned(*v, sw.label("seed"));
        }
        if (const auto v = sw.get("bins")) {
            cfg.bins = parse_unsigned(*v, sw.label("bins"));
        }
        cfg.r_lo = sw.number("r_lo", cfg.r_lo);
        cfg.r_hi = sw.number("r_hi", cfg.r_hi);
        cfg.r_step = sw.number("r_step", cfg.r_step);
        cfg.r = sw.number("r", cfg.r);
        if (const auto v = sw.get("t_min")) {
            cfg.t_min_list = parse_threshold_list(*v);
        }

        const Section sc(tree.get_child("scheme", ptree()), "scheme", {"mode", "t_min", "t_min_a", "t_a", "t_b"});
        if (const auto v = sc.get("mode")) {
            try {
                cfg.scheme.mode = parse_scheme_mode(trim(*v));
            } catch (const std::invalid_argument &e) {
                throw ConfigError(std::string("[scheme] mode: ") + e.what());
            }
        }
        if (sc.get("t_min")) {
            cfg.scheme.postselect_threshold = sc.required("t_min");
        }
        if (sc.get("t_min_a")) {
            cfg.scheme.threshold_a = sc.required("t_min_a");
        }
        cfg.t_a = sc.number("t_a", cfg.t_a);
        cfg.t_b = sc.number("t_b", cfg.t_b);
        if (cfg.channel && (sc.get("t_a") || sc.get("t_b"))) {
            throw ConfigError("[scheme] t_a and t_b apply only without a [channel] section");
        }
    } catch (const ConfigError &e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path);
}

}  // namespace cvtele::cli
