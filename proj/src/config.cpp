// hstlink — link-level analysis for delay-correlated antenna arrays
// Copyright (C) 2026 The hstlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hstlink/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hstlink {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, const std::string &v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception &) {
        throw ConfigError("config: key '" + key + "' has a malformed number '" + v + "'");
    }
}

long long parse_int(const std::string &key, const std::string &v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception &) {
        throw ConfigError("config: key '" + key + "' has a malformed integer '" + v + "'");
    }
}

std::vector<double> parse_double_list(const std::string &key, const std::string &v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("config: key '" + key + "' has an empty list entry");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "' has an empty list");
    return out;
}

/// Shortest round-trip decimal representation.
std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

double ExperimentConfig::k_r_linear() const { return std::pow(10.0, k_r_db / 10.0); }

std::vector<double> ExperimentConfig::snr_db_resolved() const {
    if (!snr_db_list.empty()) return snr_db_list;
    std::vector<double> out;
    for (int db = 0; db <= 40; db += 2) out.push_back(static_cast<double>(db));
    return out;
}

std::vector<int> ExperimentConfig::resolved_l_list() const {
    std::vector<int> ls;
    for (double d : delta_list) {
        if (!(d > 0.0 && d <= 0.5))
            throw ConfigError("config: delta must lie in (0, 0.5], got " + fmt_double(d));
        const double l_real = 1.0 / d - 1.0;
        const int l = static_cast<int>(std::lround(l_real));
        if (l < 1 || std::abs(l_real - l) > 1e-9 * (l + 1))
            throw ConfigError("config: delta must be a unit fraction 1/(L+1), got " +
                              fmt_double(d));
        ls.push_back(l);
    }
    return ls;
}

LogBase ExperimentConfig::resolved_log_base() const {
    if (log_base == "bits") return LogBase::Bits;
    if (log_base == "nats") return LogBase::Nats;
    throw ConfigError("config: log_base must be 'bits' or 'nats', got '" + log_base + "'");
}

ScenarioParams ExperimentConfig::scenario(int num_antennas) const {
    ScenarioParams s;
    s.rician_k = k_r_linear();
    s.scatter_decay = c0;
    s.antenna_spacing = antenna_spacing;
    s.speed = speed;
    s.wavelength = wavelength;
    s.aoa_width = kappa;
    s.aoa_mean = mu;
    s.heading = heading;
    s.num_antennas = num_antennas;
    s.validate();
    return s;
}

void ExperimentConfig::validate() const {
    if (mode != "analyze" && mode != "mc" && mode != "tradeoff")
        throw ConfigError("config: mode must be analyze|mc|tradeoff, got '" + mode + "'");
    if (num_trials <= 0) throw ConfigError("config: num_trials must be positive");
    if (n_p < 1) throw ConfigError("config: N_p must be >= 1");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
    if (l_max < 1) throw ConfigError("config: L_max must be >= 1");
    if (quad_nodes_omega < 2 || quad_nodes_phi < 2 || quad_nodes_chi2 < 2)
        throw ConfigError("config: quadrature node counts must be >= 2");
    if (out.empty()) throw ConfigError("config: out path must be nonempty");
    resolved_l_list();
    resolved_log_base();
    scenario(1);  // bounds of the scenario block
}

ExperimentConfig ExperimentConfig::parse_string(const std::string &text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "layout" && section != "budget" &&
                section != "run")
                throw ConfigError("config: unknown section '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("config: key '" + key + "' appears before any [section]");
        if (value.empty()) throw ConfigError("config: key '" + key + "' has an empty value");

        const std::string qual = section + "." + key;
        cfg.explicit_keys.insert(qual);
        if (section == "scenario") {
            if (key == "K_R_db") cfg.k_r_db = parse_double(qual, value);
            else if (key == "c0") cfg.c0 = parse_double(qual, value);
            else if (key == "D") cfg.antenna_spacing = parse_double(qual, value);
            else if (key == "v") cfg.speed = parse_double(qual, value);
            else if (key == "wavelength") cfg.wavelength = parse_double(qual, value);
            else if (key == "kappa") cfg.kappa = parse_double(qual, value);
            else if (key == "mu") cfg.mu = parse_double(qual, value);
            else if (key == "heading") cfg.heading = parse_double(qual, value);
            else throw ConfigError("config: unknown key '" + key + "' in [scenario]");
        } else if (section == "layout") {
            if (key == "N_p") cfg.n_p = static_cast<int>(parse_int(qual, value));
            else if (key == "delta_list") cfg.delta_list = parse_double_list(qual, value);
            else if (key == "L_list") {
                cfg.delta_list.clear();
                for (double l : parse_double_list(qual, value)) {
                    if (l < 1 || l != std::floor(l))
                        throw ConfigError("config: L_list entries must be integers >= 1");
                    cfg.delta_list.push_back(1.0 / (l + 1.0));
                }
            } else throw ConfigError("config: unknown key '" + key + "' in [layout]");
        } else if (section == "budget") {
            if (key == "snr_db") cfg.snr_db_list = parse_double_list(qual, value);
            else throw ConfigError("config: unknown key '" + key + "' in [budget]");
        } else {  // run
            if (key == "mode") cfg.mode = value;
            else if (key == "num_trials") cfg.num_trials = parse_int(qual, value);
            else if (key == "base_seed") cfg.base_seed = static_cast<std::uint64_t>(parse_int(qual, value));
            else if (key == "out") cfg.out = value;
            else if (key == "workers") cfg.workers = static_cast<int>(parse_int(qual, value));
            else if (key == "log_base") cfg.log_base = value;
            else if (key == "quad_nodes_omega") cfg.quad_nodes_omega = static_cast<int>(parse_int(qual, value));
            else if (key == "quad_nodes_phi") cfg.quad_nodes_phi = static_cast<int>(parse_int(qual, value));
            else if (key == "quad_nodes_chi2") cfg.quad_nodes_chi2 = static_cast<int>(parse_int(qual, value));
            else if (key == "L_max") cfg.l_max = static_cast<int>(parse_int(qual, value));
            else if (key == "progress") {
                if (value == "true" || value == "1") cfg.progress = true;
                else if (value == "false" || value == "0") cfg.progress = false;
                else throw ConfigError("config: progress must be true|false");
            }
            else throw ConfigError("config: unknown key '" + key + "' in [run]");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_string(ss.str());
}

std::string ExperimentConfig::echo() const {
    std::ostringstream os;
    auto nonpaper = [&](const std::string &qual) {
        return explicit_keys.count(qual) ? "" : "  # NONPAPER default";
    };
    os << "[scenario]\n";
    os << "K_R_db = " << fmt_double(k_r_db) << "\n";
    os << "c0 = " << fmt_double(c0) << "\n";
    os << "D = " << fmt_double(antenna_spacing) << nonpaper("scenario.D") << "\n";
    os << "v = " << fmt_double(speed) << nonpaper("scenario.v") << "\n";
    os << "wavelength = " << fmt_double(wavelength) << nonpaper("scenario.wavelength") << "\n";
    os << "kappa = " << fmt_double(kappa) << nonpaper("scenario.kappa") << "\n";
    os << "mu = " << fmt_double(mu) << nonpaper("scenario.mu") << "\n";
    os << "heading = " << fmt_double(heading) << nonpaper("scenario.heading") << "\n";
    os << "\n[layout]\n";
    os << "N_p = " << n_p << "\n";
    os << "delta_list = ";
    for (std::size_t i = 0; i < delta_list.size(); ++i)
        os << (i ? "," : "") << fmt_double(delta_list[i]);
    os << "\n";
    os << "\n[budget]\n";
    os << "snr_db = ";
    const auto snrs = snr_db_resolved();
    for (std::size_t i = 0; i < snrs.size(); ++i) os << (i ? "," : "") << fmt_double(snrs[i]);
    os << (snr_db_list.empty() ? "  # NONPAPER default" : "") << "\n";
    os << "\n[run]\n";
    os << "mode = " << mode << "\n";
    os << "num_trials = " << num_trials << "\n";
    os << "base_seed = " << base_seed << "\n";
    os << "out = " << out << "\n";
    os << "workers = " << workers << "\n";
    os << "log_base = " << log_base << "\n";
    os << "quad_nodes_omega = " << quad_nodes_omega << "\n";
    os << "quad_nodes_phi = " << quad_nodes_phi << "\n";
    os << "quad_nodes_chi2 = " << quad_nodes_chi2 << "\n";
    os << "L_max = " << l_max << "\n";
    os << "progress = " << (progress ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace hstlink
