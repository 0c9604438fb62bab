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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hstlink/experiment.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_path;
    long long seed = -1;
    int workers = 0;
    bool quiet = false;
};

void add_common(CLI::App *cmd, CliOptions &opt) {
    cmd->add_option("--config", opt.config_path, "Config file (key = value with [sections])");
    cmd->add_option("--out", opt.out_path, "Output CSV path (overrides config)");
    cmd->add_option("--seed", opt.seed, "Base seed (overrides config)");
    cmd->add_option("--workers", opt.workers, "Worker threads (overrides config)");
    cmd->add_flag("--quiet", opt.quiet, "Suppress the resolved-config echo and progress");
}

int run_mode(const std::string &mode, const CliOptions &opt) {
    hstlink::ExperimentConfig cfg;
    if (!opt.config_path.empty()) cfg = hstlink::ExperimentConfig::parse_file(opt.config_path);
    cfg.mode = mode;
    if (!opt.out_path.empty()) cfg.out = opt.out_path;
    if (opt.seed >= 0) cfg.base_seed = static_cast<std::uint64_t>(opt.seed);
    if (opt.workers > 0) cfg.workers = opt.workers;
    if (opt.quiet) cfg.progress = false;
    cfg.validate();

    if (!opt.quiet) std::cout << cfg.echo() << std::flush;

    const hstlink::ExperimentOutput result = hstlink::run_experiment(cfg);
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw hstlink::ConfigError("cannot open output path '" + cfg.out + "'");
    out << result.csv;
    out.close();

    if (!opt.quiet) {
        std::cerr << result.diagnostics;
        std::cerr << "wrote " << cfg.out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Link-level analysis of pilot-aided estimation over delay-correlated arrays"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App *analyze = app.add_subcommand("analyze", "Analytic MSE/BER/efficiency sweep");
    CLI::App *mc = app.add_subcommand("mc", "Monte Carlo validation sweep");
    CLI::App *tradeoff = app.add_subcommand("tradeoff", "Error/efficiency tradeoff polyline");
    add_common(analyze, opt);
    add_common(mc, opt);
    add_common(tradeoff, opt);

    CLI11_PARSE(app, argc, argv);

    std::string mode = "analyze";
    if (mc->parsed()) mode = "mc";
    if (tradeoff->parsed()) mode = "tradeoff";

    try {
        return run_mode(mode, opt);
    } catch (const hstlink::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
