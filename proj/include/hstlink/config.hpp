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

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hstlink/correlation.hpp"
#include "hstlink/metrics.hpp"

namespace hstlink {

/// Experiment configuration, read from a flat key=value file with [section]
/// headers and '#' comments. Unknown sections or keys are ConfigErrors. The
/// echo() output is itself a valid config reproducing the identical run;
/// geometry values that are tool defaults rather than measured settings are
/// flagged NONPAPER there.
struct ExperimentConfig {
    // [scenario] — K_R is configured in dB and converted once, here.
    double k_r_db = 0.0;
    double c0 = 0.1;                ///< scatter decay [1/m]
    double antenna_spacing = 0.5;   ///< D [m]
    double speed = 100.0;           ///< v [m/s]
    double wavelength = 0.1;        ///< [m]
    double kappa = 0.0;             ///< AoA width
    double mu = 0.0;                ///< AoA mean [rad]
    double heading = 0.0;           ///< travel direction [rad]

    // [layout]
    int n_p = 16;
    std::vector<double> delta_list{0.02, 0.10, 0.50};

    // [budget]
    std::vector<double> snr_db_list;  ///< default 0..40 dB step 2

    // [run]
    std::string mode = "analyze";  ///< analyze | mc | tradeoff
    long long num_trials = 1000;
    std::uint64_t base_seed = 1;
    std::string out = "hstlink_out.csv";
    int workers = 1;
    std::string log_base = "bits";  ///< bits | nats
    int quad_nodes_omega = 256;
    int quad_nodes_phi = 256;
    int quad_nodes_chi2 = 512;
    int l_max = 50;
    bool progress = false;

    /// Keys the user set explicitly (section.key); everything else is a
    /// default and geometry defaults are flagged NONPAPER in the echo.
    std::set<std::string> explicit_keys;

    static ExperimentConfig parse_string(const std::string &text);
    static ExperimentConfig parse_file(const std::string &path);

    /// Resolved-config echo: valid config text, defaults included.
    std::string echo() const;

    /// Cross-field validation (also called by the parsers).
    void validate() const;

    double k_r_linear() const;
    std::vector<int> resolved_l_list() const;  ///< one L per delta
    std::vector<double> snr_db_resolved() const;
    LogBase resolved_log_base() const;
    ScenarioParams scenario(int num_antennas) const;
};

}  // namespace hstlink
