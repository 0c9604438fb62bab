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

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hstlink/channel.hpp"
#include "hstlink/correlation.hpp"
#include "hstlink/pilot_layout.hpp"

namespace hstlink {

enum class DetectorCsi { Estimated, Genie };

struct TrialConfig {
    ScenarioParams scenario;
    PilotLayout layout;
    LinkBudget budget;
    long long num_trials = 0;  ///< >= 100 for any reported statistic
    std::uint64_t base_seed = 1;
    DetectorCsi detector_csi = DetectorCsi::Estimated;
    int workers = 1;
    bool progress = false;  ///< stderr line every 10^4 trials
};

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct EmpiricalReport {
    MeanStderr mse_pilot;
    std::vector<MeanStderr> mse_data_per_u;  ///< u = 1..L
    MeanStderr ber;
    long long trials_run = 0;
    long long data_bits = 0;
    long long zero_channel_flips = 0;
};

/// BPSK decision from the received sample and a channel reference:
/// sign of Re(h^* y). Throws ZeroChannelError when |h| < 1e-300.
int detect_bpsk(std::complex<double> y, std::complex<double> h, double symbol_energy);

/// End-to-end simulation: per trial, draw a channel, transmit a pilot+BPSK
/// frame, run the two-step estimator, detect the data slots and accumulate
/// squared estimation errors and bit errors.
///
/// Per-trial seeds derive from (base_seed, trial_index), and trials are
/// accumulated in fixed-size blocks merged in block order, so the report is
/// bit-identical for a given base_seed regardless of worker count.
EmpiricalReport run(const TrialConfig &config);

}  // namespace hstlink
