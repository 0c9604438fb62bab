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

#include <string>

#include "hstlink/config.hpp"

namespace hstlink {

struct ExperimentOutput {
    std::string csv;          ///< full CSV text, header included
    std::string diagnostics;  ///< human-readable notes (stderr material)
};

/// Analytic sweep over the delta x SNR grid: per-row asymptotic MSEs, average
/// error probability and spectral efficiency.
ExperimentOutput run_analyze(const ExperimentConfig &cfg);

/// Monte Carlo validation sweep: empirical MSEs and BER with standard errors,
/// the matching finite-frame analytic BER and its z-score.
ExperimentOutput run_mc(const ExperimentConfig &cfg);

/// Normalized error-probability / spectral-efficiency tradeoff polyline at
/// the first configured SNR.
ExperimentOutput run_tradeoff(const ExperimentConfig &cfg);

/// Dispatch on cfg.mode.
ExperimentOutput run_experiment(const ExperimentConfig &cfg);

}  // namespace hstlink
