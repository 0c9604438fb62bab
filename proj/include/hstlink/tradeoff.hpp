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

#include <utility>
#include <vector>

#include "hstlink/channel.hpp"
#include "hstlink/correlation.hpp"
#include "hstlink/metrics.hpp"

namespace hstlink {

/// One pilot-percentage grid point with analytic error probability and
/// spectral efficiency, plus values normalized at the efficiency-optimal
/// anchor.
struct TradeoffPoint {
    double delta = 0.0;
    int l_ratio = 0;
    double p_e = 0.0;
    double eta = 0.0;
    double p_e_norm = 0.0;
    double eta_norm = 0.0;
    bool is_anchor = false;
};

/// Polyline over the unit-fraction grid restricted to [delta_se_opt, 0.5],
/// sorted by delta descending. The anchor normalizes to (1, 1).
struct TradeoffCurve {
    std::vector<TradeoffPoint> points;
    double delta_se_opt = 0.0;
    double eta_max = 0.0;
};

/// Analytic average error probability at a grid point: per-group asymptotic
/// MSEs fed through the per-group BER, averaged over groups.
double analytic_p_e(const ScenarioParams &s, const LinkBudget &budget, double delta);

/// Analytic average spectral efficiency at a grid point.
double analytic_eta_up(const ScenarioParams &s, const LinkBudget &budget, double delta,
                       LogBase base = LogBase::Bits);

/// Evaluate eta_up on the grid {1/(L+1) : L = 1..l_max} and return
/// (delta_opt, eta_max). Ties break toward larger delta. Throws GridError if
/// l_max < 1.
std::pair<double, double> find_delta_se_opt(const ScenarioParams &s, const LinkBudget &budget,
                                            int l_max, LogBase base = LogBase::Bits);

/// Build the normalized tradeoff polyline over [delta_se_opt, 0.5]. The
/// expected joint monotonicity of p_e and eta in delta is checked and a
/// violation raises an Error with a diagnostic instead of reordering.
TradeoffCurve build_tradeoff(const ScenarioParams &s, const LinkBudget &budget, int l_max,
                             LogBase base = LogBase::Bits);

}  // namespace hstlink
