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

#include "hstlink/tradeoff.hpp"

#include <cmath>
#include <sstream>

#include "hstlink/asymptotic.hpp"

namespace hstlink {

namespace {

std::vector<double> group_mses(const ScenarioParams &s, double gamma, double delta) {
    const int l = static_cast<int>(std::lround(1.0 / delta)) - 1;
    std::vector<double> mses(l);
    for (int u = 1; u <= l; ++u) mses[u - 1] = sigma_d_asymptotic(s, delta, gamma, u);
    return mses;
}

}  // namespace

double analytic_p_e(const ScenarioParams &s, const LinkBudget &budget, double delta) {
    std::vector<double> pe;
    for (double mse : group_mses(s, budget.snr, delta))
        pe.push_back(ber_group(s.rician_k, budget.snr, mse));
    return ber_average(pe);
}

double analytic_eta_up(const ScenarioParams &s, const LinkBudget &budget, double delta,
                       LogBase base) {
    std::vector<double> eta;
    for (double mse : group_mses(s, budget.snr, delta))
        eta.push_back(spectral_efficiency_group(s.rician_k, budget.snr, delta, mse, base));
    return spectral_efficiency_average(eta);
}

std::pair<double, double> find_delta_se_opt(const ScenarioParams &s, const LinkBudget &budget,
                                            int l_max, LogBase base) {
    if (l_max < 1) throw GridError("find_delta_se_opt: l_max must be >= 1");
    double best_delta = 0.0;
    double best_eta = -1.0;
    // Scan from delta = 1/2 downward: strict improvement required, so ties
    // resolve toward larger delta (more pilots).
    for (int l = 1; l <= l_max; ++l) {
        const double delta = 1.0 / (l + 1);
        const double eta = analytic_eta_up(s, budget, delta, base);
        if (eta > best_eta) {
            best_eta = eta;
            best_delta = delta;
        }
    }
    return {best_delta, best_eta};
}

TradeoffCurve build_tradeoff(const ScenarioParams &s, const LinkBudget &budget, int l_max,
                             LogBase base) {
    const auto [delta_opt, eta_max] = find_delta_se_opt(s, budget, l_max, base);
    TradeoffCurve curve;
    curve.delta_se_opt = delta_opt;
    curve.eta_max = eta_max;

    const int l_opt = static_cast<int>(std::lround(1.0 / delta_opt)) - 1;
    const double p_e_anchor = analytic_p_e(s, budget, delta_opt);
    for (int l = 1; l <= l_opt; ++l) {
        TradeoffPoint pt;
        pt.l_ratio = l;
        pt.delta = 1.0 / (l + 1);
        pt.p_e = analytic_p_e(s, budget, pt.delta);
        pt.eta = (l == l_opt) ? eta_max : analytic_eta_up(s, budget, pt.delta, base);
        pt.p_e_norm = pt.p_e / p_e_anchor;
        pt.eta_norm = pt.eta / eta_max;
        pt.is_anchor = (l == l_opt);
        curve.points.push_back(pt);
    }

    // Expected shape on [delta_opt, 0.5]: both metrics nonincreasing in delta,
    // i.e. nondecreasing along the stored descending-delta order.
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const TradeoffPoint &hi = curve.points[i - 1];  // larger delta
        const TradeoffPoint &lo = curve.points[i];
        if (lo.p_e < hi.p_e - 1e-15 || lo.eta < hi.eta - 1e-12) {
            std::ostringstream os;
            os << "build_tradeoff: monotonicity violated between delta=" << hi.delta << " and "
               << lo.delta << " (p_e " << hi.p_e << " -> " << lo.p_e << ", eta " << hi.eta
               << " -> " << lo.eta << ")";
            throw Error(os.str());
        }
    }
    return curve;
}

}  // namespace hstlink
