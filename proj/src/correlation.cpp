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

#include "hstlink/correlation.hpp"

#include <cmath>
#include <sstream>

namespace hstlink {

double ScenarioParams::alpha(double delta) const {
    return std::exp(-scatter_decay * antenna_spacing / delta);
}

void ScenarioParams::validate() const {
    if (!(rician_k >= 0.0)) throw ConfigError("scenario: rician_k must be >= 0");
    if (!(scatter_decay > 0.0)) throw ConfigError("scenario: scatter_decay must be > 0");
    if (!(antenna_spacing > 0.0)) throw ConfigError("scenario: antenna_spacing must be > 0");
    if (!(speed > 0.0)) throw ConfigError("scenario: speed must be > 0");
    if (!(wavelength > 0.0)) throw ConfigError("scenario: wavelength must be > 0");
    if (!(aoa_width >= 0.0)) throw ConfigError("scenario: aoa_width must be >= 0");
    if (!(aoa_mean >= -M_PI && aoa_mean < M_PI))
        throw ConfigError("scenario: aoa_mean must lie in [-pi, pi)");
    if (num_antennas < 1) throw ConfigError("scenario: num_antennas must be >= 1");
    if (!std::isfinite(doppler())) throw ConfigError("scenario: doppler frequency is not finite");
}

std::complex<double> cross_corr_diffuse(const ScenarioParams &s, double tau, double d) {
    const double delta_loc = 2.0 * M_PI * (s.doppler() * tau - d / s.wavelength);
    const double kappa = s.aoa_width;
    const std::complex<double> arg(kappa * kappa - delta_loc * delta_loc,
                                   -2.0 * kappa * delta_loc * std::cos(s.aoa_mean - s.heading));
    const std::complex<double> z = std::sqrt(arg);  // principal branch
    const std::complex<double> num = bessel_i0(z);
    const double den = (s.rician_k + 1.0) * bessel_i0(kappa);
    return num / den * std::exp(-s.scatter_decay * s.speed * std::abs(tau));
}

std::complex<double> cross_corr_los(const ScenarioParams &s, double tau, double d) {
    const double delta_loc = 2.0 * M_PI * (s.doppler() * tau - d / s.wavelength);
    const std::complex<double> phase(0.0, delta_loc * std::cos(s.heading));
    return s.los_power() * std::exp(phase);
}

DelayCorrelation delay_corr(const ScenarioParams &s, int p, int q) {
    if (p < 1 || q <= p || q > s.num_antennas) {
        std::ostringstream os;
        os << "delay_corr: indices must satisfy 1 <= p < q <= N_R, got p=" << p << " q=" << q
           << " N_R=" << s.num_antennas;
        throw IndexError(os.str());
    }
    DelayCorrelation out;
    out.dif = std::exp(-s.scatter_decay * (q - p) * s.antenna_spacing) * s.diffuse_power();
    out.los = s.los_power();
    return out;
}

SymmetricToeplitz build_r_hh(const ScenarioParams &s, const PilotLayout &layout) {
    // Pilot spacing is (L+1) slots = D/delta meters.
    const double rate = s.scatter_decay * s.antenna_spacing * (layout.l_ratio + 1);
    std::vector<double> row(layout.n_p);
    for (int k = 0; k < layout.n_p; ++k) row[k] = std::exp(-rate * k) * s.diffuse_power();
    return SymmetricToeplitz(std::move(row));
}

Eigen::MatrixXd build_r_dh(const ScenarioParams &s, const PilotLayout &layout, int u) {
    if (u < 0 || u > layout.l_ratio) {
        std::ostringstream os;
        os << "build_r_dh: group index u=" << u << " outside 0.." << layout.l_ratio;
        throw IndexError(os.str());
    }
    // |m-n+u*delta| * D/delta = |(m-n)(L+1) + u| * D: integer slot distances.
    const int period = layout.l_ratio + 1;
    Eigen::MatrixXd m(layout.n_p, layout.n_p);
    for (int i = 0; i < layout.n_p; ++i) {
        for (int j = 0; j < layout.n_p; ++j) {
            const double slots = std::abs((i - j) * period + u);
            m(i, j) = std::exp(-s.scatter_decay * s.antenna_spacing * slots) * s.diffuse_power();
        }
    }
    return m;
}

CorrelationSet build_correlation_set(const ScenarioParams &s, const PilotLayout &layout) {
    CorrelationSet set{build_r_hh(s, layout), {}, s.los_power()};
    set.r_dh_dif.reserve(layout.l_ratio);
    for (int u = 1; u <= layout.l_ratio; ++u) set.r_dh_dif.push_back(build_r_dh(s, layout, u));
    return set;
}

}  // namespace hstlink
