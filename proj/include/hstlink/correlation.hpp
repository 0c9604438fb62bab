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

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hstlink/numerics.hpp"
#include "hstlink/pilot_layout.hpp"

namespace hstlink {

/// Physical scenario of a linear receive array moving along its own axis.
/// All quantities are linear (the CLI converts dB at the boundary). The
/// Rician factor splits unit channel power into a line-of-sight share
/// K/(K+1) and a diffuse share 1/(K+1).
struct ScenarioParams {
    double rician_k = 1.0;        ///< K_R, linear, >= 0
    double scatter_decay = 0.1;   ///< c0 [1/m], > 0
    double antenna_spacing = 0.5; ///< D [m], > 0
    double speed = 100.0;         ///< v [m/s], > 0
    double wavelength = 0.1;      ///< [m], > 0
    double aoa_width = 0.0;       ///< kappa, >= 0
    double aoa_mean = 0.0;        ///< mu [rad], in [-pi, pi)
    double heading = 0.0;         ///< travel direction [rad]
    int num_antennas = 1;         ///< N_R

    double doppler() const { return speed / wavelength; }
    /// alpha = exp(-c0 D / delta), the pilot-spacing correlation decay.
    double alpha(double delta) const;
    /// Diffuse power share 1/(K_R + 1).
    double diffuse_power() const { return 1.0 / (rician_k + 1.0); }
    /// LOS power share K_R/(K_R + 1).
    double los_power() const { return rician_k / (rician_k + 1.0); }

    void validate() const;  ///< throws ConfigError on bound violations
};

/// Spatial-temporal cross-correlation of the diffuse component between two
/// antennas separated by d meters and tau seconds. Complex in general; the
/// square root of the complex argument is taken on the principal branch
/// (I0 is even, so the branch choice does not affect the value).
std::complex<double> cross_corr_diffuse(const ScenarioParams &s, double tau, double d);

/// LOS cross-correlation: magnitude K/(K+1), phase Delta*cos(heading).
std::complex<double> cross_corr_los(const ScenarioParams &s, double tau, double d);

struct DelayCorrelation {
    double dif = 0.0;
    double los = 0.0;
};

/// Correlation between slots p and q of the staticized channel (antenna q at
/// time t vs antenna p at time t + (q-p)D/v): the location difference cancels
/// and only the scatter decay remains. Requires 1 <= p < q <= N_R.
DelayCorrelation delay_corr(const ScenarioParams &s, int p, int q);

/// Pilot-location autocorrelation matrix: (m,n) entry
/// exp(-c0 |m-n| D/delta) / (K_R+1).
SymmetricToeplitz build_r_hh(const ScenarioParams &s, const PilotLayout &layout);

/// Cross-correlation between group-u data slots and pilot slots: (m,n) entry
/// exp(-c0 |m-n+u*delta| D/delta) / (K_R+1). u = 0 is the degenerate pilot
/// case and returns the r_hh entries.
Eigen::MatrixXd build_r_dh(const ScenarioParams &s, const PilotLayout &layout, int u);

struct CorrelationSet {
    SymmetricToeplitz r_hh_dif;
    std::vector<Eigen::MatrixXd> r_dh_dif;  ///< index u-1, u = 1..L
    double los_coefficient = 0.0;           ///< K_R/(K_R+1)
};

CorrelationSet build_correlation_set(const ScenarioParams &s, const PilotLayout &layout);

}  // namespace hstlink
