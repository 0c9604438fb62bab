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

#include "hstlink/correlation.hpp"

namespace hstlink {

/// Spectral densities of the pilot-lag correlation sequences in the
/// large-frame limit. lambda() is the density of the pilot autocorrelation,
/// lambda_dh() the cross density between group-u data slots and pilots.
struct SpectralDensity {
    double alpha = 0.0;      ///< exp(-c0 D / delta)
    double beta = 1.0;       ///< exp(-c0 u D)
    double los_scale = 1.0;  ///< 1/(K_R + 1)

    double lambda(double omega) const;
    std::complex<double> lambda_dh(double omega) const;
    /// |lambda_dh|^2 expanded in real arithmetic; avoids the complex round
    /// trip in integrands.
    double lambda_dh_abs_sq(double omega) const;
};

/// Build the spectral densities for group u (u = 0 is the degenerate pilot
/// case with beta = 1, where lambda_dh collapses onto lambda).
SpectralDensity spectral_densities(const ScenarioParams &s, double delta, int u);

/// Large-N_p pilot-location MSE:
///   sigma_p^2 = 1 / sqrt(g^2 + 2 g (1+a^2)/(1-a^2) (K+1) + (K+1)^2).
/// Throws DegenerateError when alpha >= 1.
double sigma_p_asymptotic(const ScenarioParams &s, double delta, double gamma);

/// Large-N_p group-u data-location MSE: sigma_p^2 plus the spectral integral
///   (1/2pi) Int [ (lambda^2 - |lambda_dh|^2) / (lambda + 1/g) ] dOmega,
/// evaluated by node-doubling Gauss-Legendre quadrature starting from
/// omega_nodes.
double sigma_d_asymptotic(const ScenarioParams &s, double delta, double gamma, int u,
                          int omega_nodes = 256);

}  // namespace hstlink
