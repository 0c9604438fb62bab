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

#include <vector>

#include "hstlink/errors.hpp"

namespace hstlink {

enum class LogBase { Bits, Nats };

/// Post-estimation link quality for one data group.
struct EffectiveLink {
    /// Correlation coefficient between the channel and its estimate.
    double rho = 1.0;
    /// Equivalent SNR 1/(sigma_d^2 + 1/gamma): the per-symbol SNR seen after
    /// the estimation residual is folded into the noise.
    double gamma_eff = 0.0;

    static EffectiveLink make(double k_r, double gamma, double sigma_d_sq);
};

/// Mean channel power retained by the MMSE estimate, E[|hhat|^2] = 1 - sigma^2.
inline double estimated_channel_power(double sigma_d_sq) { return 1.0 - sigma_d_sq; }

/// Average BPSK bit error rate of coherent detection against the MMSE channel
/// estimate, for one data group with estimation MSE sigma_d_sq.
///
/// Conditioned on the estimate hhat, the estimation residual adds Gaussian
/// noise of power E0 sigma^2 + sigma_n^2, so the conditional error rate is
/// Q(sqrt(2 |hhat|^2 gamma_eff)). hhat is Rician with LOS power K/(K+1) and
/// diffuse power 1/(K+1) - sigma^2; averaging with the standard MGF identity
/// yields
///   P_e = (1/pi) Int_0^{pi/2} B(phi) exp(-k_hat (1 - B(phi))) dphi,
///   B(phi) = [1 + (gamma_eff (1-(K+1) sigma^2) / (K+1)) / sin^2(phi)]^-1,
///   k_hat = K / (1 - (K+1) sigma^2).
/// Reduces to the perfect-CSI Rician BER at sigma^2 = 0. Throws
/// DegenerateError when sigma_d_sq reaches the diffuse prior power 1/(K+1).
double ber_group(double k_r, double gamma, double sigma_d_sq, int phi_nodes = 256);

/// Mean of the per-group error rates. Throws EmptyError on an empty vector.
double ber_average(const std::vector<double> &per_group);

/// Capacity upper bound conditioned on the channel estimate:
/// log(1 + |hhat|^2 gamma_eff), in bits (default) or nats.
double capacity_upper(double h_hat_mag_sq, double gamma_eff, LogBase base = LogBase::Bits);

/// Density of |sqrt(2(K+1)) h|^2 for a unit-power Rician channel: noncentral
/// chi-square with two degrees of freedom and noncentrality 2 K_R. Evaluated
/// in scaled form so large noncentralities do not overflow.
double noncentral_chi2_pdf(double x, double k_r);

/// Effective per-group spectral efficiency
///   (1 - delta) Int_0^inf log(1 + x gamma_eff / (2(K+1))) p(x) dx,
/// where p is the noncentral chi-square density above. The integrand is
/// entire, so the integral is truncated where p drops below 1e-14 of its
/// peak and evaluated by node-doubling Gauss-Legendre.
double spectral_efficiency_group(double k_r, double gamma, double delta, double sigma_d_sq,
                                 LogBase base = LogBase::Bits, int nodes = 512);

/// Mean over groups (the (1-delta) factor is already applied per group).
double spectral_efficiency_average(const std::vector<double> &per_group);

}  // namespace hstlink
