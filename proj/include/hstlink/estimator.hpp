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

#include "hstlink/channel.hpp"
#include "hstlink/correlation.hpp"
#include "hstlink/pilot_layout.hpp"

namespace hstlink {

/// Finite-N channel-estimation error report: average MSEs and the full error
/// correlation matrices at pilot and per-group data locations.
struct MseReport {
    double sigma_p_sq_finite = 0.0;          ///< trace(R_ee)/N_p
    std::vector<double> sigma_d_sq_finite;   ///< trace(Psi_ee,u)/N_p, u = 1..L
    Eigen::MatrixXd error_cov_pilot;         ///< R_ee
    std::vector<Eigen::MatrixXd> error_cov_data;  ///< Psi_ee,u
};

/// Two-Step MMSE estimator with all-ones pilots (P = I). Precomputes the
/// pilot MMSE matrix, the per-group interpolators and the factorization used
/// by the direct estimator. Immutable after construction; estimation calls
/// are pure and reentrant.
class EstimatorContext {
  public:
    EstimatorContext(const ScenarioParams &s, const PilotLayout &layout, const LinkBudget &budget);

    const PilotLayout &layout() const { return layout_; }
    const LinkBudget &budget() const { return budget_; }
    /// W_p^H where W_p = sqrt(E0) (E0 R + sigma_n^2 I)^-1 R. Real because the
    /// correlation matrices are real.
    const Eigen::MatrixXd &pilot_mmse_matrix() const { return w_p_h_; }
    /// W_{d,u}^H = R_dh,u R^-1.
    const Eigen::MatrixXd &interpolator(int u) const;

    /// Step one: diffuse estimate at pilot locations from the received pilot
    /// vector, hhat_p = W_p^H (y_p - sqrt(E0) h_p_los).
    Eigen::VectorXcd estimate_pilot_locations(const Eigen::VectorXcd &y_p,
                                              const Eigen::VectorXcd &h_los_p) const;

    /// Step two: hhat_{d,u} = W_{d,u}^H hhat_p_dif + h_los_d.
    Eigen::VectorXcd interpolate(const Eigen::VectorXcd &hhat_p_dif, int u,
                                 const Eigen::VectorXcd &h_los_d) const;

    /// One-shot optimum linear MMSE at an arbitrary slot (1-based), taking the
    /// full-length LOS vector. Numerically independent of the two-step path.
    std::complex<double> estimate_direct(const Eigen::VectorXcd &y_p,
                                         const Eigen::VectorXcd &h_los_full, int slot) const;

    /// Error correlation matrices R_ee and Psi_ee,u with their traces.
    MseReport error_covariances() const;

  private:
    PilotLayout layout_;
    LinkBudget budget_;
    ScenarioParams scenario_;
    Eigen::MatrixXd r_hh_;
    std::vector<Eigen::MatrixXd> r_dh_;          // u = 1..L
    Eigen::MatrixXd w_p_h_;                      // sqrt(E0) R (E0 R + sn2 I)^-1
    std::vector<Eigen::MatrixXd> interpolators_; // W_{d,u}^H
    Eigen::LLT<Eigen::MatrixXd> gram_llt_;       // E0 R + sn2 I
};

/// trace(R_ee)/N_p without forming matrices. Uses the tridiagonal inverse of
/// the exponential-correlation Toeplitz matrix, so it runs in O(N_p); agrees
/// with EstimatorContext::error_covariances to machine precision (tested).
double finite_pilot_mse(const ScenarioParams &s, const PilotLayout &layout, double gamma);

/// trace(Psi_ee,u)/N_p by dense factorization (O(N_p^3), no matrices kept).
double finite_data_mse(const ScenarioParams &s, const PilotLayout &layout, double gamma, int u);

}  // namespace hstlink
