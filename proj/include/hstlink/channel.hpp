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
#include <cstdint>

#include "hstlink/correlation.hpp"
#include "hstlink/pilot_layout.hpp"
#include "hstlink/rng.hpp"

namespace hstlink {

/// Symbol-time bookkeeping of a staticized block: the base station tunes T_s
/// so that D = v * K * T_s holds exactly, giving K equivalent frames per
/// block.
struct BlockTiming {
    double symbol_time = 0.0;  ///< T_s [s]
    int k_per_spacing = 0;     ///< K
    int frames_per_block() const { return k_per_spacing; }

    /// Solve T_s = D / (v K).
    static BlockTiming solve(double antenna_spacing, double speed, int k);
};

/// Per-symbol energy budget. Invariant: snr * noise_var == symbol_energy.
struct LinkBudget {
    double symbol_energy = 1.0;  ///< E_0
    double noise_var = 1.0;      ///< sigma_n^2
    double snr = 1.0;            ///< gamma = E_0 / sigma_n^2, linear

    static LinkBudget from_snr(double snr_linear);  ///< E_0 = 1
    static LinkBudget make(double e0, double sigma_n_sq);
};

/// One draw of the staticized channel vector, split into its components.
/// h = h_los + h_dif elementwise; E[|h_i|^2] = 1.
struct ChannelRealization {
    Eigen::VectorXcd h;
    Eigen::VectorXcd h_los;
    Eigen::VectorXcd h_dif;
};

/// Samples correlated channel vectors. The Cholesky factor of the full
/// n_r x n_r diffuse covariance (slot-distance exponential decay) is computed
/// once at construction; sampling is then a matrix-vector product. Immutable
/// after construction, safe to share across workers.
class ChannelSampler {
  public:
    ChannelSampler(const ScenarioParams &s, const PilotLayout &layout);

    /// Deterministic given the seed. Draw order: 2*n_r Gaussians for the
    /// diffuse vector (re/im interleaved), then one uniform LOS phase.
    ChannelRealization sample(std::uint64_t seed) const;
    /// Same, drawing from a caller-owned stream.
    ChannelRealization sample(Rng &rng) const;

    const Eigen::MatrixXd &cholesky_factor() const { return chol_; }

  private:
    Eigen::MatrixXd chol_;
    double los_amplitude_;
};

/// sample_channel builds a sampler and draws once; prefer ChannelSampler in
/// loops.
ChannelRealization sample_channel(const ScenarioParams &s, const PilotLayout &layout,
                                  std::uint64_t seed);

/// y_i = sqrt(E0) h_i x_i + n_i with i.i.d. complex Gaussian noise of
/// variance noise_var. All |x_i| must equal 1 within 1e-9 (ModulusError).
/// Deterministic given the seed (one complex normal per slot).
Eigen::VectorXcd transmit(const ChannelRealization &ch, const Eigen::VectorXcd &x,
                          const LinkBudget &budget, std::uint64_t seed);
Eigen::VectorXcd transmit(const ChannelRealization &ch, const Eigen::VectorXcd &x,
                          const LinkBudget &budget, Rng &rng);

}  // namespace hstlink
