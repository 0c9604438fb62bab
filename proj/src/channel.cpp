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

#include "hstlink/channel.hpp"

#include <cmath>
#include <sstream>

namespace hstlink {

PilotLayout make_layout(int n_p, int l) {
    if (n_p < 1) throw ConfigError("make_layout: n_p must be >= 1");
    if (l < 1) throw ConfigError("make_layout: l must be >= 1");
    PilotLayout lay;
    lay.n_p = n_p;
    lay.l_ratio = l;
    lay.n_s = n_p * l;
    lay.n_r = n_p * (l + 1);
    lay.delta = 1.0 / (l + 1);
    lay.pilot_indices.resize(n_p);
    for (int k = 1; k <= n_p; ++k) lay.pilot_indices[k - 1] = lay.pilot_slot(k);
    return lay;
}

BlockTiming BlockTiming::solve(double antenna_spacing, double speed, int k) {
    if (k < 1) throw ConfigError("BlockTiming: k must be >= 1");
    if (!(antenna_spacing > 0.0) || !(speed > 0.0))
        throw ConfigError("BlockTiming: spacing and speed must be > 0");
    BlockTiming t;
    t.k_per_spacing = k;
    t.symbol_time = antenna_spacing / (speed * k);
    return t;
}

LinkBudget LinkBudget::from_snr(double snr_linear) {
    if (!(snr_linear > 0.0)) throw ConfigError("LinkBudget: snr must be > 0");
    LinkBudget b;
    b.symbol_energy = 1.0;
    b.noise_var = 1.0 / snr_linear;
    b.snr = snr_linear;
    return b;
}

LinkBudget LinkBudget::make(double e0, double sigma_n_sq) {
    if (!(e0 > 0.0) || !(sigma_n_sq > 0.0))
        throw ConfigError("LinkBudget: energy and noise variance must be > 0");
    LinkBudget b;
    b.symbol_energy = e0;
    b.noise_var = sigma_n_sq;
    b.snr = e0 / sigma_n_sq;
    return b;
}

ChannelSampler::ChannelSampler(const ScenarioParams &s, const PilotLayout &layout) {
    s.validate();
    const int n = layout.n_r;
    // Full diffuse covariance over slots: adjacent slots map to adjacent
    // array positions, so the lag-k correlation is exp(-c0 k D) / (K_R+1).
    std::vector<double> row(n);
    for (int k = 0; k < n; ++k)
        row[k] = std::exp(-s.scatter_decay * s.antenna_spacing * k) * s.diffuse_power();
    chol_ = cholesky_psd(SymmetricToeplitz(std::move(row)));
    los_amplitude_ = std::sqrt(s.los_power());
}

ChannelRealization ChannelSampler::sample(Rng &rng) const {
    const int n = static_cast<int>(chol_.rows());
    Eigen::VectorXcd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.complex_normal();
    ChannelRealization out;
    out.h_dif = chol_ * z;
    const double theta = rng.uniform(-M_PI, M_PI);
    const std::complex<double> los =
        los_amplitude_ * std::complex<double>(std::cos(theta), std::sin(theta));
    out.h_los = Eigen::VectorXcd::Constant(n, los);
    out.h = out.h_los + out.h_dif;
    return out;
}

ChannelRealization ChannelSampler::sample(std::uint64_t seed) const {
    Rng rng(seed);
    return sample(rng);
}

ChannelRealization sample_channel(const ScenarioParams &s, const PilotLayout &layout,
                                  std::uint64_t seed) {
    return ChannelSampler(s, layout).sample(seed);
}

Eigen::VectorXcd transmit(const ChannelRealization &ch, const Eigen::VectorXcd &x,
                          const LinkBudget &budget, Rng &rng) {
    const int n = static_cast<int>(ch.h.size());
    if (x.size() != n) throw ConfigError("transmit: symbol vector length mismatch");
    for (int i = 0; i < n; ++i) {
        if (std::abs(std::abs(x(i)) - 1.0) > 1e-9) {
            std::ostringstream os;
            os << "transmit: |x_" << i << "| = " << std::abs(x(i)) << " deviates from 1";
            throw ModulusError(os.str());
        }
    }
    const double amp = std::sqrt(budget.symbol_energy);
    const double noise_amp = std::sqrt(budget.noise_var);
    Eigen::VectorXcd y(n);
    for (int i = 0; i < n; ++i) y(i) = amp * ch.h(i) * x(i) + noise_amp * rng.complex_normal();
    return y;
}

Eigen::VectorXcd transmit(const ChannelRealization &ch, const Eigen::VectorXcd &x,
                          const LinkBudget &budget, std::uint64_t seed) {
    Rng rng(seed);
    return transmit(ch, x, budget, rng);
}

}  // namespace hstlink
