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

#include "hstlink/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>
#include <thread>

#include "hstlink/estimator.hpp"
#include "hstlink/rng.hpp"

namespace hstlink {

int detect_bpsk(std::complex<double> y, std::complex<double> h, double symbol_energy) {
    (void)symbol_energy;  // the argmin rule reduces to a sign test for BPSK
    if (std::abs(h) < 1e-300) throw ZeroChannelError("detect_bpsk: channel reference is zero");
    const double metric = (std::conj(h) * y).real();
    return metric >= 0.0 ? 1 : -1;
}

namespace {

constexpr long long kTrialsPerBlock = 256;

struct BlockStats {
    double mse_p_sum = 0.0, mse_p_sumsq = 0.0;
    std::vector<double> mse_d_sum, mse_d_sumsq;
    double ber_sum = 0.0, ber_sumsq = 0.0;
    long long trials = 0;
    long long bits = 0;
    long long zero_flips = 0;

    explicit BlockStats(int l) : mse_d_sum(l, 0.0), mse_d_sumsq(l, 0.0) {}

    void merge(const BlockStats &o) {
        mse_p_sum += o.mse_p_sum;
        mse_p_sumsq += o.mse_p_sumsq;
        for (std::size_t u = 0; u < mse_d_sum.size(); ++u) {
            mse_d_sum[u] += o.mse_d_sum[u];
            mse_d_sumsq[u] += o.mse_d_sumsq[u];
        }
        ber_sum += o.ber_sum;
        ber_sumsq += o.ber_sumsq;
        trials += o.trials;
        bits += o.bits;
        zero_flips += o.zero_flips;
    }
};

MeanStderr summarize(double sum, double sumsq, long long n) {
    MeanStderr ms;
    ms.mean = sum / n;
    const double var = std::max(0.0, (sumsq - n * ms.mean * ms.mean) / std::max<long long>(n - 1, 1));
    ms.stderr_ = std::sqrt(var / n);
    return ms;
}

class Progress {
  public:
    explicit Progress(bool enabled) : enabled_(enabled) {}
    void add(long long trials, long long total) {
        if (!enabled_) return;
        const long long done = completed_.fetch_add(trials) + trials;
        if (done / 10000 != (done - trials) / 10000) {
            std::lock_guard<std::mutex> lock(mu_);
            std::cerr << "mc: " << (done / 10000) * 10000 << "/" << total << " trials\n";
        }
    }

  private:
    bool enabled_;
    std::atomic<long long> completed_{0};
    std::mutex mu_;
};

}  // namespace

EmpiricalReport run(const TrialConfig &config) {
    if (config.num_trials < 100)
        throw ConfigError("montecarlo: num_trials must be >= 100 for reported statistics");
    if (config.workers < 1) throw ConfigError("montecarlo: workers must be >= 1");

    const PilotLayout &lay = config.layout;
    const ScenarioParams &s = config.scenario;
    const ChannelSampler sampler(s, lay);
    const EstimatorContext ctx(s, lay, config.budget);
    const int l = lay.l_ratio;
    const int np = lay.n_p;

    // 0-based offsets of pilots and of each data group.
    std::vector<int> pilot_off(np);
    for (int k = 1; k <= np; ++k) pilot_off[k - 1] = lay.pilot_slot(k) - 1;
    std::vector<std::vector<int>> group_off(l, std::vector<int>(np));
    for (int u = 1; u <= l; ++u)
        for (int k = 1; k <= np; ++k) group_off[u - 1][k - 1] = lay.data_slot(k, u) - 1;

    const long long n_blocks = (config.num_trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
    std::vector<BlockStats> partials(n_blocks, BlockStats(l));
    std::atomic<long long> next_block{0};
    Progress progress(config.progress);

    auto run_trial = [&](long long trial_idx, BlockStats &stats) {
        const std::uint64_t trial_seed = derive_seed(config.base_seed, trial_idx);
        const ChannelRealization ch = sampler.sample(derive_seed(trial_seed, 0));

        Rng bit_rng(derive_seed(trial_seed, 1));
        Eigen::VectorXcd x = Eigen::VectorXcd::Ones(lay.n_r);
        std::vector<int> tx_bits(lay.n_r, 1);
        for (int i = 0; i < lay.n_r; ++i) {
            if (lay.is_pilot_slot(i + 1)) continue;
            tx_bits[i] = bit_rng.coin() ? 1 : -1;
            x(i) = static_cast<double>(tx_bits[i]);
        }

        const Eigen::VectorXcd y = transmit(ch, x, config.budget, derive_seed(trial_seed, 2));

        Eigen::VectorXcd y_p(np), h_los_p(np);
        for (int k = 0; k < np; ++k) {
            y_p(k) = y(pilot_off[k]);
            h_los_p(k) = ch.h_los(pilot_off[k]);
        }
        const Eigen::VectorXcd hhat_p_dif = ctx.estimate_pilot_locations(y_p, h_los_p);

        double mse_p = 0.0;
        for (int k = 0; k < np; ++k)
            mse_p += std::norm(hhat_p_dif(k) + h_los_p(k) - ch.h(pilot_off[k]));
        mse_p /= np;
        stats.mse_p_sum += mse_p;
        stats.mse_p_sumsq += mse_p * mse_p;

        long long errors = 0;
        Eigen::VectorXcd h_los_d(np);
        for (int u = 1; u <= l; ++u) {
            const std::vector<int> &off = group_off[u - 1];
            for (int k = 0; k < np; ++k) h_los_d(k) = ch.h_los(off[k]);
            const Eigen::VectorXcd hhat_d = ctx.interpolate(hhat_p_dif, u, h_los_d);

            double mse_d = 0.0;
            for (int k = 0; k < np; ++k) {
                const int slot = off[k];
                mse_d += std::norm(hhat_d(k) - ch.h(slot));
                const std::complex<double> href =
                    config.detector_csi == DetectorCsi::Genie ? ch.h(slot) : hhat_d(k);
                int decided;
                try {
                    decided = detect_bpsk(y(slot), href, config.budget.symbol_energy);
                } catch (const ZeroChannelError &) {
                    Rng coin(derive_seed(trial_seed, 3 + slot));
                    decided = coin.coin() ? 1 : -1;
                    ++stats.zero_flips;
                }
                if (decided != tx_bits[slot]) ++errors;
            }
            mse_d /= np;
            stats.mse_d_sum[u - 1] += mse_d;
            stats.mse_d_sumsq[u - 1] += mse_d * mse_d;
        }
        const double rate = static_cast<double>(errors) / lay.n_s;
        stats.ber_sum += rate;
        stats.ber_sumsq += rate * rate;
        stats.bits += lay.n_s;
        ++stats.trials;
    };

    auto worker = [&]() {
        for (;;) {
            const long long b = next_block.fetch_add(1);
            if (b >= n_blocks) return;
            const long long lo = b * kTrialsPerBlock;
            const long long hi = std::min<long long>(lo + kTrialsPerBlock, config.num_trials);
            for (long long t = lo; t < hi; ++t) run_trial(t, partials[b]);
            progress.add(hi - lo, config.num_trials);
        }
    };

    if (config.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(config.workers);
        for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }

    // Merge in block-index order so the floating-point reduction does not
    // depend on scheduling.
    BlockStats total(l);
    for (const BlockStats &b : partials) total.merge(b);

    EmpiricalReport rep;
    rep.trials_run = total.trials;
    rep.data_bits = total.bits;
    rep.zero_channel_flips = total.zero_flips;
    rep.mse_pilot = summarize(total.mse_p_sum, total.mse_p_sumsq, total.trials);
    rep.mse_data_per_u.reserve(l);
    for (int u = 0; u < l; ++u)
        rep.mse_data_per_u.push_back(
            summarize(total.mse_d_sum[u], total.mse_d_sumsq[u], total.trials));
    // Per-trial error rates share a common denominator, so their mean equals
    // the overall bit error rate.
    rep.ber = summarize(total.ber_sum, total.ber_sumsq, total.trials);
    return rep;
}

}  // namespace hstlink
