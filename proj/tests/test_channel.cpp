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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "hstlink/channel.hpp"
#include "oracles.hpp"

using namespace hstlink;

namespace {

ScenarioParams scenario(double k_r, double c0 = 0.1, double d = 0.5) {
    ScenarioParams s;
    s.rician_k = k_r;
    s.scatter_decay = c0;
    s.antenna_spacing = d;
    s.speed = 100.0;
    s.wavelength = 0.1;
    s.num_antennas = 1;
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("channel");

TEST_CASE("layout construction") {
    const PilotLayout a = make_layout(2, 1);
    CHECK(a.n_r == 4);
    CHECK(a.n_s == 2);
    CHECK(a.delta == doctest::Approx(0.5));
    CHECK(a.pilot_indices == std::vector<int>{1, 3});

    const PilotLayout b = make_layout(4, 4);
    CHECK(b.n_r == 20);
    CHECK(b.delta == doctest::Approx(0.2));
    CHECK(b.pilot_indices == std::vector<int>{1, 6, 11, 16});

    const PilotLayout c = make_layout(1, 49);
    CHECK(c.delta == doctest::Approx(0.02));
    CHECK(c.n_r == 50);

    // group-u data slot sits u after its pilot
    CHECK(b.data_slot(1, 1) == 2);
    CHECK(b.data_slot(2, 3) == 9);
    CHECK(b.is_pilot_slot(6));
    CHECK(!b.is_pilot_slot(7));

    CHECK_THROWS_AS((void)make_layout(0, 1), ConfigError);
    CHECK_THROWS_AS((void)make_layout(1, 0), ConfigError);
}

TEST_CASE("block timing solves the spacing identity exactly") {
    for (int k : {1, 3, 7, 64}) {
        const BlockTiming t = BlockTiming::solve(0.5, 100.0, k);
        CHECK(t.frames_per_block() == k);
        CHECK(std::abs(100.0 * k * t.symbol_time - 0.5) <= 1e-12);
    }
    CHECK_THROWS_AS((void)BlockTiming::solve(0.5, 100.0, 0), ConfigError);
}

TEST_CASE("link budget invariant") {
    const LinkBudget b = LinkBudget::from_snr(10.0);
    CHECK(b.symbol_energy == 1.0);
    CHECK(std::abs(b.snr * b.noise_var - b.symbol_energy) <= 1e-12);
    const LinkBudget c = LinkBudget::make(2.0, 0.5);
    CHECK(c.snr == doctest::Approx(4.0));
    CHECK_THROWS_AS((void)LinkBudget::from_snr(0.0), ConfigError);
    CHECK_THROWS_AS((void)LinkBudget::make(1.0, 0.0), ConfigError);
}

TEST_CASE("rayleigh channel has no los component") {
    const ChannelRealization ch = sample_channel(scenario(0.0), make_layout(2, 1), 42);
    CHECK(ch.h_los.norm() == 0.0);
    CHECK((ch.h - ch.h_dif).norm() == 0.0);
}

TEST_CASE("sampling is deterministic in the seed") {
    const ScenarioParams s = scenario(1.0);
    const PilotLayout lay = make_layout(3, 2);
    const ChannelRealization a = sample_channel(s, lay, 1234);
    const ChannelRealization b = sample_channel(s, lay, 1234);
    const ChannelRealization c = sample_channel(s, lay, 1235);
    CHECK((a.h - b.h).norm() == 0.0);
    CHECK((a.h - c.h).norm() != 0.0);
}

TEST_CASE("channel splits exactly into los + diffuse") {
    const ScenarioParams s = scenario(2.0);
    const PilotLayout lay = make_layout(3, 2);
    const ChannelSampler sampler(s, lay);
    for (int t = 0; t < 100; ++t) {
        const ChannelRealization ch = sampler.sample(derive_seed(77, t));
        CHECK((ch.h - ch.h_los - ch.h_dif).norm() <= 1e-14);
    }
}

TEST_CASE("unit channel power across rician factors") {
    // 10^6 realizations per factor; weak slot correlation keeps the standard
    // error of the mean near 7.5e-4, well inside the +-0.003 band.
    for (double k_r : {0.0, 1.0, 3.1622776601683795}) {
        const ScenarioParams s = scenario(k_r, 2.0);
        const PilotLayout lay = make_layout(1, 1);
        const ChannelSampler sampler(s, lay);
        double sum = 0.0;
        const int trials = 1000000;
        for (int t = 0; t < trials; ++t) {
            const ChannelRealization ch = sampler.sample(derive_seed(77, t));
            sum += std::norm(ch.h(0)) + std::norm(ch.h(1));
        }
        const double mean = sum / (2.0 * trials);
        CHECK(mean >= 0.997);
        CHECK(mean <= 1.003);
    }
}

TEST_CASE("adjacent-slot diffuse correlation matches the decay model") {
    ScenarioParams s = scenario(0.0, 0.1, 1.0);
    const PilotLayout lay = make_layout(1, 1);  // two slots
    const ChannelSampler sampler(s, lay);
    oracle::MeanVar corr;
    for (int t = 0; t < 1000000; ++t) {
        const ChannelRealization ch = sampler.sample(derive_seed(5150, t));
        corr.add((ch.h_dif(0) * std::conj(ch.h_dif(1))).real());
    }
    CHECK(corr.mean() == doctest::Approx(0.9048374180359595).epsilon(0.003 / 0.9));
}

TEST_CASE("empirical covariance matches the delay-correlation matrix (N_R = 8)") {
    ScenarioParams s = scenario(1.0);
    s.num_antennas = 8;
    const PilotLayout lay = make_layout(4, 1);
    const ChannelSampler sampler(s, lay);
    const int trials = 200000;
    std::vector<std::vector<oracle::MeanVar>> acc(8, std::vector<oracle::MeanVar>(8));
    std::vector<oracle::MeanVar> acc_im(8);
    for (int t = 0; t < trials; ++t) {
        const ChannelRealization ch = sampler.sample(derive_seed(99, t));
        for (int p = 0; p < 8; ++p)
            for (int q = p; q < 8; ++q)
                acc[p][q].add((ch.h_dif(p) * std::conj(ch.h_dif(q))).real());
        for (int q = 1; q < 8; ++q) acc_im[q].add((ch.h_dif(0) * std::conj(ch.h_dif(q))).imag());
    }
    for (int p = 0; p < 8; ++p) {
        for (int q = p; q < 8; ++q) {
            const double expected =
                (p == q) ? s.diffuse_power() : delay_corr(s, p + 1, q + 1).dif;
            const double dev = std::abs(acc[p][q].mean() - expected);
            CHECK(dev <= 3.0 * acc[p][q].stderr_());
        }
    }
    // circularity: cross terms have no systematic imaginary part
    for (int q = 1; q < 8; ++q)
        CHECK(std::abs(acc_im[q].mean()) <= 3.0 * acc_im[q].stderr_());

    // LOS cross-products are exactly the LOS power, draw by draw
    const ChannelRealization ch = sampler.sample(4242);
    for (int q = 1; q < 8; ++q)
        CHECK((ch.h_los(0) * std::conj(ch.h_los(q))).real() ==
              doctest::Approx(s.los_power()).epsilon(1e-12));
}

TEST_CASE("uncorrelated limit at strong scatter decay") {
    ScenarioParams s = scenario(0.0, 200.0, 0.5);
    const PilotLayout lay = make_layout(1, 1);
    const ChannelSampler sampler(s, lay);
    oracle::MeanVar corr;
    for (int t = 0; t < 20000; ++t) {
        const ChannelRealization ch = sampler.sample(derive_seed(7, t));
        corr.add((ch.h_dif(0) * std::conj(ch.h_dif(1))).real());
    }
    CHECK(std::abs(corr.mean()) <= 4.0 * corr.stderr_());
}

TEST_CASE("transmit: noiseless pilots, noise floor, determinism, modulus guard") {
    const ScenarioParams s = scenario(1.0);
    const PilotLayout lay = make_layout(4, 1);
    const ChannelRealization ch = sample_channel(s, lay, 9);
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(lay.n_r);

    // vanishing noise: y -> sqrt(E0) h
    const LinkBudget clean = LinkBudget::make(4.0, 1e-30);
    const Eigen::VectorXcd y0 = transmit(ch, ones, clean, 1);
    CHECK((y0 - 2.0 * ch.h).norm() <= 1e-10);

    // vanishing signal: y is noise with the configured variance
    const LinkBudget noisy = LinkBudget::make(1e-30, 2.0);
    oracle::MeanVar var;
    for (int t = 0; t < 4000; ++t) {
        const Eigen::VectorXcd y = transmit(ch, ones, noisy, derive_seed(3, t));
        for (int i = 0; i < lay.n_r; ++i) var.add(std::norm(y(i)));
    }
    CHECK(var.mean() == doctest::Approx(2.0).epsilon(0.05));

    // determinism
    const LinkBudget b = LinkBudget::from_snr(10.0);
    CHECK((transmit(ch, ones, b, 77) - transmit(ch, ones, b, 77)).norm() == 0.0);

    // modulus enforcement at the 1e-9 gate
    Eigen::VectorXcd bad = ones;
    bad(2) = std::complex<double>(1.1, 0.0);
    CHECK_THROWS_AS((void)transmit(ch, bad, b, 1), ModulusError);
    Eigen::VectorXcd nearly = ones;
    nearly(2) = std::complex<double>(1.0 + 5e-10, 0.0);
    CHECK_NOTHROW((void)transmit(ch, nearly, b, 1));
}

TEST_SUITE_END();
