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

#include <Eigen/Cholesky>
#include <cmath>
#include <random>

#include "hstlink/channel.hpp"
#include "hstlink/correlation.hpp"
#include "oracles.hpp"

using namespace hstlink;

namespace {

ScenarioParams base_scenario() {
    ScenarioParams s;
    s.rician_k = 1.0;
    s.scatter_decay = 0.1;
    s.antenna_spacing = 0.5;
    s.speed = 100.0;
    s.wavelength = 0.1;
    s.aoa_width = 0.0;
    s.aoa_mean = 0.0;
    s.heading = 0.0;
    s.num_antennas = 8;
    return s;
}

}  // namespace

TEST_SUITE_BEGIN("correlation");

TEST_CASE("scenario validation and derived accessors") {
    ScenarioParams s = base_scenario();
    CHECK_NOTHROW(s.validate());
    CHECK(s.doppler() == doctest::Approx(1000.0));
    CHECK(s.alpha(0.5) == doctest::Approx(std::exp(-0.1)));
    CHECK(s.alpha(0.1) > 0.0);
    CHECK(s.alpha(0.1) < 1.0);
    CHECK(s.diffuse_power() + s.los_power() == doctest::Approx(1.0).epsilon(1e-15));

    ScenarioParams bad = s;
    bad.rician_k = -0.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = s;
    bad.scatter_decay = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = s;
    bad.aoa_mean = 4.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("diffuse cross-correlation: matched delay collapses the bessel ratio") {
    ScenarioParams s = base_scenario();
    s.aoa_width = 3.0;  // kappa arbitrary: the ratio must still collapse
    const double d = 2.0 * s.antenna_spacing;
    const double tau = d / s.speed;  // f_D tau = d / lambda  =>  Delta = 0
    const std::complex<double> rho = cross_corr_diffuse(s, tau, d);
    const double expected = std::exp(-s.scatter_decay * s.speed * tau) / (s.rician_k + 1.0);
    CHECK(rho.real() == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(rho.imag()) < 1e-14);
}

TEST_CASE("diffuse cross-correlation: isotropic scattering gives a J0 kernel") {
    // kappa = 0, Delta = pi, K_R = 0 and zero elapsed time: the value reduces
    // to J0(pi).
    ScenarioParams s = base_scenario();
    s.rician_k = 0.0;
    const double d = -0.5 * s.wavelength;  // Delta = -2 pi d / lambda = pi at tau = 0
    const std::complex<double> rho = cross_corr_diffuse(s, 0.0, d);
    CHECK(rho.real() == doctest::Approx(-0.30424217764409384).epsilon(1e-12));
    CHECK(rho.real() == doctest::Approx(oracle::bessel_j0_series(M_PI)).epsilon(1e-12));
    CHECK(std::abs(rho.imag()) < 1e-14);
}

TEST_CASE("diffuse cross-correlation: co-located same-time power") {
    for (double k : {0.0, 1.0, 3.1622776601683795}) {
        ScenarioParams s = base_scenario();
        s.rician_k = k;
        const std::complex<double> rho = cross_corr_diffuse(s, 0.0, 0.0);
        CHECK(rho.real() == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-14));
        CHECK(rho.imag() == 0.0);
    }
}

TEST_CASE("los cross-correlation") {
    ScenarioParams s = base_scenario();
    // Delta = 0
    const double d = s.antenna_spacing;
    CHECK(cross_corr_los(s, d / s.speed, d).real() == doctest::Approx(0.5).epsilon(1e-14));

    s.rician_k = 0.0;
    CHECK(std::abs(cross_corr_los(s, 0.1, 3.0)) == doctest::Approx(0.0));

    // K_R = 1, Delta = pi, heading 0: 0.5 e^{j pi} = -0.5
    s = base_scenario();
    const std::complex<double> v = cross_corr_los(s, 0.0, -0.5 * s.wavelength);
    CHECK(v.real() == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(std::abs(v.imag()) < 1e-13);
}

TEST_CASE("delay correlation values and limits") {
    ScenarioParams s = base_scenario();
    s.rician_k = 0.0;
    s.scatter_decay = 0.1;
    s.antenna_spacing = 1.0;
    const DelayCorrelation dc = delay_corr(s, 1, 2);
    CHECK(dc.dif == doctest::Approx(0.9048374180359595).epsilon(1e-14));
    CHECK(dc.los == 0.0);

    // static-scatter limit: perfect diffuse correlation
    ScenarioParams slow = base_scenario();
    slow.scatter_decay = 1e-13;
    const DelayCorrelation quiet = delay_corr(slow, 2, 6);
    CHECK(quiet.dif == doctest::Approx(slow.diffuse_power()).epsilon(1e-9));

    // pure LOS limit
    ScenarioParams los = base_scenario();
    los.rician_k = 1e12;
    const DelayCorrelation pure = delay_corr(los, 1, 2);
    CHECK(pure.dif < 1e-11);
    CHECK(pure.los == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("delay correlation index errors") {
    ScenarioParams s = base_scenario();
    CHECK_THROWS_AS((void)delay_corr(s, 2, 2), IndexError);
    CHECK_THROWS_AS((void)delay_corr(s, 3, 2), IndexError);
    CHECK_THROWS_AS((void)delay_corr(s, 0, 2), IndexError);
    CHECK_THROWS_AS((void)delay_corr(s, 1, 9), IndexError);
}

TEST_CASE("delay correlation is consistent with the cross-correlation forms") {
    ScenarioParams s = base_scenario();
    s.aoa_width = 2.5;
    s.aoa_mean = 0.7;
    s.heading = -0.3;
    for (int p = 1; p < 8; ++p) {
        for (int q = p + 1; q <= 8; ++q) {
            const DelayCorrelation dc = delay_corr(s, p, q);
            const double d = (q - p) * s.antenna_spacing;
            const std::complex<double> dif = cross_corr_diffuse(s, d / s.speed, d);
            const std::complex<double> los = cross_corr_los(s, d / s.speed, d);
            CHECK(dc.dif == doctest::Approx(dif.real()).epsilon(1e-12));
            CHECK(std::abs(dif.imag()) <= 1e-12);
            CHECK(dc.los == doctest::Approx(los.real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("power split: dif + los -> 1 as the scatter decay vanishes") {
    for (double k : {0.0, 1.0, 3.1622776601683795, 100.0}) {
        ScenarioParams s = base_scenario();
        s.rician_k = k;
        s.scatter_decay = 1e-14;
        const DelayCorrelation dc = delay_corr(s, 1, 5);
        CHECK(dc.dif + dc.los == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("correlation magnitudes never exceed one") {
    // Draws cover the series' trusted domain (|arg| <= ~12); beyond it the
    // evaluator refuses rather than losing precision, tested separately.
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        ScenarioParams s = base_scenario();
        s.rician_k = 4.0 * unif(eng);
        s.aoa_width = 6.0 * unif(eng);
        s.aoa_mean = -M_PI + 2.0 * M_PI * unif(eng) * 0.999;
        s.heading = 3.0 * (unif(eng) - 0.5);
        const double tau = 1e-3 * unif(eng);                     // f_D tau <= 1
        const double d = 0.12 * (unif(eng) - 0.5);               // |d/lambda| <= 0.6
        CHECK(std::abs(cross_corr_diffuse(s, tau, d)) <= 1.0 + 1e-12);
        CHECK(std::abs(cross_corr_los(s, tau, d)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("cross-correlation refuses arguments beyond series precision") {
    ScenarioParams s = base_scenario();
    s.aoa_width = 9.0;
    // f_D tau = 40 puts the location-difference argument far outside the
    // cancellation-safe region of the complex series.
    CHECK_THROWS_AS((void)cross_corr_diffuse(s, 0.04, 0.0), DivergenceError);
}

TEST_CASE("r_hh construction") {
    ScenarioParams s = base_scenario();
    s.rician_k = 0.0;
    s.scatter_decay = 0.1;
    s.antenna_spacing = 1.0;
    const PilotLayout lay = make_layout(2, 1);  // delta = 0.5
    const SymmetricToeplitz r = build_r_hh(s, lay);
    CHECK(r.dim() == 2);
    CHECK(r(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r(0, 1) == doctest::Approx(0.8187307530779818).epsilon(1e-14));

    // uncorrelated limit
    ScenarioParams hot = s;
    hot.scatter_decay = 500.0;
    const SymmetricToeplitz rid = build_r_hh(hot, lay);
    CHECK(rid(0, 1) < 1e-12);
    CHECK(rid(0, 0) == doctest::Approx(1.0));

    // single pilot
    ScenarioParams k3 = base_scenario();
    k3.rician_k = 3.0;
    const SymmetricToeplitz r1 = build_r_hh(k3, make_layout(1, 4));
    CHECK(r1.dim() == 1);
    CHECK(r1(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("r_hh is positive definite without jitter for alpha < 1") {
    ScenarioParams s = base_scenario();
    for (int l : {1, 4, 9}) {
        const Eigen::MatrixXd r = build_r_hh(s, make_layout(24, l)).dense();
        Eigen::LLT<Eigen::MatrixXd> llt(r);
        CHECK(llt.info() == Eigen::Success);
    }
}

TEST_CASE("r_dh construction and group monotonicity") {
    ScenarioParams s = base_scenario();
    s.rician_k = 0.0;
    s.scatter_decay = 0.1;
    s.antenna_spacing = 1.0;
    const PilotLayout lay1 = make_layout(1, 1);  // delta = 0.5
    const Eigen::MatrixXd r = build_r_dh(s, lay1, 1);
    CHECK(r(0, 0) == doctest::Approx(0.9048374180359595).epsilon(1e-14));

    // u = 0 degenerates to r_hh
    const PilotLayout lay = make_layout(6, 4);
    const Eigen::MatrixXd r0 = build_r_dh(base_scenario(), lay, 0);
    CHECK((r0 - build_r_hh(base_scenario(), lay).dense()).norm() == doctest::Approx(0.0));

    // entries decay as the group moves away from its pilot (m >= n)
    for (int m : {0, 2, 5}) {
        for (int n = 0; n <= m; ++n) {
            double prev = 2.0;
            for (int u = 1; u <= 4; ++u) {
                const double v = build_r_dh(base_scenario(), lay, u)(m, n);
                CHECK(v < prev);
                prev = v;
            }
        }
    }

    CHECK_THROWS_AS((void)build_r_dh(s, lay, -1), IndexError);
    CHECK_THROWS_AS((void)build_r_dh(s, lay, 5), IndexError);
}

TEST_CASE("correlation set bundles toeplitz and group matrices") {
    ScenarioParams s = base_scenario();
    const PilotLayout lay = make_layout(5, 3);
    const CorrelationSet set = build_correlation_set(s, lay);
    CHECK(set.r_hh_dif.dim() == 5);
    CHECK(set.r_dh_dif.size() == 3);
    CHECK(set.los_coefficient == doctest::Approx(0.5));
    CHECK(set.r_hh_dif(0, 0) == doctest::Approx(s.diffuse_power()));
    for (int u = 1; u <= 3; ++u)
        CHECK((set.r_dh_dif[u - 1] - build_r_dh(s, lay, u)).norm() == 0.0);
}

TEST_SUITE_END();
