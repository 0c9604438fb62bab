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
#include <limits>
#include <random>

#include "hstlink/numerics.hpp"
#include "oracles.hpp"

using namespace hstlink;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("bessel i0 matches the series oracle at small arguments") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520083).epsilon(1e-14));
    CHECK(bessel_i0(10.0) == doctest::Approx(2815.716628466254).epsilon(1e-13));
    for (double z : {0.1, 0.7, 2.5, 6.0, 14.0}) {
        CHECK(bessel_i0(z) == doctest::Approx(oracle::bessel_i0_series(z)).epsilon(1e-13));
    }
}

TEST_CASE("bessel i0 holds 1e-12 accuracy across [0, 700]") {
    // Reference values computed with an independent arbitrary-precision tool.
    CHECK(bessel_i0(50.0) == doctest::Approx(2.9325537838493355e+20).epsilon(1e-12));
    CHECK(bessel_i0(200.0) == doctest::Approx(2.0396871734097241e+85).epsilon(1e-12));
    CHECK(bessel_i0(350.0) == doctest::Approx(2.1483252713198759e+150).epsilon(1e-12));
    CHECK(bessel_i0(700.0) == doctest::Approx(1.5295933476718735e+302).epsilon(1e-12));
    CHECK(bessel_i0_scaled(50.0) == doctest::Approx(5.6561626647454184e-02).epsilon(1e-12));
    CHECK(bessel_i0_scaled(700.0) == doctest::Approx(1.5081295651531355e-02).epsilon(1e-12));
    // std's implementation agrees where it is available.
    CHECK(bessel_i0(30.0) == doctest::Approx(std::cyl_bessel_i(0.0, 30.0)).epsilon(1e-12));
}

TEST_CASE("bessel i0 is even, monotone on [0,inf) and >= 1") {
    CHECK(bessel_i0(-3.0) == bessel_i0(3.0));
    double prev = 1.0;
    for (double z = 0.0; z <= 40.0; z += 0.25) {
        const double v = bessel_i0(z);
        CHECK(v >= 1.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("complex i0: axis consistency, imaginary axis, evenness") {
    using cd = std::complex<double>;
    CHECK(bessel_i0(cd(0.0, 0.0)) == cd(1.0, 0.0));

    const cd real_axis = bessel_i0(cd(2.0, 0.0));
    CHECK(real_axis.real() == doctest::Approx(bessel_i0(2.0)).epsilon(1e-14));
    CHECK(real_axis.imag() == 0.0);

    // I0(j x) = J0(x)
    const cd imag_axis = bessel_i0(cd(0.0, 2.0));
    CHECK(imag_axis.real() == doctest::Approx(0.22389077914123567).epsilon(1e-12));
    CHECK(imag_axis.real() == doctest::Approx(oracle::bessel_j0_series(2.0)).epsilon(1e-12));
    CHECK(imag_axis.imag() == doctest::Approx(0.0));

    const cd z(1.3, -0.8);
    const cd a = bessel_i0(z);
    const cd b = bessel_i0(-z);
    CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-14));
    CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-14));

    CHECK_THROWS_AS((void)bessel_i0(cd(900.0, 0.0)), DivergenceError);
}

TEST_CASE("gauss-legendre tables") {
    const auto &t2 = gauss_legendre(2);
    CHECK(t2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(t2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (int n : {3, 16, 101, 256}) {
        const auto &t = gauss_legendre(n);
        double wsum = 0.0;
        for (double w : t.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("integrate: closed-interval basics") {
    CHECK(integrate([](double) { return 1.0; }, QuadratureSpec::closed(0.0, M_PI)) ==
          doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, QuadratureSpec::closed(0.0, M_PI)) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("integrate: polynomial exactness up to degree 2n-1") {
    auto poly = [](double x) { return ((x - 0.5) * x * x - 3.0) * x * x * x * x + 0.25 * x; };
    // degree 7 polynomial, exact for n >= 4
    const double exact = oracle::simpson(poly, -1.0, 2.0, 200000);
    const double got = integrate(poly, QuadratureSpec::closed(-1.0, 2.0, 4));
    CHECK(got == doctest::Approx(exact).epsilon(1e-9));
    // exactness to 1e-12 against the antiderivative for x^5 on [0,1]: 1/6
    CHECK(integrate([](double x) { return x * x * x * x * x; }, QuadratureSpec::closed(0, 1, 3)) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("integrate: semi-infinite exponential-decay transform") {
    CHECK(integrate([](double x) { return std::exp(-x); }, QuadratureSpec::semi_infinite()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Gamma(3) = 2 with decay rate hint below the true decay
    CHECK(integrate([](double x) { return x * x * std::exp(-x); },
                    QuadratureSpec::semi_infinite(0.5, 512)) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("integrate: error paths") {
    CHECK_THROWS_AS((void)integrate([](double) { return 1.0; }, QuadratureSpec::closed(1.0, 0.0)),
                    ConfigError);
    QuadratureSpec bad = QuadratureSpec::closed(0.0, 1.0);
    bad.node_count = 1;
    CHECK_THROWS_AS((void)integrate([](double) { return 1.0; }, bad), ConfigError);
    CHECK_THROWS_AS(
        (void)integrate([](double) { return std::numeric_limits<double>::infinity(); },
                        QuadratureSpec::closed(0.0, 1.0)),
        NonFiniteError);
}

TEST_CASE("integrate_to_tolerance converges on smooth integrands") {
    const double v = integrate_to_tolerance([](double x) { return std::exp(-x * x); },
                                            QuadratureSpec::closed(-6.0, 6.0, 16), 1e-12, 6);
    CHECK(v == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("symmetric toeplitz indexing") {
    SymmetricToeplitz t({1.0, 0.5, 0.25});
    CHECK(t.dim() == 3);
    CHECK(t(0, 0) == 1.0);
    CHECK(t(0, 2) == 0.25);
    CHECK(t(2, 0) == 0.25);
    const Eigen::MatrixXd d = t.dense();
    CHECK((d - d.transpose()).norm() == 0.0);
}

TEST_CASE("cholesky_psd: identity, hand example, degenerate rank-1") {
    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(2, 2);
    CHECK((cholesky_psd(eye) - eye).norm() == doctest::Approx(0.0));

    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.5, 0.5, 1.0;
    const Eigen::MatrixXd l = cholesky_psd(m);
    const auto ref = oracle::naive_cholesky({{1.0, 0.5}, {0.5, 1.0}});
    CHECK(l(0, 0) == doctest::Approx(ref[0][0]).epsilon(1e-14));
    CHECK(l(1, 0) == doctest::Approx(ref[1][0]).epsilon(1e-14));
    CHECK(l(1, 1) == doctest::Approx(0.8660254037844386).epsilon(1e-14));
    CHECK(l(0, 1) == 0.0);

    Eigen::MatrixXd ones(2, 2);
    ones << 1.0, 1.0, 1.0, 1.0;
    const Eigen::MatrixXd lr = cholesky_psd(ones);
    CHECK(lr(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(lr(1, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(lr(1, 1)) < 1e-5);
}

TEST_CASE("cholesky_psd: round-trip property and NotPsdError") {
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 7);
        Eigen::MatrixXd b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = unif(eng);
        Eigen::MatrixXd a = b * b.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd l = cholesky_psd(a);
        CHECK((l * l.transpose() - a).norm() / a.norm() <= 1e-10);
    }

    Eigen::MatrixXd indef(2, 2);
    indef << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
    CHECK_THROWS_AS((void)cholesky_psd(indef), NotPsdError);
}

TEST_CASE("cholesky_psd accepts exponential-correlation toeplitz without jitter") {
    std::vector<double> row(32);
    for (int k = 0; k < 32; ++k) row[k] = std::exp(-0.05 * k);
    SymmetricToeplitz t(row);
    const Eigen::MatrixXd l = cholesky_psd(t);
    const Eigen::MatrixXd d = t.dense();
    CHECK((l * l.transpose() - d).norm() / d.norm() <= 1e-12);
}

TEST_SUITE_END();
