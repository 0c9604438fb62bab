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

#include "hstlink/asymptotic.hpp"

#include <cmath>
#include <sstream>

#include "hstlink/numerics.hpp"

namespace hstlink {

double SpectralDensity::lambda(double omega) const {
    const double a = alpha;
    return los_scale * (1.0 - a * a) / (1.0 - 2.0 * a * std::cos(omega) + a * a);
}

std::complex<double> SpectralDensity::lambda_dh(double omega) const {
    const double a = alpha;
    const double b = beta;
    const double den = 1.0 - 2.0 * a * std::cos(omega) + a * a;
    const std::complex<double> e_jw(std::cos(omega), std::sin(omega));
    const std::complex<double> num = a * (1.0 / b - b) * e_jw + (b - a * a / b);
    return los_scale * num / den;
}

double SpectralDensity::lambda_dh_abs_sq(double omega) const {
    // |p e^{jw} + q|^2 = p^2 + q^2 + 2 p q cos(w) with real p, q.
    const double a = alpha;
    const double b = beta;
    const double p = a * (1.0 / b - b);
    const double q = b - a * a / b;
    const double den = 1.0 - 2.0 * a * std::cos(omega) + a * a;
    return los_scale * los_scale * (p * p + q * q + 2.0 * p * q * std::cos(omega)) / (den * den);
}

SpectralDensity spectral_densities(const ScenarioParams &s, double delta, int u) {
    if (u < 0) throw IndexError("spectral_densities: u must be >= 0");
    if (!(delta > 0.0 && delta <= 0.5))
        throw ConfigError("spectral_densities: delta must lie in (0, 0.5]");
    SpectralDensity sd;
    sd.alpha = s.alpha(delta);
    sd.beta = std::exp(-s.scatter_decay * u * s.antenna_spacing);
    sd.los_scale = s.diffuse_power();
    return sd;
}

double sigma_p_asymptotic(const ScenarioParams &s, double delta, double gamma) {
    if (!(gamma > 0.0)) throw ConfigError("sigma_p_asymptotic: gamma must be > 0");
    if (!(delta > 0.0 && delta <= 0.5))
        throw ConfigError("sigma_p_asymptotic: delta must lie in (0, 0.5]");
    const double a = s.alpha(delta);
    if (!(a < 1.0)) {
        std::ostringstream os;
        os << "sigma_p_asymptotic: alpha = " << a << " >= 1 (requires c0 D > 0)";
        throw DegenerateError(os.str());
    }
    const double kp1 = s.rician_k + 1.0;
    const double ratio = (1.0 + a * a) / (1.0 - a * a);
    return std::sqrt(1.0 / (gamma * gamma + 2.0 * gamma * ratio * kp1 + kp1 * kp1));
}

double sigma_d_asymptotic(const ScenarioParams &s, double delta, double gamma, int u,
                          int omega_nodes) {
    const double sp2 = sigma_p_asymptotic(s, delta, gamma);
    if (u == 0) return sp2;  // degenerate pilot case: integrand vanishes
    const SpectralDensity sd = spectral_densities(s, delta, u);
    const double inv_gamma = 1.0 / gamma;
    auto integrand = [&](double omega) {
        const double lam = sd.lambda(omega);
        return (lam * lam - sd.lambda_dh_abs_sq(omega)) / (lam + inv_gamma);
    };
    const double integral = integrate_to_tolerance(
        integrand, QuadratureSpec::closed(-M_PI, M_PI, omega_nodes), 1e-9, 6);
    const double value = sp2 + integral / (2.0 * M_PI);
    // The integral is nonnegative analytically; clamp away quadrature noise.
    return std::max(value, sp2 - 1e-12);
}

}  // namespace hstlink
