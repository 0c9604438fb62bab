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

#include "hstlink/metrics.hpp"

#include <cmath>
#include <sstream>

#include "hstlink/numerics.hpp"

namespace hstlink {

EffectiveLink EffectiveLink::make(double k_r, double gamma, double sigma_d_sq) {
    if (!(k_r >= 0.0)) throw ConfigError("EffectiveLink: k_r must be >= 0");
    if (!(gamma > 0.0)) throw ConfigError("EffectiveLink: gamma must be > 0");
    if (!(sigma_d_sq >= 0.0)) throw ConfigError("EffectiveLink: sigma_d_sq must be >= 0");
    EffectiveLink link;
    link.rho = std::sqrt(1.0 / (1.0 + (k_r + 1.0) * sigma_d_sq));
    link.gamma_eff = 1.0 / (sigma_d_sq + 1.0 / gamma);
    return link;
}

double ber_group(double k_r, double gamma, double sigma_d_sq, int phi_nodes) {
    const EffectiveLink link = EffectiveLink::make(k_r, gamma, sigma_d_sq);
    const double est_power = 1.0 - (k_r + 1.0) * sigma_d_sq;
    if (!(est_power > 0.0)) {
        std::ostringstream os;
        os << "ber_group: sigma_d_sq = " << sigma_d_sq
           << " reaches the diffuse prior power 1/(K+1)";
        throw DegenerateError(os.str());
    }
    const double k_hat = k_r / est_power;
    const double ratio = link.gamma_eff * est_power / (k_r + 1.0);
    auto integrand = [&](double phi) {
        double s2 = std::sin(phi);
        s2 *= s2;
        const double b = s2 / (s2 + ratio);
        return b * std::exp(-k_hat * (1.0 - b));
    };
    return integrate(integrand, QuadratureSpec::closed(0.0, 0.5 * M_PI, phi_nodes)) / M_PI;
}

double ber_average(const std::vector<double> &per_group) {
    if (per_group.empty()) throw EmptyError("ber_average: empty group vector");
    double sum = 0.0;
    for (double p : per_group) sum += p;
    return sum / static_cast<double>(per_group.size());
}

double capacity_upper(double h_hat_mag_sq, double gamma_eff, LogBase base) {
    if (!(h_hat_mag_sq >= 0.0) || !(gamma_eff >= 0.0))
        throw ConfigError("capacity_upper: inputs must be nonnegative");
    const double nats = std::log1p(h_hat_mag_sq * gamma_eff);
    return base == LogBase::Bits ? nats / M_LN2 : nats;
}

double noncentral_chi2_pdf(double x, double k_r) {
    if (x < 0.0) return 0.0;
    const double s = std::sqrt(2.0 * k_r * x);
    // 1/2 exp(-(x+2K)/2) I0(s) = 1/2 i0_scaled(s) exp(-(sqrt(x)-sqrt(2K))^2/2)
    const double log_tail = s - 0.5 * (x + 2.0 * k_r);
    return 0.5 * bessel_i0_scaled(s) * std::exp(log_tail);
}

double spectral_efficiency_group(double k_r, double gamma, double delta, double sigma_d_sq,
                                 LogBase base, int nodes) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw ConfigError("spectral_efficiency_group: delta must lie in (0, 0.5]");
    const EffectiveLink link = EffectiveLink::make(k_r, gamma, sigma_d_sq);
    const double scale = link.gamma_eff / (2.0 * (k_r + 1.0));
    // p(x) <= 1/2 exp(-(sqrt(x)-sqrt(2K))^2 / 2): beyond x_hi the density is
    // below 1e-14 of its peak and the integrand is negligible.
    const double x_hi = std::pow(std::sqrt(2.0 * k_r) + 9.3, 2) + 20.0;
    auto integrand = [&](double x) {
        return std::log1p(x * scale) * noncentral_chi2_pdf(x, k_r);
    };
    const double nats =
        integrate_to_tolerance(integrand, QuadratureSpec::closed(0.0, x_hi, nodes), 1e-10, 3);
    const double value = base == LogBase::Bits ? nats / M_LN2 : nats;
    return (1.0 - delta) * value;
}

double spectral_efficiency_average(const std::vector<double> &per_group) {
    if (per_group.empty()) throw EmptyError("spectral_efficiency_average: empty group vector");
    double sum = 0.0;
    for (double v : per_group) sum += v;
    return sum / static_cast<double>(per_group.size());
}

}  // namespace hstlink
