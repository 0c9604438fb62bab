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

#include "hstlink/estimator.hpp"

#include <cmath>
#include <sstream>

namespace hstlink {

namespace {

// Real matrix times complex vector.
Eigen::VectorXcd apply_real(const Eigen::MatrixXd &m, const Eigen::VectorXcd &v) {
    Eigen::VectorXcd out(m.rows());
    out.real() = m * v.real();
    out.imag() = m * v.imag();
    return out;
}

}  // namespace

EstimatorContext::EstimatorContext(const ScenarioParams &s, const PilotLayout &layout,
                                   const LinkBudget &budget)
    : layout_(layout), budget_(budget), scenario_(s) {
    s.validate();
    const int np = layout.n_p;
    r_hh_ = build_r_hh(s, layout).dense();

    Eigen::MatrixXd gram = budget.symbol_energy * r_hh_;
    gram.diagonal().array() += budget.noise_var;
    gram_llt_.compute(gram);
    if (gram_llt_.info() != Eigen::Success)
        throw SingularityError("EstimatorContext: regularized Gram matrix is singular");
    w_p_h_ = std::sqrt(budget.symbol_energy) *
             gram_llt_.solve(r_hh_).transpose();  // (E0 R + sn2 I)^-1 R, symmetric product

    Eigen::LLT<Eigen::MatrixXd> r_llt(r_hh_);
    if (r_llt.info() != Eigen::Success)
        throw SingularityError("EstimatorContext: R_hh is numerically singular");
    r_dh_.reserve(layout.l_ratio);
    interpolators_.reserve(layout.l_ratio);
    for (int u = 1; u <= layout.l_ratio; ++u) {
        r_dh_.push_back(build_r_dh(s, layout, u));
        // W_{d,u}^H = R_dh,u R^-1  ->  solve R X = R_dh^T, take X^T.
        interpolators_.push_back(r_llt.solve(r_dh_.back().transpose()).transpose());
    }
    (void)np;
}

const Eigen::MatrixXd &EstimatorContext::interpolator(int u) const {
    if (u < 1 || u > layout_.l_ratio) {
        std::ostringstream os;
        os << "interpolator: group index u=" << u << " outside 1.." << layout_.l_ratio;
        throw IndexError(os.str());
    }
    return interpolators_[u - 1];
}

Eigen::VectorXcd EstimatorContext::estimate_pilot_locations(const Eigen::VectorXcd &y_p,
                                                            const Eigen::VectorXcd &h_los_p) const {
    if (y_p.size() != layout_.n_p || h_los_p.size() != layout_.n_p)
        throw ConfigError("estimate_pilot_locations: pilot vector length mismatch");
    const double amp = std::sqrt(budget_.symbol_energy);
    return apply_real(w_p_h_, y_p - amp * h_los_p);
}

Eigen::VectorXcd EstimatorContext::interpolate(const Eigen::VectorXcd &hhat_p_dif, int u,
                                               const Eigen::VectorXcd &h_los_d) const {
    if (hhat_p_dif.size() != layout_.n_p || h_los_d.size() != layout_.n_p)
        throw ConfigError("interpolate: vector length mismatch");
    return apply_real(interpolator(u), hhat_p_dif) + h_los_d;
}

std::complex<double> EstimatorContext::estimate_direct(const Eigen::VectorXcd &y_p,
                                                       const Eigen::VectorXcd &h_los_full,
                                                       int slot) const {
    if (slot < 1 || slot > layout_.n_r) {
        std::ostringstream os;
        os << "estimate_direct: slot " << slot << " outside 1.." << layout_.n_r;
        throw IndexError(os.str());
    }
    if (h_los_full.size() != layout_.n_r)
        throw ConfigError("estimate_direct: LOS vector must span the full frame");
    // Cross-correlation row between the slot and every pilot slot.
    Eigen::VectorXd r_i(layout_.n_p);
    for (int k = 1; k <= layout_.n_p; ++k) {
        const int dist = std::abs(slot - layout_.pilot_slot(k));
        r_i(k - 1) = std::exp(-scenario_.scatter_decay * scenario_.antenna_spacing * dist) *
                     scenario_.diffuse_power();
    }
    const double amp = std::sqrt(budget_.symbol_energy);
    Eigen::VectorXcd h_los_p(layout_.n_p);
    for (int k = 1; k <= layout_.n_p; ++k) h_los_p(k - 1) = h_los_full(layout_.pilot_slot(k) - 1);
    const Eigen::VectorXcd innov = y_p - amp * h_los_p;
    Eigen::VectorXcd solved(layout_.n_p);
    solved.real() = gram_llt_.solve(innov.real().eval());
    solved.imag() = gram_llt_.solve(innov.imag().eval());
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < layout_.n_p; ++k) acc += r_i(k) * solved(k);
    return amp * acc + h_los_full(slot - 1);
}

MseReport EstimatorContext::error_covariances() const {
    const int np = layout_.n_p;
    // A = R + I/gamma; R_ee = R - R A^-1 R; Psi_u = R - R_dh,u A^-1 R_dh,u^T.
    Eigen::MatrixXd a = r_hh_;
    a.diagonal().array() += 1.0 / budget_.snr;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw SingularityError("error_covariances: regularized matrix is singular");

    MseReport rep;
    rep.error_cov_pilot = r_hh_ - r_hh_ * llt.solve(r_hh_);
    rep.sigma_p_sq_finite = rep.error_cov_pilot.trace() / np;
    rep.sigma_d_sq_finite.reserve(layout_.l_ratio);
    rep.error_cov_data.reserve(layout_.l_ratio);
    for (int u = 1; u <= layout_.l_ratio; ++u) {
        const Eigen::MatrixXd &rdh = r_dh_[u - 1];
        Eigen::MatrixXd psi = r_hh_ - rdh * llt.solve(rdh.transpose());
        rep.sigma_d_sq_finite.push_back(psi.trace() / np);
        rep.error_cov_data.push_back(std::move(psi));
    }
    return rep;
}

double finite_pilot_mse(const ScenarioParams &s, const PilotLayout &layout, double gamma) {
    if (!(gamma > 0.0)) throw ConfigError("finite_pilot_mse: gamma must be > 0");
    // trace(R - R (R + I/g)^-1 R) = trace((R^-1 + g I)^-1), and the inverse of
    // the exponential-correlation Toeplitz matrix is tridiagonal:
    //   R^-1 = 1/(s (1-a^2)) tridiag(-a; 1, 1+a^2, ..., 1+a^2, 1; -a),
    // with s the diffuse power and a the pilot-lag decay. The diagonal of the
    // inverse of the resulting tridiagonal matrix follows from forward and
    // backward continued-fraction recursions.
    const int n = layout.n_p;
    const double a = s.alpha(layout.delta);
    const double scale = 1.0 / (s.diffuse_power() * (1.0 - a * a));
    const double d_end = scale + gamma;
    const double d_mid = scale * (1.0 + a * a) + gamma;
    const double e = -scale * a;
    auto diag = [&](int i) { return (i == 0 || i == n - 1) ? d_end : d_mid; };
    if (n == 1) return 1.0 / (1.0 / s.diffuse_power() + gamma);

    std::vector<double> fwd(n), bwd(n);
    fwd[0] = diag(0);
    for (int i = 1; i < n; ++i) fwd[i] = diag(i) - e * e / fwd[i - 1];
    bwd[n - 1] = diag(n - 1);
    for (int i = n - 2; i >= 0; --i) bwd[i] = diag(i) - e * e / bwd[i + 1];
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += 1.0 / (fwd[i] + bwd[i] - diag(i));
    return trace / n;
}

double finite_data_mse(const ScenarioParams &s, const PilotLayout &layout, double gamma, int u) {
    if (!(gamma > 0.0)) throw ConfigError("finite_data_mse: gamma must be > 0");
    const int n = layout.n_p;
    Eigen::MatrixXd a = build_r_hh(s, layout).dense();
    const double trace_r = a.trace();
    a.diagonal().array() += 1.0 / gamma;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw SingularityError("finite_data_mse: regularized matrix is singular");
    // trace(R_dh A^-1 R_dh^T) = ||L^-1 R_dh^T||_F^2 with A = L L^T.
    Eigen::MatrixXd x = build_r_dh(s, layout, u).transpose();
    llt.matrixL().solveInPlace(x);
    return (trace_r - x.squaredNorm()) / n;
}

}  // namespace hstlink
