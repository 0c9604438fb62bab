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

#include "hstlink/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace hstlink {

namespace {

constexpr int kSeriesBudget = 200;

// Power series sum_k (z^2/4)^k / (k!)^2 with Kahan-compensated summation.
// Converges to machine precision within the budget for |z| <= ~250.
double i0_series(double z) {
    const double q = 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int k = 1; k <= kSeriesBudget; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Asymptotic expansion of exp(-z) I0(z) for large z (A&S 9.7.1):
//   I0(z) ~ e^z / sqrt(2 pi z) * sum_k a_k, a_k = prod_j ((2j-1)^2 / (8 z j)).
// Truncation error at z >= 200 is far below 1e-12 within a dozen terms.
double i0_scaled_asymptotic(double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 30; ++k) {
        const double num = (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * z * static_cast<double>(k));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / std::sqrt(2.0 * M_PI * z);
}

constexpr double kI0SeriesCutoff = 200.0;

}  // namespace

double bessel_i0(double z) {
    z = std::abs(z);  // I0 is even
    if (z <= kI0SeriesCutoff) return i0_series(z);
    return i0_scaled_asymptotic(z) * std::exp(z);
}

double bessel_i0_scaled(double z) {
    z = std::abs(z);
    if (z <= kI0SeriesCutoff) return i0_series(z) * std::exp(-z);
    return i0_scaled_asymptotic(z);
}

std::complex<double> bessel_i0(std::complex<double> z) {
    const std::complex<double> q = 0.25 * z * z;
    std::complex<double> term(1.0, 0.0);
    std::complex<double> sum(1.0, 0.0);
    double peak = 1.0;
    bool converged = false;
    for (int k = 1; k <= kSeriesBudget; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        const double tmag = std::abs(term);
        if (!std::isfinite(tmag)) break;
        peak = std::max(peak, tmag);
        if (tmag <= 1e-17 * std::abs(sum)) {
            converged = true;
            break;
        }
    }
    // Alternating-sign cancellation grows the intermediate terms far above
    // the result; past 1e6 the surviving digits no longer meet the 1e-10
    // accuracy contract, so refuse rather than return garbage.
    if (!converged || !std::isfinite(std::abs(sum)) || peak > 1e6 * std::abs(sum)) {
        std::ostringstream os;
        os << "bessel_i0: series did not converge to working precision within " << kSeriesBudget
           << " terms for z = (" << z.real() << ", " << z.imag() << ")";
        throw DivergenceError(os.str());
    }
    return sum;
}

// ---------------------------------------------------------------------------

QuadratureSpec QuadratureSpec::closed(double lo, double hi, int nodes) {
    QuadratureSpec s;
    s.node_count = nodes;
    s.lower = lo;
    s.upper = hi;
    s.rule = QuadRule::GaussLegendre;
    return s;
}

QuadratureSpec QuadratureSpec::semi_infinite(double rate, int nodes) {
    QuadratureSpec s;
    s.node_count = nodes;
    s.rule = QuadRule::SemiInfiniteExp;
    s.decay_rate = rate;
    return s;
}

void QuadratureSpec::validate() const {
    if (node_count < 2) throw ConfigError("QuadratureSpec: node_count must be >= 2");
    if (rule == QuadRule::GaussLegendre && !(lower < upper))
        throw ConfigError("QuadratureSpec: lower must be < upper for closed rules");
    if (rule == QuadRule::SemiInfiniteExp && !(decay_rate > 0.0))
        throw ConfigError("QuadratureSpec: decay_rate must be > 0");
}

const GaussLegendreTable &gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussLegendreTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Newton iteration on Legendre P_n, symmetric pairs only.
    GaussLegendreTable tab;
    tab.nodes.resize(n);
    tab.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        tab.nodes[i] = -x;
        tab.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        tab.weights[i] = w;
        tab.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(tab)).first->second;
}

namespace {

double eval_checked(const std::function<double(double)> &f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "integrate: integrand is non-finite at x = " << x;
        throw NonFiniteError(os.str());
    }
    return v;
}

}  // namespace

double integrate(const std::function<double(double)> &f, const QuadratureSpec &spec) {
    spec.validate();
    const GaussLegendreTable &tab = gauss_legendre(spec.node_count);
    double sum = 0.0;
    if (spec.rule == QuadRule::GaussLegendre) {
        const double c = 0.5 * (spec.upper + spec.lower);
        const double h = 0.5 * (spec.upper - spec.lower);
        for (int i = 0; i < spec.node_count; ++i) {
            sum += tab.weights[i] * eval_checked(f, c + h * tab.nodes[i]);
        }
        return sum * h;
    }
    // Semi-infinite: s in (0,1), x = -log(1-s)/r, dx = ds / (r (1-s)).
    const double r = spec.decay_rate;
    for (int i = 0; i < spec.node_count; ++i) {
        const double s = 0.5 * (tab.nodes[i] + 1.0);
        const double one_minus_s = 1.0 - s;
        const double x = -std::log1p(-s) / r;
        sum += 0.5 * tab.weights[i] * eval_checked(f, x) / (r * one_minus_s);
    }
    return sum;
}

double integrate_to_tolerance(const std::function<double(double)> &f, QuadratureSpec spec,
                              double rel_tol, int max_doublings) {
    double prev = integrate(f, spec);
    for (int d = 0; d < max_doublings; ++d) {
        spec.node_count *= 2;
        const double cur = integrate(f, spec);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rel_tol * scale + 1e-15) return cur;
        prev = cur;
    }
    std::ostringstream os;
    os << "integrate_to_tolerance: no convergence to " << rel_tol << " after "
       << max_doublings << " doublings (last node count " << spec.node_count << ")";
    throw DivergenceError(os.str());
}

// ---------------------------------------------------------------------------

SymmetricToeplitz::SymmetricToeplitz(std::vector<double> first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw ConfigError("SymmetricToeplitz: first row must be nonempty");
}

Eigen::MatrixXd SymmetricToeplitz::dense() const {
    const int n = dim();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = row_[std::abs(i - j)];
    return m;
}

Eigen::MatrixXd cholesky_psd(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols()) throw NotPsdError("cholesky_psd: matrix must be square");
    const double max_diag = std::max(m.diagonal().maxCoeff(), 1e-300);
    // Jitter ladder: 0, then 1e-12 * max_diag escalating tenfold up to 1e-8.
    for (double jitter : {0.0, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8}) {
        Eigen::MatrixXd work = m;
        if (jitter > 0.0) work.diagonal().array() += jitter * max_diag;
        Eigen::LLT<Eigen::MatrixXd> llt(work);
        if (llt.info() == Eigen::Success) return llt.matrixL();
    }
    throw NotPsdError("cholesky_psd: matrix is not positive semidefinite within jitter budget");
}

Eigen::MatrixXd cholesky_psd(const SymmetricToeplitz &m) { return cholesky_psd(m.dense()); }

}  // namespace hstlink
