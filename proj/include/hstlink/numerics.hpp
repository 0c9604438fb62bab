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
#include <functional>
#include <vector>

#include "hstlink/errors.hpp"

namespace hstlink {

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Modified Bessel function of the first kind, order zero.
/// Power series with compensated summation for z <= 200, asymptotic expansion
/// above. Relative error <= 1e-12 on [0, 700]; even in z.
double bessel_i0(double z);

/// exp(-|z|) * I0(z), safe for arguments where I0 itself would overflow.
double bessel_i0_scaled(double z);

/// I0 for complex argument via the power series sum_k (z^2/4)^k / (k!)^2.
/// Throws DivergenceError if the series does not converge within the
/// 200-term budget.
std::complex<double> bessel_i0(std::complex<double> z);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

enum class QuadRule {
    GaussLegendre,    ///< closed interval [lower, upper]
    SemiInfiniteExp,  ///< [0, inf) via x = -log(1-s)/decay_rate, s in [0,1)
};

struct QuadratureSpec {
    int node_count = 256;
    double lower = 0.0;
    double upper = 1.0;
    QuadRule rule = QuadRule::GaussLegendre;
    /// Rate hint for the semi-infinite transform; pick at or below the
    /// integrand's exponential decay rate so the mapped integrand stays smooth.
    double decay_rate = 1.0;

    static QuadratureSpec closed(double lo, double hi, int nodes = 256);
    static QuadratureSpec semi_infinite(double rate = 1.0, int nodes = 512);

    void validate() const;  // node_count >= 2, lower < upper for closed rules
};

/// Integrate f per `spec`. Throws NonFiniteError if f is non-finite at a node.
double integrate(const std::function<double(double)> &f, const QuadratureSpec &spec);

/// Integrate with node-doubling until two successive estimates agree to
/// `rel_tol` (relative, with an absolute floor), starting from spec.node_count.
/// Throws DivergenceError if still unconverged after `max_doublings`.
double integrate_to_tolerance(const std::function<double(double)> &f, QuadratureSpec spec,
                              double rel_tol = 1e-9, int max_doublings = 5);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Tables are computed once per n and cached; thread-safe.
struct GaussLegendreTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreTable &gauss_legendre(int n);

// ---------------------------------------------------------------------------
// Matrix primitives
// ---------------------------------------------------------------------------

/// Symmetric Toeplitz matrix stored by its first row: entry (m,n) equals
/// first_row[|m-n|].
class SymmetricToeplitz {
  public:
    explicit SymmetricToeplitz(std::vector<double> first_row);

    int dim() const { return static_cast<int>(row_.size()); }
    double operator()(int i, int j) const { return row_[std::abs(i - j)]; }
    const std::vector<double> &first_row() const { return row_; }
    Eigen::MatrixXd dense() const;

  private:
    std::vector<double> row_;
};

/// Lower-triangular Cholesky factor of a symmetric PSD matrix. Semidefinite
/// inputs are repaired with escalating diagonal jitter starting at
/// 1e-12 * max diagonal; throws NotPsdError if jitter up to 1e-8 * max
/// diagonal does not produce a successful factorization.
Eigen::MatrixXd cholesky_psd(const Eigen::MatrixXd &m);
Eigen::MatrixXd cholesky_psd(const SymmetricToeplitz &m);

}  // namespace hstlink
