// SPDX-License-Identifier: Apache-2.0
//
// faisac: joint transmit-covariance and fluid-antenna port-selection
// optimization for a UAV-mounted ISAC downlink.
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
#include <string>

#include "faisac/types.hpp"

namespace faisac {

/// Transmit covariance matrices are plain complex Hermitian PSD Eigen
/// matrices; trace equals radiated power in mW.
using CovarianceMatrix = Eigen::MatrixXcd;

/// (W + W^H) / 2. Applied before metric evaluation to absorb solver
/// round-off.
Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& W);

/// Validates the covariance invariants: max|W - W^H| <= herm_tol,
/// min eigenvalue >= -psd_tol * trace(W), trace real and nonnegative.
/// Throws numeric_error on violation.
void validate_covariance(const Eigen::MatrixXcd& W, double herm_tol = 1e-9,
                         double psd_tol = 1e-8);

/// Achievable rate log2 det(I_N + G^H W G / sigma2) in bits per channel
/// use. W is m0 x m0 Hermitian PSD, G is m0 x N, sigma2_mw > 0. The
/// determinant is evaluated through a Cholesky factorization of the
/// Hermitian PSD argument; an argument indefinite beyond round-off
/// tolerance raises numeric_error, a dimension mismatch std::domain_error.
double achievable_rate(const Eigen::MatrixXcd& W, const Eigen::MatrixXcd& G,
                       double sigma2_mw);

/// Sensing beampattern gain a^H W a in mW. The imaginary residue must
/// not exceed 1e-9 relative to the magnitude (numeric_error otherwise);
/// the real part is returned.
double beampattern_gain(const Eigen::MatrixXcd& W, const Eigen::VectorXcd& a);

/// Rate, beampattern gain, and radiated power of one (W, selection) pair.
struct LinkMetrics {
    double rate_bits = 0.0;
    double beampattern_gain_mw = 0.0;
    double tx_power_mw = 0.0;
};

LinkMetrics link_metrics(const Eigen::MatrixXcd& W, const Eigen::MatrixXcd& G,
                         const Eigen::VectorXcd& a, double sigma2_mw);

enum class InfeasibilityCode {
    kNone,
    kHoverExceedsBudget,  // P_max <= P_U leaves no communication power
    kGainUnreachable,     // Gamma > m0 * P_C, beyond the PSD gain bound
};

/// Feasibility verdict for a configuration. For any PSD W with a
/// unit-modulus steering vector, a^H W a <= m0 * trace(W), so the gain
/// threshold is attainable iff m0 * P_C >= Gamma; the witness is the
/// aligned rank-one matrix (P_C/m0) * a a^H with trace P_C and gain
/// m0 * P_C.
struct FeasibilityReport {
    bool feasible = false;
    InfeasibilityCode code = InfeasibilityCode::kNone;
    double p_c_mw = 0.0;       // linear communication budget
    double gamma_mw = 0.0;     // linear gain threshold
    double max_gain_mw = 0.0;  // m0 * P_C, the attainable gain bound
    double margin_mw = 0.0;    // max_gain_mw - gamma_mw
    std::string message;       // names the violated bound when infeasible
};

FeasibilityReport check_feasibility(const SystemConfig& cfg);

}  // namespace faisac
