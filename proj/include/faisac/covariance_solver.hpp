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
#include <iosfwd>

#include "faisac/types.hpp"

namespace faisac {

struct SolverOptions {
    double kkt_tol = 1e-7;         // target bound on rate suboptimality [bits]
    int max_iters = 500;           // total Newton-iteration cap
    double barrier_decrease = 0.2; // homotopy factor; t <- t / barrier_decrease
    double min_step = 1e-12;       // smallest accepted line-search step
    std::ostream* diag = nullptr;  // central-path dump when non-null
};

enum class SolverStatus { kOptimal, kInfeasible, kMaxIters };

const char* to_string(SolverStatus s);

struct SolverResult {
    Eigen::MatrixXcd W;            // m0 x m0 Hermitian PSD
    double objective_bits = 0.0;   // log2 det(I + G^H W G / sigma2)
    SolverStatus status = SolverStatus::kInfeasible;
    double kkt_residual = 0.0;     // certified suboptimality bound [bits]
    bool trace_active = false;     // trace(W) at the power budget
    bool gain_active = false;      // a^H W a at the gain threshold
    int newton_iters = 0;
};

/// Maximizes log2 det(I_N + G^H W G / sigma2) over Hermitian PSD W
/// subject to trace(W) <= p_c_mw and a^H W a >= gamma_mw.
///
/// Interior-point log-barrier on the PSD cone and the two scalar
/// constraints, following the central path with damped Newton steps.
/// The optimal W is supported on span(G, a), so the barrier problem is
/// solved on that subspace (dimension <= N+1) after a rank-revealing
/// orthogonalization; the final iterate is rescaled onto the power
/// budget, which cannot reduce the objective or violate the gain bound.
///
/// Infeasible inputs (p_c <= 0, or gamma > m0 * p_c) give status
/// kInfeasible, never an exception. When gamma == m0 * p_c within
/// round-off the unique feasible point (p_c/m0) a a^H is returned
/// directly. Deterministic: identical inputs and options produce
/// bit-identical results.
SolverResult solve_covariance(const Eigen::MatrixXcd& G, const Eigen::VectorXcd& a,
                              double p_c_mw, double gamma_mw, double sigma2_mw,
                              const SolverOptions& opts = {});

struct WaterfillingResult {
    Eigen::MatrixXcd W;
    Eigen::VectorXd allocations;  // per-eigenmode powers, descending-mode order
    double water_level = 0.0;
    bool degenerate = false;      // all-zero channel; W is the zero matrix
};

/// Classical water-filling over the eigenmodes of G G^H with total power
/// p_c_mw: the gain-unconstrained specialization of solve_covariance,
/// computed by an independent route (eigendecomposition plus bisection
/// on the water level).
WaterfillingResult waterfilling_oracle(const Eigen::MatrixXcd& G, double p_c_mw,
                                       double sigma2_mw);

}  // namespace faisac
