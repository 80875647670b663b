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
#include <vector>

#include "faisac/covariance_solver.hpp"
#include "faisac/metrics.hpp"
#include "faisac/types.hpp"

namespace faisac {

/// One completed alternate-optimization cycle: covariance solve followed
/// by a port sweep, measured at the end of the cycle.
struct TraceEntry {
    int index = 0;  // consecutive from 0
    double rate_bits = 0.0;
    double beampattern_gain_mw = 0.0;
    double tx_power_mw = 0.0;
    PortSelection selection;
    SolverStatus solver_status = SolverStatus::kOptimal;
    double wall_ms = 0.0;
};

using SolveTrace = std::vector<TraceEntry>;

enum class AoStatus {
    kConverged,      // rate change fell below epsilon
    kMaxOuter,       // cycle cap reached first
    kInfeasible,     // configuration fails check_feasibility
    kSolverFailure,  // covariance subproblem did not reach optimality
};

const char* to_string(AoStatus s);

struct AoResult {
    AoStatus status = AoStatus::kInfeasible;
    Eigen::MatrixXcd W;
    PortSelection selection;
    SolveTrace trace;
    FeasibilityReport feasibility;
};

/// Alternates (a) the convex covariance solve with the current selection
/// and (b) one coordinate sweep of the selection under the returned W,
/// recording the rate after each full cycle, until the rate change drops
/// to epsilon or max_outer cycles elapse. Both steps are non-decreasing
/// in rate, so the trace is monotone up to solver tolerance.
AoResult ao_optimize(const SystemConfig& cfg, const SolverOptions& opts = {},
                     int max_outer = 50);

/// Computable rate upper bound for any selection and any feasible W:
/// log2 det(I_N + (P_C/sigma2) * Gf^H Gf) with Gf the all-port response
/// matrix. Follows from W <= trace(W) I and row-subset monotonicity of
/// the Gram matrix.
double rate_upper_bound(const SystemConfig& cfg);

/// One CSV row per cycle: i, rate, gain, radiated power, dash-joined
/// selection, solver status. Wall-clock millis are only emitted on
/// request; the default output is byte-reproducible across runs.
void trace_to_csv(const SolveTrace& trace, std::ostream& out,
                  bool include_millis = false);

}  // namespace faisac
