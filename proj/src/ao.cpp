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

#include "faisac/ao.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>

#include "faisac/experiment.hpp"
#include "faisac/geometry.hpp"
#include "faisac/port_search.hpp"

namespace faisac {

const char* to_string(AoStatus s) {
    switch (s) {
        case AoStatus::kConverged: return "CONVERGED";
        case AoStatus::kMaxOuter: return "MAX_OUTER";
        case AoStatus::kInfeasible: return "INFEASIBLE";
        case AoStatus::kSolverFailure: return "SOLVER_FAILURE";
    }
    return "?";
}

AoResult ao_optimize(const SystemConfig& cfg, const SolverOptions& opts, int max_outer) {
    cfg.validate();
    if (max_outer < 1) throw std::domain_error("ao_optimize: max_outer must be >= 1");

    AoResult result;
    result.feasibility = check_feasibility(cfg);
    if (!result.feasibility.feasible) {
        result.status = AoStatus::kInfeasible;
        return result;
    }

    const double p_c = cfg.p_c_mw();
    const double gamma = cfg.gamma_mw();
    const double sigma2 = cfg.sigma2_mw();

    result.selection = initial_selection(cfg.M, cfg.m0);
    result.status = AoStatus::kMaxOuter;
    double prev_rate = 0.0;

    for (int cycle = 0; cycle < max_outer; ++cycle) {
        const auto started = std::chrono::steady_clock::now();

        const Eigen::MatrixXcd G = response_matrix(result.selection, cfg);
        const Eigen::VectorXcd a = sensing_steering(result.selection, cfg);
        SolverResult solved = solve_covariance(G, a, p_c, gamma, sigma2, opts);

        TraceEntry entry;
        entry.index = cycle;
        entry.solver_status = solved.status;

        if (solved.status != SolverStatus::kOptimal) {
            entry.selection = result.selection;
            entry.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - started)
                                .count();
            result.trace.push_back(std::move(entry));
            result.status = AoStatus::kSolverFailure;
            return result;
        }
        result.W = solved.W;

        SearchReport sweep = coordinate_sweep(result.selection, result.W, cfg);
        result.selection = sweep.selection;

        const LinkMetrics metrics = link_metrics(
            result.W, response_matrix(result.selection, cfg),
            sensing_steering(result.selection, cfg), sigma2);
        entry.rate_bits = metrics.rate_bits;
        entry.beampattern_gain_mw = metrics.beampattern_gain_mw;
        entry.tx_power_mw = metrics.tx_power_mw;
        entry.selection = result.selection;
        entry.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        result.trace.push_back(std::move(entry));

        if (cycle >= 1 && std::abs(metrics.rate_bits - prev_rate) <= cfg.epsilon) {
            result.status = AoStatus::kConverged;
            break;
        }
        prev_rate = metrics.rate_bits;
    }
    return result;
}

double rate_upper_bound(const SystemConfig& cfg) {
    cfg.validate();
    const double p_c = cfg.p_c_mw();
    if (!(p_c > 0.0)) return 0.0;
    std::vector<int> all(static_cast<std::size_t>(cfg.M));
    std::iota(all.begin(), all.end(), 1);
    const Eigen::MatrixXcd G_full = response_matrix(PortSelection{std::move(all)}, cfg);
    const Eigen::MatrixXcd W_cap =
        p_c * Eigen::MatrixXcd::Identity(cfg.M, cfg.M);  // W <= trace(W) I for PSD W
    return achievable_rate(W_cap, G_full, cfg.sigma2_mw());
}

void trace_to_csv(const SolveTrace& trace, std::ostream& out, bool include_millis) {
    out << "i,rate_bits,beampattern_gain_mW,tx_power_mW,selection,status";
    if (include_millis) out << ",millis";
    out << '\n';
    for (const TraceEntry& e : trace) {
        out << e.index << ',' << format_double(e.rate_bits) << ','
            << format_double(e.beampattern_gain_mw) << ',' << format_double(e.tx_power_mw)
            << ',' << e.selection.to_string() << ',' << to_string(e.solver_status);
        if (include_millis) out << ',' << format_double(e.wall_ms);
        out << '\n';
    }
}

}  // namespace faisac
