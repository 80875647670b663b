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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "faisac/ao.hpp"
#include "faisac/types.hpp"

namespace faisac {

/// Raised for file-system failures (unreadable config, unwritable
/// output), as opposed to invalid configuration content.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SweepVariable { kNone, kPMaxDbm, kM0 };
enum class BaselineMode { kNone, kFixedPorts };

struct ExperimentSpec {
    SystemConfig config;
    SweepVariable sweep = SweepVariable::kNone;
    std::vector<double> sweep_values;  // dBm values or port counts
    BaselineMode baseline = BaselineMode::kFixedPorts;
    std::string out_path;
    std::uint64_t seed = 0;  // recorded in outputs; the pipeline itself is deterministic
    int workers = 1;
    bool verbose = false;
};

/// Flat `key = value` configuration file. Keys: M, m0, N, P_max_dBm,
/// P_U_dBm, Gamma_dBm, theta_rad, lambda_m, d_U_m, d_C_m, H_m, L_C_m,
/// sigma2_dBm, epsilon. Missing keys keep their defaults; unknown keys
/// are errors. '#' starts a comment.
SystemConfig parse_config(std::istream& in, const std::string& origin = "<config>");
SystemConfig load_config_file(const std::string& path);

std::vector<double> default_power_grid();          // {8..14} dBm
std::vector<double> default_port_grid(int M);      // {2,4,6,8,10} clipped to M

/// Shortest round-tripping decimal representation, '.' decimal point,
/// locale-independent.
std::string format_double(double v);

struct SweepRow {
    double value = 0.0;           // swept P_max [dBm] or m0
    double rate_optimized = 0.0;  // valid when status == "OK"
    double rate_baseline = 0.0;   // valid when additionally has_baseline
    bool has_baseline = false;    // false under BaselineMode::kNone
    std::string status;           // "OK" or "INFEASIBLE"
};

struct SingleRunResult {
    AoStatus status = AoStatus::kInfeasible;
    double rate_bits = 0.0;
    double beampattern_gain_mw = 0.0;
    double tx_power_mw = 0.0;
    PortSelection selection;
    FeasibilityReport feasibility;
    int cycles = 0;
};

/// Runs one alternating optimization and writes the trace CSV to
/// spec.out_path. I/O failures raise io_error.
SingleRunResult run_single(const ExperimentSpec& spec);

/// Per sweep value, runs the alternating optimization and the
/// fixed-port baseline (evenly spaced selection, one covariance solve,
/// no port moves). Infeasible points yield an INFEASIBLE row and the
/// sweep continues. Points are evaluated concurrently up to
/// spec.workers; rows are written in sweep order regardless of
/// completion order. The CSV goes to spec.out_path.
std::vector<SweepRow> run_power_sweep(const ExperimentSpec& spec);
std::vector<SweepRow> run_port_sweep(const ExperimentSpec& spec);

/// CSV with a `# sigma2_dBm=...` metadata line (so SNR is derivable from
/// the power column), a header row, then one row per sweep point.
void write_sweep_csv(std::ostream& out, const std::string& x_label,
                     const std::vector<SweepRow>& rows, const SystemConfig& cfg,
                     std::uint64_t seed);

}  // namespace faisac
