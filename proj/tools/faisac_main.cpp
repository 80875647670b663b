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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "faisac/experiment.hpp"

namespace {

// Exit codes: 0 success, 2 infeasible or invalid configuration,
// 3 I/O error, 4 solver non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoConvergence = 4;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int workers = 1;
    bool verbose = false;
};

void attach_common(CLI::App* cmd, CommonArgs* args, const std::string& default_out) {
    args->out_path = default_out;
    cmd->add_option("--config", args->config_path, "configuration file (key = value lines)");
    cmd->add_option("--out", args->out_path, "output CSV path")->capture_default_str();
    cmd->add_option("--seed", args->seed, "seed recorded in outputs")->capture_default_str();
    cmd->add_option("--workers", args->workers, "concurrent sweep points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--verbose", args->verbose, "progress details on stderr");
}

faisac::ExperimentSpec make_spec(const CommonArgs& args) {
    faisac::ExperimentSpec spec;
    if (!args.config_path.empty()) {
        spec.config = faisac::load_config_file(args.config_path);
    }
    spec.out_path = args.out_path;
    spec.seed = args.seed;
    spec.workers = args.workers;
    spec.verbose = args.verbose;
    return spec;
}

int do_solve(const CommonArgs& args) {
    faisac::ExperimentSpec spec = make_spec(args);
    spec.sweep = faisac::SweepVariable::kNone;
    const faisac::SingleRunResult res = faisac::run_single(spec);
    if (res.status == faisac::AoStatus::kInfeasible) {
        std::cerr << res.feasibility.message << '\n';
        return kExitInfeasible;
    }
    if (args.verbose) {
        std::cerr << "cycles=" << res.cycles << " trace written to " << spec.out_path << '\n';
    }
    std::cout << "status=" << faisac::to_string(res.status)
              << " rate_bits=" << faisac::format_double(res.rate_bits)
              << " beampattern_gain_mW=" << faisac::format_double(res.beampattern_gain_mw)
              << " tx_power_mW=" << faisac::format_double(res.tx_power_mw)
              << " selection=" << res.selection.to_string() << " cycles=" << res.cycles
              << '\n';
    if (res.status != faisac::AoStatus::kConverged) return kExitNoConvergence;
    return kExitOk;
}

int do_sweep(const CommonArgs& args, faisac::SweepVariable variable) {
    faisac::ExperimentSpec spec = make_spec(args);
    spec.sweep = variable;
    spec.sweep_values = (variable == faisac::SweepVariable::kPMaxDbm)
                            ? faisac::default_power_grid()
                            : faisac::default_port_grid(spec.config.M);
    const auto rows = (variable == faisac::SweepVariable::kPMaxDbm)
                          ? faisac::run_power_sweep(spec)
                          : faisac::run_port_sweep(spec);
    if (args.verbose) {
        for (const auto& row : rows) {
            std::cerr << "point " << faisac::format_double(row.value) << ": " << row.status
                      << '\n';
        }
    }
    std::cout << rows.size() << " sweep rows written to " << spec.out_path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fluid-antenna ISAC transmitter optimization"};
    app.require_subcommand(1);

    CommonArgs solve_args, power_args, ports_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "one alternating optimization; writes the per-cycle trace CSV");
    attach_common(solve, &solve_args, "trace.csv");
    CLI::App* sweep_power = app.add_subcommand(
        "sweep-power", "rate vs. power budget, optimized and fixed-port baseline");
    attach_common(sweep_power, &power_args, "sweep_power.csv");
    CLI::App* sweep_ports = app.add_subcommand(
        "sweep-ports", "rate vs. active-port count, optimized and fixed-port baseline");
    attach_common(sweep_ports, &ports_args, "sweep_ports.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return do_solve(solve_args);
        if (sweep_power->parsed()) return do_sweep(power_args, faisac::SweepVariable::kPMaxDbm);
        if (sweep_ports->parsed()) return do_sweep(ports_args, faisac::SweepVariable::kM0);
    } catch (const faisac::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
