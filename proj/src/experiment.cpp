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

#include "faisac/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "faisac/geometry.hpp"
#include "faisac/port_search.hpp"

namespace faisac {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key,
                    const std::string& origin) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument(origin + ": key '" + key + "' has non-numeric value '" +
                                    value + "'");
    }
    if (consumed != value.size()) {
        throw std::invalid_argument(origin + ": key '" + key + "' has trailing junk in '" +
                                    value + "'");
    }
    return v;
}

int parse_count(const std::string& value, const std::string& key, const std::string& origin) {
    const double v = parse_number(value, key, origin);
    if (v != std::floor(v)) {
        throw std::invalid_argument(origin + ": key '" + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

}  // namespace

SystemConfig parse_config(std::istream& in, const std::string& origin) {
    SystemConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key == "M") cfg.M = parse_count(value, key, origin);
        else if (key == "m0") cfg.m0 = parse_count(value, key, origin);
        else if (key == "N") cfg.N = parse_count(value, key, origin);
        else if (key == "d_U_m") cfg.d_U_m = parse_number(value, key, origin);
        else if (key == "d_C_m") cfg.d_C_m = parse_number(value, key, origin);
        else if (key == "lambda_m") cfg.lambda_m = parse_number(value, key, origin);
        else if (key == "H_m") cfg.H_m = parse_number(value, key, origin);
        else if (key == "L_C_m") cfg.L_C_m = parse_number(value, key, origin);
        else if (key == "theta_rad") cfg.theta_rad = parse_number(value, key, origin);
        else if (key == "Gamma_dBm") cfg.Gamma_dBm = parse_number(value, key, origin);
        else if (key == "P_max_dBm") cfg.P_max_dBm = parse_number(value, key, origin);
        else if (key == "P_U_dBm") cfg.P_U_dBm = parse_number(value, key, origin);
        else if (key == "sigma2_dBm") cfg.sigma2_dBm = parse_number(value, key, origin);
        else if (key == "epsilon") cfg.epsilon = parse_number(value, key, origin);
        else {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

SystemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

std::vector<double> default_power_grid() { return {8, 9, 10, 11, 12, 13, 14}; }

std::vector<double> default_port_grid(int M) {
    std::vector<double> grid;
    for (int v : {2, 4, 6, 8, 10}) {
        if (v <= M) grid.push_back(v);
    }
    if (grid.empty()) grid.push_back(std::min(1, M));
    return grid;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

SingleRunResult run_single(const ExperimentSpec& spec) {
    spec.config.validate();
    if (spec.sweep != SweepVariable::kNone) {
        throw std::invalid_argument("run_single: spec requests a sweep");
    }
    SingleRunResult out;
    out.feasibility = check_feasibility(spec.config);
    if (!out.feasibility.feasible) {
        out.status = AoStatus::kInfeasible;
        return out;
    }
    const AoResult ao = ao_optimize(spec.config);
    out.status = ao.status;
    out.selection = ao.selection;
    out.cycles = static_cast<int>(ao.trace.size());
    if (!ao.trace.empty()) {
        out.rate_bits = ao.trace.back().rate_bits;
        out.beampattern_gain_mw = ao.trace.back().beampattern_gain_mw;
        out.tx_power_mw = ao.trace.back().tx_power_mw;
    }
    if (!spec.out_path.empty()) {
        std::ofstream file(spec.out_path);
        if (!file) throw io_error("cannot open output file '" + spec.out_path + "'");
        file << "# sigma2_dBm=" << format_double(spec.config.sigma2_dBm)
             << " seed=" << spec.seed << '\n';
        trace_to_csv(ao.trace, file);
        if (!file) throw io_error("failed writing output file '" + spec.out_path + "'");
    }
    return out;
}

namespace {

SweepRow evaluate_sweep_point(const SystemConfig& cfg, double value, bool with_baseline) {
    SweepRow row;
    row.value = value;
    const FeasibilityReport feas = check_feasibility(cfg);
    if (!feas.feasible) {
        row.status = "INFEASIBLE";
        return row;
    }
    const AoResult ao = ao_optimize(cfg);
    if (ao.status != AoStatus::kConverged && ao.status != AoStatus::kMaxOuter) {
        row.status = to_string(ao.status);
        return row;
    }
    row.rate_optimized = ao.trace.back().rate_bits;
    row.status = (ao.status == AoStatus::kConverged) ? "OK" : to_string(ao.status);
    if (!with_baseline) return row;

    // Fixed-port baseline: the evenly spaced starting selection with a
    // single covariance solve and no port moves.
    const PortSelection base_sel = initial_selection(cfg.M, cfg.m0);
    const SolverResult base = solve_covariance(
        response_matrix(base_sel, cfg), sensing_steering(base_sel, cfg), cfg.p_c_mw(),
        cfg.gamma_mw(), cfg.sigma2_mw());
    if (base.status != SolverStatus::kOptimal) {
        row.status = "SOLVER_FAILURE";
        return row;
    }
    row.rate_baseline = base.objective_bits;
    row.has_baseline = true;
    return row;
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec, SweepVariable variable) {
    spec.config.validate();
    const std::vector<double>& values = spec.sweep_values;
    if (values.empty()) throw std::invalid_argument("run_sweep: no sweep values");
    if (variable == SweepVariable::kM0) {
        for (double v : values) {
            if (v != std::floor(v) || v < 1 || v > spec.config.M) {
                throw std::domain_error("run_sweep: port count " + format_double(v) +
                                        " outside 1..M");
            }
        }
    }

    std::vector<SweepRow> rows(values.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::max(1, std::min<int>(spec.workers,
                                                  static_cast<int>(values.size())));
    auto work = [&]() {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= values.size()) break;
            SystemConfig cfg = spec.config;
            if (variable == SweepVariable::kPMaxDbm) {
                cfg.P_max_dBm = values[j];
            } else {
                cfg.m0 = static_cast<int>(values[j]);
            }
            try {
                rows[j] = evaluate_sweep_point(cfg, values[j],
                                               spec.baseline == BaselineMode::kFixedPorts);
            } catch (const std::exception& e) {
                rows[j].value = values[j];
                rows[j].status = std::string("ERROR: ") + e.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (!spec.out_path.empty()) {
        std::ofstream file(spec.out_path);
        if (!file) throw io_error("cannot open output file '" + spec.out_path + "'");
        write_sweep_csv(file, variable == SweepVariable::kPMaxDbm ? "P_max_dBm" : "m0", rows,
                        spec.config, spec.seed);
        if (!file) throw io_error("failed writing output file '" + spec.out_path + "'");
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> run_power_sweep(const ExperimentSpec& spec) {
    return run_sweep(spec, SweepVariable::kPMaxDbm);
}

std::vector<SweepRow> run_port_sweep(const ExperimentSpec& spec) {
    return run_sweep(spec, SweepVariable::kM0);
}

void write_sweep_csv(std::ostream& out, const std::string& x_label,
                     const std::vector<SweepRow>& rows, const SystemConfig& cfg,
                     std::uint64_t seed) {
    out << "# sigma2_dBm=" << format_double(cfg.sigma2_dBm) << " seed=" << seed << '\n';
    out << x_label << ",rate_optimized,rate_fixed_baseline,status\n";
    for (const SweepRow& row : rows) {
        out << format_double(row.value) << ',';
        if (row.status == "OK" || row.status == "MAX_OUTER") {
            out << format_double(row.rate_optimized) << ',';
            if (row.has_baseline) out << format_double(row.rate_baseline);
        } else {
            out << ',';
        }
        out << ',' << row.status << '\n';
    }
}

}  // namespace faisac
