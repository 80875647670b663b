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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "faisac/ao.hpp"
#include "faisac/covariance_solver.hpp"
#include "faisac/experiment.hpp"
#include "faisac/geometry.hpp"
#include "faisac/metrics.hpp"
#include "faisac/port_search.hpp"

namespace py = pybind11;
using namespace faisac;

namespace {

PortSelection as_selection(const std::vector<int>& idx) { return PortSelection{idx}; }

}  // namespace

PYBIND11_MODULE(_faisac, m) {
    m.doc() = "Joint transmit-covariance and fluid-antenna port-selection optimization";

    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("M", &SystemConfig::M)
        .def_readwrite("m0", &SystemConfig::m0)
        .def_readwrite("N", &SystemConfig::N)
        .def_readwrite("d_U_m", &SystemConfig::d_U_m)
        .def_readwrite("d_C_m", &SystemConfig::d_C_m)
        .def_readwrite("lambda_m", &SystemConfig::lambda_m)
        .def_readwrite("H_m", &SystemConfig::H_m)
        .def_readwrite("L_C_m", &SystemConfig::L_C_m)
        .def_readwrite("theta_rad", &SystemConfig::theta_rad)
        .def_readwrite("Gamma_dBm", &SystemConfig::Gamma_dBm)
        .def_readwrite("P_max_dBm", &SystemConfig::P_max_dBm)
        .def_readwrite("P_U_dBm", &SystemConfig::P_U_dBm)
        .def_readwrite("sigma2_dBm", &SystemConfig::sigma2_dBm)
        .def_readwrite("epsilon", &SystemConfig::epsilon)
        .def("p_c_mw", &SystemConfig::p_c_mw)
        .def("gamma_mw", &SystemConfig::gamma_mw)
        .def("sigma2_mw", &SystemConfig::sigma2_mw)
        .def("validate", &SystemConfig::validate);

    py::enum_<SolverStatus>(m, "SolverStatus")
        .value("OPTIMAL", SolverStatus::kOptimal)
        .value("INFEASIBLE", SolverStatus::kInfeasible)
        .value("MAX_ITERS", SolverStatus::kMaxIters);

    py::enum_<AoStatus>(m, "AoStatus")
        .value("CONVERGED", AoStatus::kConverged)
        .value("MAX_OUTER", AoStatus::kMaxOuter)
        .value("INFEASIBLE", AoStatus::kInfeasible)
        .value("SOLVER_FAILURE", AoStatus::kSolverFailure);

    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("kkt_tol", &SolverOptions::kkt_tol)
        .def_readwrite("max_iters", &SolverOptions::max_iters)
        .def_readwrite("barrier_decrease", &SolverOptions::barrier_decrease)
        .def_readwrite("min_step", &SolverOptions::min_step);

    py::class_<SolverResult>(m, "SolverResult")
        .def_readonly("W", &SolverResult::W)
        .def_readonly("objective_bits", &SolverResult::objective_bits)
        .def_readonly("status", &SolverResult::status)
        .def_readonly("kkt_residual", &SolverResult::kkt_residual)
        .def_readonly("trace_active", &SolverResult::trace_active)
        .def_readonly("gain_active", &SolverResult::gain_active)
        .def_readonly("newton_iters", &SolverResult::newton_iters);

    py::class_<WaterfillingResult>(m, "WaterfillingResult")
        .def_readonly("W", &WaterfillingResult::W)
        .def_readonly("allocations", &WaterfillingResult::allocations)
        .def_readonly("water_level", &WaterfillingResult::water_level)
        .def_readonly("degenerate", &WaterfillingResult::degenerate);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("feasible", &FeasibilityReport::feasible)
        .def_readonly("p_c_mw", &FeasibilityReport::p_c_mw)
        .def_readonly("gamma_mw", &FeasibilityReport::gamma_mw)
        .def_readonly("max_gain_mw", &FeasibilityReport::max_gain_mw)
        .def_readonly("margin_mw", &FeasibilityReport::margin_mw)
        .def_readonly("message", &FeasibilityReport::message);

    py::class_<SearchReport>(m, "SearchReport")
        .def_property_readonly("selection",
                               [](const SearchReport& r) { return r.selection.idx; })
        .def_readonly("rate_bits", &SearchReport::rate_bits)
        .def_readonly("moves_accepted", &SearchReport::moves_accepted)
        .def_readonly("candidates_evaluated", &SearchReport::candidates_evaluated)
        .def_readonly("constraint_rejections", &SearchReport::constraint_rejections)
        .def_readonly("sensing_feasible", &SearchReport::sensing_feasible);

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("index", &TraceEntry::index)
        .def_readonly("rate_bits", &TraceEntry::rate_bits)
        .def_readonly("beampattern_gain_mw", &TraceEntry::beampattern_gain_mw)
        .def_readonly("tx_power_mw", &TraceEntry::tx_power_mw)
        .def_property_readonly("selection",
                               [](const TraceEntry& e) { return e.selection.idx; })
        .def_readonly("solver_status", &TraceEntry::solver_status)
        .def_readonly("wall_ms", &TraceEntry::wall_ms);

    py::class_<AoResult>(m, "AoResult")
        .def_readonly("status", &AoResult::status)
        .def_readonly("W", &AoResult::W)
        .def_property_readonly("selection",
                               [](const AoResult& r) { return r.selection.idx; })
        .def_readonly("trace", &AoResult::trace)
        .def_readonly("feasibility", &AoResult::feasibility);

    m.def("dbm_to_mw", &dbm_to_mw, py::arg("dbm"));
    m.def("mw_to_dbm", &mw_to_dbm, py::arg("mw"));

    m.def("port_offset", &port_offset, py::arg("r_m"), py::arg("cfg"));
    m.def("rx_antenna_offset", &rx_antenna_offset, py::arg("n"), py::arg("cfg"));
    m.def(
        "path_difference",
        [](int mm, int n, const std::vector<int>& sel, const SystemConfig& cfg) {
            return path_difference(mm, n, as_selection(sel), cfg);
        },
        py::arg("m"), py::arg("n"), py::arg("selection"), py::arg("cfg"));
    m.def(
        "response_matrix",
        [](const std::vector<int>& sel, const SystemConfig& cfg) {
            return response_matrix(as_selection(sel), cfg);
        },
        py::arg("selection"), py::arg("cfg"));
    m.def(
        "sensing_steering",
        [](const std::vector<int>& sel, const SystemConfig& cfg) {
            return sensing_steering(as_selection(sel), cfg);
        },
        py::arg("selection"), py::arg("cfg"));

    m.def("achievable_rate", &achievable_rate, py::arg("W"), py::arg("G"),
          py::arg("sigma2_mw"));
    m.def("beampattern_gain", &beampattern_gain, py::arg("W"), py::arg("a"));
    m.def("check_feasibility", &check_feasibility, py::arg("cfg"));

    m.def("solve_covariance", &solve_covariance, py::arg("G"), py::arg("a"),
          py::arg("p_c_mw"), py::arg("gamma_mw"), py::arg("sigma2_mw"),
          py::arg("options") = SolverOptions{});
    m.def("waterfilling_oracle", &waterfilling_oracle, py::arg("G"), py::arg("p_c_mw"),
          py::arg("sigma2_mw"));

    m.def(
        "initial_selection",
        [](int M, int m0) { return initial_selection(M, m0).idx; }, py::arg("M"),
        py::arg("m0"));
    m.def(
        "coordinate_sweep",
        [](const std::vector<int>& sel, const Eigen::MatrixXcd& W, const SystemConfig& cfg) {
            return coordinate_sweep(as_selection(sel), W, cfg);
        },
        py::arg("selection"), py::arg("W"), py::arg("cfg"));
    m.def("exhaustive_search", &exhaustive_search, py::arg("W"), py::arg("cfg"));

    m.def("ao_optimize", &ao_optimize, py::arg("cfg"),
          py::arg("options") = SolverOptions{}, py::arg("max_outer") = 50);
    m.def("rate_upper_bound", &rate_upper_bound, py::arg("cfg"));

#ifdef FAISAC_VERSION
    m.attr("__version__") = FAISAC_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
