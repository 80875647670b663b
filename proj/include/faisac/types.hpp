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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace faisac {

/// Raised when a numerical routine detects a violation beyond its
/// round-off tolerance (e.g. an argument matrix that should be PSD is
/// indefinite by more than the allowed residue).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// dBm -> linear milliwatts.
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Linear milliwatts -> dBm.
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// All physical and algorithmic scalars of the link.
///
/// Power-like quantities are entered in dBm and converted to linear
/// milliwatts exactly once through the *_mw() accessors; all internal
/// math is linear. The communication power budget is the total budget
/// minus the static hover power, p_c_mw() = lin(P_max) - lin(P_U).
struct SystemConfig {
    int M = 40;               // total fluid-antenna ports on the transmitter
    int m0 = 10;              // activated ports (1 <= m0 <= M)
    int N = 4;                // receive antennas at the ground station
    double d_U_m = 0.05;      // port spacing at the transmitter [m]
    double d_C_m = 0.05;      // receive-antenna spacing [m]
    double lambda_m = 0.1;    // carrier wavelength [m]
    double H_m = 20.0;        // vertical offset, array center to receive center [m]
    double L_C_m = 100.0;     // horizontal transmitter-receiver distance [m]
    double theta_rad = M_PI / 6.0;  // sensing direction angle [rad]
    double Gamma_dBm = 8.0;   // sensing beampattern-gain threshold
    double P_max_dBm = 10.0;  // total power budget
    double P_U_dBm = 7.0;     // static hover power
    double sigma2_dBm = -70.0;  // receiver noise power
    double epsilon = 1e-3;    // alternating-optimization rate convergence threshold

    double p_max_mw() const { return dbm_to_mw(P_max_dBm); }
    double p_u_mw() const { return dbm_to_mw(P_U_dBm); }
    double gamma_mw() const { return dbm_to_mw(Gamma_dBm); }
    double sigma2_mw() const { return dbm_to_mw(sigma2_dBm); }
    /// Communication power budget in mW. May be <= 0 for an infeasible
    /// configuration; see check_feasibility().
    double p_c_mw() const { return p_max_mw() - p_u_mw(); }

    /// Throws std::invalid_argument on a structural violation (counts,
    /// lengths, thresholds). Power feasibility is deliberately not
    /// checked here; it is reported by check_feasibility() instead so
    /// callers can degrade gracefully.
    void validate() const;
};

/// Strictly increasing vector of activated-port indices in {1..M}.
struct PortSelection {
    std::vector<int> idx;

    PortSelection() = default;
    explicit PortSelection(std::vector<int> indices) : idx(std::move(indices)) {}

    int size() const { return static_cast<int>(idx.size()); }
    /// 1-based access: position m in {1..m0}.
    int at(int m) const { return idx.at(static_cast<std::size_t>(m) - 1); }

    /// Throws std::domain_error unless every index lies in {1..M} and the
    /// sequence is strictly increasing and non-empty.
    void validate(int M) const;

    bool operator==(const PortSelection& other) const { return idx == other.idx; }

    /// Indices joined with '-' (e.g. "2-6-10").
    std::string to_string() const;
};

}  // namespace faisac
