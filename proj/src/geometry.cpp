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

#include "faisac/geometry.hpp"

#include <cmath>
#include <complex>

namespace faisac {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

double port_offset(int r_m, const SystemConfig& cfg) {
    if (r_m < 1 || r_m > cfg.M) {
        throw std::domain_error("port_offset: index " + std::to_string(r_m) +
                                " outside {1.." + std::to_string(cfg.M) + "}");
    }
    return 0.5 * (2.0 * (r_m - 1) - cfg.M + 1) * cfg.d_U_m;
}

double rx_antenna_offset(int n, const SystemConfig& cfg) {
    if (n < 1 || n > cfg.N) {
        throw std::domain_error("rx_antenna_offset: index " + std::to_string(n) +
                                " outside {1.." + std::to_string(cfg.N) + "}");
    }
    return 0.5 * (2.0 * (n - 1) - cfg.N + 1) * cfg.d_C_m;
}

namespace {

// sqrt(L^2 + (H+d)^2) - sqrt(L^2 + H^2) rewritten as
// d*(2H+d) / (A+B); exact zero when d == 0 and no cancellation loss
// when |d| << L.
double path_difference_offsets(double y_m, double y_n, double L, double H) {
    const double d = y_m - y_n;
    const double A = std::sqrt(L * L + (H + d) * (H + d));
    const double B = std::sqrt(L * L + H * H);
    return d * (2.0 * H + d) / (A + B);
}

}  // namespace

double path_difference(int m, int n, const PortSelection& sel, const SystemConfig& cfg) {
    sel.validate(cfg.M);
    if (m < 1 || m > sel.size()) {
        throw std::domain_error("path_difference: selection position " + std::to_string(m) +
                                " outside {1.." + std::to_string(sel.size()) + "}");
    }
    const double y_m = port_offset(sel.at(m), cfg);
    const double y_n = rx_antenna_offset(n, cfg);
    return path_difference_offsets(y_m, y_n, cfg.L_C_m, cfg.H_m);
}

Eigen::MatrixXcd response_matrix(const PortSelection& sel, const SystemConfig& cfg) {
    sel.validate(cfg.M);
    const int m0 = sel.size();
    Eigen::MatrixXcd G(m0, cfg.N);
    const double wavenumber = kTwoPi / cfg.lambda_m;
    for (int m = 1; m <= m0; ++m) {
        const double y_m = port_offset(sel.at(m), cfg);
        for (int n = 1; n <= cfg.N; ++n) {
            const double d = path_difference_offsets(y_m, rx_antenna_offset(n, cfg),
                                                     cfg.L_C_m, cfg.H_m);
            G(m - 1, n - 1) = std::polar(1.0, wavenumber * d);
        }
    }
    return G;
}

Eigen::VectorXcd sensing_steering(const PortSelection& sel, const SystemConfig& cfg) {
    sel.validate(cfg.M);
    const int m0 = sel.size();
    Eigen::VectorXcd a(m0);
    const double phase_per_port = kTwoPi / cfg.lambda_m * cfg.d_U_m * std::sin(cfg.theta_rad);
    const int r1 = sel.at(1);
    for (int m = 1; m <= m0; ++m) {
        a(m - 1) = std::polar(1.0, phase_per_port * (sel.at(m) - r1));
    }
    return a;
}

}  // namespace faisac
