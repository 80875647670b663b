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

#include "faisac/types.hpp"

#include <sstream>

namespace faisac {

void SystemConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("SystemConfig: " + what); };
    if (M < 1) fail("M must be >= 1");
    if (m0 < 1 || m0 > M) fail("m0 must satisfy 1 <= m0 <= M");
    if (N < 1) fail("N must be >= 1");
    if (!(d_U_m > 0.0)) fail("d_U_m must be > 0");
    if (!(d_C_m > 0.0)) fail("d_C_m must be > 0");
    if (!(lambda_m > 0.0)) fail("lambda_m must be > 0");
    if (!(H_m > 0.0)) fail("H_m must be > 0");
    if (!(L_C_m > 0.0)) fail("L_C_m must be > 0");
    if (!(epsilon > 0.0)) fail("epsilon must be > 0");
    if (!std::isfinite(theta_rad)) fail("theta_rad must be finite");
    if (!std::isfinite(Gamma_dBm) || !std::isfinite(P_max_dBm) || !std::isfinite(P_U_dBm) ||
        !std::isfinite(sigma2_dBm)) {
        fail("power quantities must be finite");
    }
}

void PortSelection::validate(int M) const {
    if (idx.empty()) throw std::domain_error("PortSelection: empty selection");
    int prev = 0;
    for (int r : idx) {
        if (r < 1 || r > M) {
            throw std::domain_error("PortSelection: index " + std::to_string(r) +
                                    " outside {1.." + std::to_string(M) + "}");
        }
        if (r <= prev) {
            throw std::domain_error("PortSelection: indices must be strictly increasing");
        }
        prev = r;
    }
}

std::string PortSelection::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << '-';
        os << idx[i];
    }
    return os.str();
}

}  // namespace faisac
