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
#include <cstdint>

#include "faisac/types.hpp"

namespace faisac {

struct SearchReport {
    PortSelection selection;
    double rate_bits = 0.0;            // rate of `selection` under the fixed W
    int moves_accepted = 0;
    std::int64_t candidates_evaluated = 0;
    std::int64_t constraint_rejections = 0;
    // False when some coordinate had no candidate meeting the sensing
    // threshold (the incumbent included); the selection is then returned
    // unchanged at that coordinate.
    bool sensing_feasible = true;
};

/// Evenly spaced starting selection r_m = round((m - 1/2) * M / m0),
/// clipped to {1..M} and repaired to strict ascent.
PortSelection initial_selection(int M, int m0);

/// One ascending coordinate-descent pass over the selection with W fixed.
/// Coordinate m ranges over the open integer interval (r_{m-1}, r_{m+1})
/// with sentinels r_0 = 0 and r_{m0+1} = M+1, which preserves strict
/// ascent by construction. Each candidate is scored by the rate of its
/// rebuilt response matrix; candidates whose rebuilt steering vector
/// falls below the sensing threshold are rejected. A move is accepted
/// only when the best feasible candidate strictly beats the incumbent
/// rate (ties keep the incumbent), except that a feasible candidate
/// always replaces an incumbent that itself violates the threshold.
SearchReport coordinate_sweep(const PortSelection& sel, const Eigen::MatrixXcd& W,
                              const SystemConfig& cfg);

/// Ground truth by full enumeration of all strictly increasing
/// selections; returns the feasible-rate maximizer. Intended for tests
/// and small-scale comparisons: throws std::domain_error when
/// C(M, m0) > 10^6.
SearchReport exhaustive_search(const Eigen::MatrixXcd& W, const SystemConfig& cfg);

}  // namespace faisac
