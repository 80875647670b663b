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

#include "faisac/types.hpp"

namespace faisac {

// Geometry and line-of-sight channel quantities. Ports are numbered
// 1..M bottom to top along a vertical line; receive antennas 1..N along
// a vertical line at horizontal distance L_C. All functions are pure
// and take 1-based indices.

/// Vertical offset of port r_m from the array center:
/// y = ((2(r_m - 1) - M + 1)/2) * d_U. Throws std::domain_error when
/// r_m is outside {1..M}.
double port_offset(int r_m, const SystemConfig& cfg);

/// Vertical offset of receive antenna n from its array center:
/// y = ((2(n - 1) - N + 1)/2) * d_C. Throws std::domain_error when n is
/// outside {1..N}.
double rx_antenna_offset(int n, const SystemConfig& cfg);

/// Propagation path-length difference between port m of the selection
/// and the transmit-array center, toward receive antenna n:
///   sqrt(L_C^2 + (H + y_m - y_n)^2) - sqrt(L_C^2 + H^2).
/// Evaluated in the cancellation-free form
///   (y_m - y_n) * (2H + y_m - y_n) / (A + B)
/// so that matched offsets (y_m == y_n) give exactly zero.
/// m indexes the selection (1..m0), n the receive array (1..N).
double path_difference(int m, int n, const PortSelection& sel, const SystemConfig& cfg);

/// Response matrix G of shape m0 x N with G(m,n) = exp(j*(2*pi/lambda)*d(m,n)),
/// where d(m,n) is the path difference above. Every entry has unit modulus;
/// column n is the transmit response vector for receive antenna n.
Eigen::MatrixXcd response_matrix(const PortSelection& sel, const SystemConfig& cfg);

/// Sensing steering vector of length m0 toward angle theta:
///   a[m] = exp(j*(2*pi/lambda)*d_U*(r_m - r_1)*sin(theta)).
/// The phase is anchored at the first selected port, so a[1] == 1 exactly
/// and the vector depends only on index differences r_m - r_1.
Eigen::VectorXcd sensing_steering(const PortSelection& sel, const SystemConfig& cfg);

}  // namespace faisac
