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

#include "faisac/metrics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <sstream>

namespace faisac {

Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& W) {
    return 0.5 * (W + W.adjoint());
}

void validate_covariance(const Eigen::MatrixXcd& W, double herm_tol, double psd_tol) {
    if (W.rows() != W.cols()) throw std::domain_error("covariance: matrix must be square");
    const double herm_residue = (W - W.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm_residue <= herm_tol)) {
        throw numeric_error("covariance: Hermitian residue " + std::to_string(herm_residue) +
                            " exceeds tolerance");
    }
    const Eigen::MatrixXcd H = hermitized(W);
    const double tr = H.trace().real();
    if (!(tr >= 0.0)) throw numeric_error("covariance: negative trace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -psd_tol * std::max(tr, 1e-300)) {
        throw numeric_error("covariance: minimum eigenvalue " + std::to_string(min_eig) +
                            " below PSD tolerance");
    }
}

double achievable_rate(const Eigen::MatrixXcd& W, const Eigen::MatrixXcd& G,
                       double sigma2_mw) {
    if (W.rows() != W.cols()) throw std::domain_error("achievable_rate: W must be square");
    if (G.rows() != W.rows()) {
        throw std::domain_error("achievable_rate: G has " + std::to_string(G.rows()) +
                                " rows, W is " + std::to_string(W.rows()) + "x" +
                                std::to_string(W.cols()));
    }
    if (!(sigma2_mw > 0.0)) throw std::domain_error("achievable_rate: sigma2 must be > 0");

    // det(I + G^H W G / s2) = prod(1 + s_i^2 / s2) over the singular
    // values of B = W^{1/2} G. Summing log1p over singular values keeps
    // full absolute accuracy even when ||G^H W G|| / s2 is enormous,
    // where forming I + A and factoring would round the identity away.
    const Eigen::MatrixXcd Wh = hermitized(W);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Wh);
    if (es.info() != Eigen::Success) {
        throw numeric_error("achievable_rate: eigendecomposition of W failed");
    }
    const Eigen::VectorXd& eig = es.eigenvalues();
    const double tr = std::max(0.0, Wh.trace().real());
    if (eig.minCoeff() < -1e-8 * std::max(tr, 1e-300)) {
        throw numeric_error("achievable_rate: W indefinite beyond tolerance (min eig " +
                            std::to_string(eig.minCoeff()) + ")");
    }
    const Eigen::Index m0 = W.rows();
    const double clamp_tol = static_cast<double>(m0) *
                             std::numeric_limits<double>::epsilon() *
                             std::max(eig.maxCoeff(), 0.0);
    Eigen::VectorXd sqrt_eig(m0);
    for (Eigen::Index i = 0; i < m0; ++i) {
        sqrt_eig(i) = eig(i) > clamp_tol ? std::sqrt(eig(i)) : 0.0;
    }
    const Eigen::MatrixXcd B =
        sqrt_eig.asDiagonal() * (es.eigenvectors().adjoint() * G);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B);
    double rate = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()(i);
        rate += std::log1p(s * s / sigma2_mw);
    }
    return rate / std::log(2.0);
}

double beampattern_gain(const Eigen::MatrixXcd& W, const Eigen::VectorXcd& a) {
    if (W.rows() != W.cols()) throw std::domain_error("beampattern_gain: W must be square");
    if (a.size() != W.rows()) {
        throw std::domain_error("beampattern_gain: steering length " + std::to_string(a.size()) +
                                " does not match W dimension " + std::to_string(W.rows()));
    }
    const std::complex<double> v = a.adjoint() * hermitized(W) * a;
    const double mag = std::abs(v);
    if (std::abs(v.imag()) > 1e-9 * std::max(mag, 1e-300)) {
        throw numeric_error("beampattern_gain: imaginary residue " + std::to_string(v.imag()) +
                            " exceeds tolerance");
    }
    return v.real();
}

LinkMetrics link_metrics(const Eigen::MatrixXcd& W, const Eigen::MatrixXcd& G,
                         const Eigen::VectorXcd& a, double sigma2_mw) {
    LinkMetrics m;
    m.rate_bits = achievable_rate(W, G, sigma2_mw);
    m.beampattern_gain_mw = beampattern_gain(W, a);
    m.tx_power_mw = hermitized(W).trace().real();
    return m;
}

FeasibilityReport check_feasibility(const SystemConfig& cfg) {
    cfg.validate();
    FeasibilityReport rep;
    rep.p_c_mw = cfg.p_c_mw();
    rep.gamma_mw = cfg.gamma_mw();
    std::ostringstream msg;
    if (!(rep.p_c_mw > 0.0)) {
        rep.feasible = false;
        rep.code = InfeasibilityCode::kHoverExceedsBudget;
        rep.max_gain_mw = 0.0;
        rep.margin_mw = -rep.gamma_mw;
        msg << "infeasible: hover power P_U=" << cfg.P_U_dBm
            << " dBm leaves no communication budget (P_C=" << rep.p_c_mw << " mW <= 0)";
        rep.message = msg.str();
        return rep;
    }
    rep.max_gain_mw = cfg.m0 * rep.p_c_mw;
    rep.margin_mw = rep.max_gain_mw - rep.gamma_mw;
    if (rep.margin_mw >= 0.0) {
        rep.feasible = true;
        rep.code = InfeasibilityCode::kNone;
        msg << "feasible: m0*P_C=" << rep.max_gain_mw << " mW >= Gamma=" << rep.gamma_mw
            << " mW";
    } else {
        rep.feasible = false;
        rep.code = InfeasibilityCode::kGainUnreachable;
        msg << "infeasible: Gamma=" << rep.gamma_mw << " mW exceeds the attainable gain bound m0*P_C="
            << rep.max_gain_mw << " mW";
    }
    rep.message = msg.str();
    return rep;
}

}  // namespace faisac
