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

#include "faisac/covariance_solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "faisac/metrics.hpp"

namespace faisac {

const char* to_string(SolverStatus s) {
    switch (s) {
        case SolverStatus::kOptimal: return "OPTIMAL";
        case SolverStatus::kInfeasible: return "INFEASIBLE";
        case SolverStatus::kMaxIters: return "MAX_ITERS";
    }
    return "?";
}

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kCenterTolLoose = 1e-4;   // Newton decrement^2 for path-following steps
constexpr double kCenterTolFinal = 1e-8;   // Newton decrement^2 at the last barrier stage
constexpr double kMarginalRelTol = 1e-12;  // gamma == m0*p_c detection
constexpr int kMaxCenteringSteps = 60;

// Orthonormal basis of k x k Hermitian matrices under <X,Y> = Re tr(XY):
// diagonal units, then (E_ij + E_ji)/sqrt2 and i(E_ij - E_ji)/sqrt2.
std::vector<Eigen::MatrixXcd> hermitian_basis(int k) {
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(k, k);
        E(i, i) = 1.0;
        basis.push_back(std::move(E));
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            Eigen::MatrixXcd Er = Eigen::MatrixXcd::Zero(k, k);
            Er(i, j) = s;
            Er(j, i) = s;
            basis.push_back(std::move(Er));
            Eigen::MatrixXcd Ei = Eigen::MatrixXcd::Zero(k, k);
            Ei(i, j) = std::complex<double>(0.0, s);
            Ei(j, i) = std::complex<double>(0.0, -s);
            basis.push_back(std::move(Ei));
        }
    }
    return basis;
}

double re_trace_product(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    return (A * B).trace().real();
}

// Barrier domain for one centering problem.
struct BarrierProblem {
    const Eigen::MatrixXcd& Gt;  // reduced response, k x N
    const Eigen::VectorXcd& at;  // reduced steering, k
    double p_c;
    double gamma;
    double sigma2;
    bool use_gain;

    bool in_domain(const Eigen::MatrixXcd& W) const {
        if (!(p_c - W.trace().real() > 0.0)) return false;
        if (use_gain && !(std::real((at.adjoint() * W * at).value()) - gamma > 0.0)) {
            return false;
        }
        Eigen::LLT<Eigen::MatrixXcd> llt(W);
        return llt.info() == Eigen::Success;
    }
};

// Solves the (negated) Newton system (-H) d = g for the concave barrier
// objective; falls back to LDLT and then to a diagonal ridge when the
// factorization is defeated by conditioning.
bool solve_newton_system(const Eigen::MatrixXd& neg_hessian, const Eigen::VectorXd& grad,
                         Eigen::VectorXd& direction) {
    Eigen::LLT<Eigen::MatrixXd> llt(neg_hessian);
    if (llt.info() == Eigen::Success) {
        direction = llt.solve(grad);
        return direction.allFinite();
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(neg_hessian);
    if (ldlt.info() == Eigen::Success) {
        direction = ldlt.solve(grad);
        if (direction.allFinite()) return true;
    }
    const double scale = neg_hessian.diagonal().cwiseAbs().maxCoeff();
    double ridge = 1e-14 * std::max(scale, 1.0);
    for (int attempt = 0; attempt < 8; ++attempt, ridge *= 100.0) {
        Eigen::MatrixXd damped = neg_hessian;
        damped.diagonal().array() += ridge;
        Eigen::LLT<Eigen::MatrixXd> retry(damped);
        if (retry.info() == Eigen::Success) {
            direction = retry.solve(grad);
            if (direction.allFinite()) return true;
        }
    }
    return false;
}

}  // namespace

SolverResult solve_covariance(const Eigen::MatrixXcd& G, const Eigen::VectorXcd& a,
                              double p_c_mw, double gamma_mw, double sigma2_mw,
                              const SolverOptions& opts) {
    const Eigen::Index m0 = G.rows();
    if (m0 < 1 || G.cols() < 1) throw std::domain_error("solve_covariance: empty response matrix");
    if (a.size() != m0) {
        throw std::domain_error("solve_covariance: steering length does not match response rows");
    }
    if (!(sigma2_mw > 0.0)) throw std::domain_error("solve_covariance: sigma2 must be > 0");
    if (!(opts.kkt_tol > 0.0) || !(opts.barrier_decrease > 0.0) || opts.barrier_decrease >= 1.0 ||
        !(opts.min_step > 0.0) || opts.max_iters < 1) {
        throw std::domain_error("solve_covariance: invalid solver options");
    }

    SolverResult result;
    result.W = Eigen::MatrixXcd::Zero(m0, m0);

    if (!(p_c_mw > 0.0)) {
        result.status = SolverStatus::kInfeasible;
        return result;
    }

    const double gain_cap = static_cast<double>(m0) * p_c_mw;  // a^H W a <= m0 tr(W)
    const double marginal_scale = std::max(1.0, gain_cap);
    if (gamma_mw - gain_cap > kMarginalRelTol * marginal_scale) {
        result.status = SolverStatus::kInfeasible;
        return result;
    }
    const double sigma2 = sigma2_mw;
    if (std::abs(gain_cap - gamma_mw) <= kMarginalRelTol * marginal_scale) {
        // Unique feasible point: fully aligned rank-one covariance.
        result.W = (p_c_mw / static_cast<double>(m0)) * (a * a.adjoint());
        result.W = hermitized(result.W);
        result.objective_bits = achievable_rate(result.W, G, sigma2);
        result.status = SolverStatus::kOptimal;
        result.trace_active = true;
        result.gain_active = true;
        return result;
    }

    // The objective depends on W through Gt^H W Gt, tr W and a^H W a only,
    // and projecting W onto span(G, a) preserves all three (trace can only
    // shrink), so an optimal W lives on that subspace. Solve there.
    Eigen::MatrixXcd span(m0, G.cols() + 1);
    span.leftCols(G.cols()) = G;
    span.col(G.cols()) = a;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(span);
    qr.setThreshold(1e-12);
    const Eigen::Index k = std::max<Eigen::Index>(1, qr.rank());
    const Eigen::MatrixXcd Q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(m0, k);
    const Eigen::MatrixXcd Gt = Q.adjoint() * G;
    const Eigen::VectorXcd at = Q.adjoint() * a;

    const bool use_gain = gamma_mw > 0.0;
    BarrierProblem problem{Gt, at, p_c_mw, gamma_mw, sigma2, use_gain};

    // Strictly interior start: a convex blend of the gain-aligned rank-one
    // direction and a scaled identity. With beta = gamma/(m0 p_c) < 1 this
    // lands strictly inside both scalar constraints and the PSD cone.
    const double beta = std::max(0.0, gamma_mw / gain_cap);
    const double m0d = static_cast<double>(m0);
    Eigen::MatrixXcd W = (p_c_mw * (beta + 1.0) / 2.0) * (at * at.adjoint()) / m0d +
                         (p_c_mw * (1.0 - beta) / (4.0 * m0d)) *
                             Eigen::MatrixXcd::Identity(k, k);
    W = 0.5 * (W + W.adjoint()).eval();

    const auto basis = hermitian_basis(static_cast<int>(k));
    const int n = static_cast<int>(basis.size());
    const double mbar = static_cast<double>(k) + 1.0 + (use_gain ? 1.0 : 0.0);

    double t = 1.0;
    int iters = 0;
    bool stalled = false;
    const double gap_target_nats = opts.kkt_tol * kLn2;
    const Eigen::Index N = Gt.cols();

    for (int outer = 0; outer < 200; ++outer) {
        // Loose centering while following the path, tight at the stage
        // whose iterate is returned.
        const double center_tol =
            (mbar / t <= gap_target_nats) ? kCenterTolFinal : kCenterTolLoose;
        int centering_steps = 0;
        for (;;) {
            if (iters >= opts.max_iters || centering_steps >= kMaxCenteringSteps) break;
            ++iters;
            ++centering_steps;

            const double s_p = p_c_mw - W.trace().real();
            const double s_g = use_gain ? std::real((at.adjoint() * W * at).value()) - gamma_mw : 1.0;

            Eigen::LLT<Eigen::MatrixXcd> lltW(W);
            Eigen::MatrixXcd Winv = lltW.solve(Eigen::MatrixXcd::Identity(k, k));
            Winv = 0.5 * (Winv + Winv.adjoint()).eval();

            Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(N, N) +
                                 (Gt.adjoint() * W * Gt / sigma2).eval();
            M = 0.5 * (M + M.adjoint()).eval();
            Eigen::LLT<Eigen::MatrixXcd> lltM(M);
            Eigen::MatrixXcd S = Gt * lltM.solve(Gt.adjoint()) / sigma2;
            S = 0.5 * (S + S.adjoint()).eval();

            Eigen::MatrixXcd grad_mat = t * S + Winv -
                                        Eigen::MatrixXcd::Identity(k, k) / s_p;
            if (use_gain) grad_mat += (at * at.adjoint()) / s_g;

            Eigen::VectorXd g(n);
            Eigen::VectorXd tr_e(n), a_e_a(n);
            std::vector<Eigen::MatrixXcd> s_side(n), w_side(n);
            for (int i = 0; i < n; ++i) {
                g(i) = re_trace_product(grad_mat, basis[i]);
                s_side[i] = S * basis[i] * S;
                w_side[i] = Winv * basis[i] * Winv;
                tr_e(i) = basis[i].trace().real();
                a_e_a(i) = std::real((at.adjoint() * basis[i] * at).value());
            }
            Eigen::MatrixXd neg_h(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = i; j < n; ++j) {
                    double h = t * re_trace_product(s_side[i], basis[j]) +
                               re_trace_product(w_side[i], basis[j]) +
                               tr_e(i) * tr_e(j) / (s_p * s_p);
                    if (use_gain) h += a_e_a(i) * a_e_a(j) / (s_g * s_g);
                    neg_h(i, j) = h;
                    neg_h(j, i) = h;
                }
            }

            Eigen::VectorXd d;
            if (!solve_newton_system(neg_h, g, d)) {
                stalled = true;
                break;
            }
            const double lambda2 = g.dot(d);
            if (!(lambda2 > center_tol)) break;  // centered at this t

            Eigen::MatrixXcd step = Eigen::MatrixXcd::Zero(k, k);
            for (int i = 0; i < n; ++i) step += d(i) * basis[i];
            step = 0.5 * (step + step.adjoint()).eval();

            // Damped Newton for a self-concordant objective: the step
            // 1/(1+lambda) is guaranteed to stay interior and make fixed
            // progress, and the full step applies inside the quadratic
            // phase. No objective-value line search: at large t the
            // evaluation noise of t*lndet exceeds the genuine per-step
            // improvement near the path and would defeat it.
            double alpha = (lambda2 > 0.0625) ? 1.0 / (1.0 + std::sqrt(lambda2)) : 1.0;
            bool accepted = false;
            while (alpha >= opts.min_step) {
                Eigen::MatrixXcd cand = W + alpha * step;
                cand = 0.5 * (cand + cand.adjoint()).eval();
                if (problem.in_domain(cand)) {
                    W = cand;
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) {
                stalled = true;
                break;
            }
        }

        const double gap_nats = mbar / t;
        if (opts.diag) {
            (*opts.diag) << "barrier t=" << t << " steps=" << centering_steps
                         << " gap_bits=" << gap_nats / kLn2 << " iters=" << iters << '\n';
        }
        if (gap_nats <= gap_target_nats || stalled || iters >= opts.max_iters || t > 1e16) {
            break;
        }
        t /= opts.barrier_decrease;
    }

    // The rate is strictly increasing along W -> c W for c >= 1, and both
    // constraints survive the rescaling, so land exactly on the power
    // budget.
    const double trace_now = W.trace().real();
    if (trace_now > 0.0) W *= p_c_mw / trace_now;

    Eigen::MatrixXcd W_full = Q * W * Q.adjoint();
    result.W = hermitized(W_full);
    result.objective_bits = achievable_rate(result.W, G, sigma2);
    const double gain = beampattern_gain(result.W, a);
    const double final_gap_bits = mbar / (t * kLn2);
    result.kkt_residual = final_gap_bits;
    result.newton_iters = iters;
    result.trace_active = true;  // rescaled onto the budget above
    result.gain_active = use_gain && gain <= gamma_mw * (1.0 + 1e-6);
    const bool reached = final_gap_bits <= opts.kkt_tol;
    result.status = reached ? SolverStatus::kOptimal : SolverStatus::kMaxIters;
    return result;
}

WaterfillingResult waterfilling_oracle(const Eigen::MatrixXcd& G, double p_c_mw,
                                       double sigma2_mw) {
    if (!(p_c_mw > 0.0)) throw std::domain_error("waterfilling_oracle: power must be > 0");
    if (!(sigma2_mw > 0.0)) throw std::domain_error("waterfilling_oracle: sigma2 must be > 0");
    const Eigen::Index m0 = G.rows();

    WaterfillingResult res;
    res.W = Eigen::MatrixXcd::Zero(m0, m0);
    res.allocations = Eigen::VectorXd::Zero(m0);

    Eigen::MatrixXcd gram = hermitized(G * G.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const Eigen::VectorXd& lambda = es.eigenvalues();  // ascending
    const double lambda_max = lambda(m0 - 1);
    if (!(lambda_max > 0.0)) {
        res.degenerate = true;
        return res;
    }
    const double active_tol = lambda_max * 1e-12;

    double lambda_min_active = lambda_max;
    for (Eigen::Index i = 0; i < m0; ++i) {
        if (lambda(i) > active_tol) lambda_min_active = std::min(lambda_min_active, lambda(i));
    }

    auto allocated = [&](double level, Eigen::VectorXd* out) {
        double total = 0.0;
        for (Eigen::Index i = 0; i < m0; ++i) {
            double p = 0.0;
            if (lambda(i) > active_tol) p = std::max(0.0, level - sigma2_mw / lambda(i));
            if (out) (*out)(i) = p;
            total += p;
        }
        return total;
    };

    double lo = 0.0;
    double hi = p_c_mw + sigma2_mw / lambda_min_active;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (allocated(mid, nullptr) > p_c_mw) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    res.water_level = 0.5 * (lo + hi);
    Eigen::VectorXd p(m0);
    const double total = allocated(res.water_level, &p);
    if (total > 0.0) p *= p_c_mw / total;

    for (Eigen::Index i = 0; i < m0; ++i) {
        if (p(i) > 0.0) {
            res.W += p(i) * (es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint());
        }
        res.allocations(m0 - 1 - i) = p(i);  // descending-mode order
    }
    res.W = hermitized(res.W);
    return res;
}

}  // namespace faisac
