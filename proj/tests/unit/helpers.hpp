// Shared generators and independent oracles for the unit tests. The
// oracles deliberately avoid the library's evaluation paths: plain
// cofactor expansion for determinants, elementwise double loops for
// quadratic forms, long-double arithmetic for path lengths.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "faisac/types.hpp"

namespace testutil {

using Cplx = std::complex<double>;

inline Eigen::MatrixXcd random_psd(std::mt19937& rng, int n, double trace_target) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd B(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) B(i, j) = Cplx(gauss(rng), gauss(rng));
    }
    Eigen::MatrixXcd W = B * B.adjoint();
    const double tr = W.trace().real();
    if (tr > 0.0) W *= trace_target / tr;
    return 0.5 * (W + W.adjoint()).eval();
}

inline std::vector<int> random_selection(std::mt19937& rng, int M, int m0) {
    std::vector<int> all(static_cast<std::size_t>(M));
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> sel(all.begin(), all.begin() + m0);
    std::sort(sel.begin(), sel.end());
    return sel;
}

// Determinant by cofactor expansion, n <= 3.
inline Cplx cofactor_det(const Eigen::MatrixXcd& A) {
    const Eigen::Index n = A.rows();
    if (n == 1) return A(0, 0);
    if (n == 2) return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    if (n == 3) {
        return A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
               A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
               A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
    }
    throw std::logic_error("cofactor_det: n must be <= 3");
}

// log2 det(I + G^H W G / sigma2) via explicit products and cofactor
// expansion; valid for N <= 3.
inline double rate_oracle(const Eigen::MatrixXcd& W, const Eigen::MatrixXcd& G,
                          double sigma2) {
    const Eigen::Index m0 = G.rows(), N = G.cols();
    Eigen::MatrixXcd arg = Eigen::MatrixXcd::Identity(N, N);
    for (Eigen::Index p = 0; p < N; ++p) {
        for (Eigen::Index q = 0; q < N; ++q) {
            Cplx acc(0.0, 0.0);
            for (Eigen::Index i = 0; i < m0; ++i) {
                for (Eigen::Index j = 0; j < m0; ++j) {
                    acc += std::conj(G(i, p)) * W(i, j) * G(j, q);
                }
            }
            arg(p, q) += acc / sigma2;
        }
    }
    return std::log2(std::abs(cofactor_det(arg)));
}

// a^H W a by the naive double loop.
inline double gain_oracle(const Eigen::MatrixXcd& W, const Eigen::VectorXcd& a) {
    Cplx acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < a.size(); ++j) {
            acc += std::conj(a(i)) * W(i, j) * a(j);
        }
    }
    return acc.real();
}

// Path-length difference in extended precision via the textbook formula.
inline double path_difference_oracle(double y_m, double y_n, double L, double H) {
    const long double d = static_cast<long double>(y_m) - static_cast<long double>(y_n);
    const long double a = sqrtl(static_cast<long double>(L) * L +
                                (static_cast<long double>(H) + d) *
                                    (static_cast<long double>(H) + d));
    const long double b =
        sqrtl(static_cast<long double>(L) * L + static_cast<long double>(H) * H);
    return static_cast<double>(a - b);
}

// dBm value whose linear power equals the given mW (for building configs
// with exact linear targets).
inline double mw_as_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace testutil
