#include <doctest.h>

#include <random>

#include "faisac/geometry.hpp"
#include "faisac/metrics.hpp"
#include "helpers.hpp"

using namespace faisac;

TEST_CASE("achievable_rate: zero covariance gives zero rate") {
    SystemConfig cfg;
    cfg.N = 3;
    PortSelection sel{{1, 5, 9, 13}};
    const Eigen::MatrixXcd G = response_matrix(sel, cfg);
    const Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(4, 4);
    CHECK(achievable_rate(W, G, 1.0) == 0.0);
}

TEST_CASE("achievable_rate: rank-one determinant lemma case") {
    // Single port, two antennas, W = sigma2: rate = log2(1 + N).
    SystemConfig cfg;
    cfg.N = 2;
    PortSelection sel{{11}};
    const Eigen::MatrixXcd G = response_matrix(sel, cfg);
    const double sigma2 = 0.37;
    Eigen::MatrixXcd W(1, 1);
    W(0, 0) = sigma2;
    CHECK(achievable_rate(W, G, sigma2) ==
          doctest::Approx(1.584962500721156).epsilon(1e-12));
}

TEST_CASE("achievable_rate matches the cofactor-expansion oracle") {
    std::mt19937 rng(10);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        SystemConfig cfg;
        cfg.M = 12;
        cfg.N = 1 + static_cast<int>(rng() % 3);
        cfg.theta_rad = -1.3 + 2.6 * uni(rng);
        const int m0 = 1 + static_cast<int>(rng() % 5);
        PortSelection sel{testutil::random_selection(rng, cfg.M, m0)};
        const Eigen::MatrixXcd G = response_matrix(sel, cfg);
        const Eigen::MatrixXcd W = testutil::random_psd(rng, m0, 0.5 + 5.0 * uni(rng));
        const double sigma2 = 0.05 + 2.0 * uni(rng);
        const double got = achievable_rate(W, G, sigma2);
        const double want = testutil::rate_oracle(W, G, sigma2);
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
        CHECK(got >= 0.0);
    }
}

TEST_CASE("achievable_rate input checking") {
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Ones(3, 2);
    CHECK_THROWS_AS(achievable_rate(W, G, 1.0), std::domain_error);
    CHECK_THROWS_AS(achievable_rate(W, Eigen::MatrixXcd::Ones(2, 2), 0.0),
                    std::domain_error);
    // indefinite beyond tolerance
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
    bad(0, 0) = -1.0;
    CHECK_THROWS_AS(achievable_rate(bad, Eigen::MatrixXcd::Identity(2, 2), 1e-6),
                    numeric_error);
}

TEST_CASE("beampattern_gain: identity covariance gives m0") {
    SystemConfig cfg;
    PortSelection sel{{2, 6, 19}};
    const Eigen::VectorXcd a = sensing_steering(sel, cfg);
    CHECK(beampattern_gain(Eigen::MatrixXcd::Identity(3, 3), a) ==
          doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("beampattern_gain: coherently aligned rank-one covariance") {
    SystemConfig cfg;
    PortSelection sel{{1, 4, 9, 12}};
    const Eigen::VectorXcd a = sensing_steering(sel, cfg);
    const double power = 2.7;
    const Eigen::MatrixXcd W = (power / 16.0) * (a * a.adjoint());
    CHECK(beampattern_gain(W, a) == doctest::Approx(power).epsilon(1e-12));
}

TEST_CASE("beampattern_gain matches the double-loop oracle and is linear") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        SystemConfig cfg;
        cfg.M = 20;
        cfg.theta_rad = -1.4 + 2.8 * uni(rng);
        const int m0 = 1 + static_cast<int>(rng() % 6);
        PortSelection sel{testutil::random_selection(rng, cfg.M, m0)};
        const Eigen::VectorXcd a = sensing_steering(sel, cfg);
        const Eigen::MatrixXcd W1 = testutil::random_psd(rng, m0, 1.0 + 3.0 * uni(rng));
        const Eigen::MatrixXcd W2 = testutil::random_psd(rng, m0, 1.0 + 3.0 * uni(rng));

        const double g1 = beampattern_gain(W1, a);
        CHECK(g1 == doctest::Approx(testutil::gain_oracle(W1, a)).epsilon(1e-12));

        const double alpha = uni(rng), beta = uni(rng);
        const double mix = beampattern_gain(alpha * W1 + beta * W2, a);
        CHECK(mix == doctest::Approx(alpha * g1 + beta * beampattern_gain(W2, a))
                         .epsilon(1e-10));

        // PSD quadratic form bounds
        CHECK(g1 >= 0.0);
        CHECK(g1 <= m0 * W1.trace().real() * (1.0 + 1e-12));
    }
}

TEST_CASE("rate is monotone and concave along the PSD order") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        SystemConfig cfg;
        cfg.M = 16;
        cfg.N = 1 + static_cast<int>(rng() % 4);
        const int m0 = 1 + static_cast<int>(rng() % 4);
        PortSelection sel{testutil::random_selection(rng, cfg.M, m0)};
        const Eigen::MatrixXcd G = response_matrix(sel, cfg);
        const double sigma2 = 0.1 + uni(rng);
        const Eigen::MatrixXcd W1 = testutil::random_psd(rng, m0, 1.0 + uni(rng));
        const Eigen::MatrixXcd D = testutil::random_psd(rng, m0, uni(rng));
        const Eigen::MatrixXcd W2 = W1 + D;  // W2 - W1 is PSD

        const double r1 = achievable_rate(W1, G, sigma2);
        const double r2 = achievable_rate(W2, G, sigma2);
        CHECK(r2 >= r1 - 1e-10);

        const double mid = achievable_rate(0.5 * (W1 + W2), G, sigma2);
        CHECK(mid >= 0.5 * (r1 + r2) - 1e-10);
    }
}

TEST_CASE("covariance validation") {
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Identity(3, 3);
    CHECK_NOTHROW(validate_covariance(W));

    Eigen::MatrixXcd skew = W;
    skew(0, 1) = std::complex<double>(0.0, 1e-3);
    CHECK_THROWS_AS(validate_covariance(skew), numeric_error);

    Eigen::MatrixXcd indef = W;
    indef(2, 2) = -1.0;
    CHECK_THROWS_AS(validate_covariance(indef), numeric_error);

    CHECK_THROWS_AS(validate_covariance(Eigen::MatrixXcd::Ones(2, 3)), std::domain_error);
}

TEST_CASE("beampattern_gain dimension mismatch") {
    CHECK_THROWS_AS(beampattern_gain(Eigen::MatrixXcd::Identity(3, 3),
                                     Eigen::VectorXcd::Ones(2)),
                    std::domain_error);
}

TEST_CASE("check_feasibility on the reference parameters") {
    SystemConfig cfg;  // defaults
    const FeasibilityReport rep = check_feasibility(cfg);
    CHECK(rep.feasible);
    CHECK(rep.p_c_mw == doctest::Approx(4.988127663727278).epsilon(1e-12));
    CHECK(rep.gamma_mw == doctest::Approx(6.309573444801933).epsilon(1e-12));
    CHECK(rep.max_gain_mw == doctest::Approx(49.88127663727278).epsilon(1e-12));
}

TEST_CASE("check_feasibility boundary cases") {
    SystemConfig cfg;
    cfg.m0 = 1;
    cfg.P_U_dBm = -300.0;  // negligible hover power: P_C ~ P_max
    cfg.P_max_dBm = 0.0;   // 1 mW
    cfg.Gamma_dBm = testutil::mw_as_dbm(2.0);
    const FeasibilityReport gain_block = check_feasibility(cfg);
    CHECK_FALSE(gain_block.feasible);
    CHECK(gain_block.code == InfeasibilityCode::kGainUnreachable);
    CHECK(gain_block.message.find("Gamma") != std::string::npos);

    cfg.Gamma_dBm = -400.0;  // threshold effectively zero
    CHECK(check_feasibility(cfg).feasible);

    cfg.P_U_dBm = cfg.P_max_dBm;  // hover eats the whole budget
    const FeasibilityReport hover = check_feasibility(cfg);
    CHECK_FALSE(hover.feasible);
    CHECK(hover.code == InfeasibilityCode::kHoverExceedsBudget);
}
