#include <doctest.h>

#include <random>
#include <sstream>

#include "faisac/covariance_solver.hpp"
#include "faisac/geometry.hpp"
#include "faisac/metrics.hpp"
#include "helpers.hpp"

using namespace faisac;

namespace {

struct Instance {
    Eigen::MatrixXcd G;
    Eigen::VectorXcd a;
    double sigma2 = 1.0;
};

Instance random_instance(std::mt19937& rng, int max_m0, int max_n) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    SystemConfig cfg;
    cfg.M = 14;
    cfg.N = 1 + static_cast<int>(rng() % max_n);
    cfg.theta_rad = -1.3 + 2.6 * uni(rng);
    const int m0 = 1 + static_cast<int>(rng() % max_m0);
    PortSelection sel{testutil::random_selection(rng, cfg.M, m0)};
    Instance inst;
    inst.G = response_matrix(sel, cfg);
    inst.a = sensing_steering(sel, cfg);
    inst.sigma2 = 0.05 + 2.0 * uni(rng);
    return inst;
}

}  // namespace

TEST_CASE("scalar problem has the analytic optimum") {
    std::mt19937 rng(20);
    for (int n : {1, 2, 4}) {
        SystemConfig cfg;
        cfg.N = n;
        PortSelection sel{{17}};
        const Eigen::MatrixXcd G = response_matrix(sel, cfg);
        const Eigen::VectorXcd a = sensing_steering(sel, cfg);
        const double p_c = 4.988127663727278;
        const double sigma2 = 1e-7;
        const SolverResult res = solve_covariance(G, a, p_c, 1.0, sigma2);
        REQUIRE(res.status == SolverStatus::kOptimal);
        CHECK(res.W(0, 0).real() == doctest::Approx(p_c).epsilon(1e-10));
        CHECK(res.objective_bits ==
              doctest::Approx(std::log2(1.0 + n * p_c / sigma2)).epsilon(1e-10));
    }
}

TEST_CASE("gain-free problem matches the water-filling oracle") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = random_instance(rng, 8, 4);
        const double p_c = 0.5 + 9.5 * uni(rng);
        const SolverResult res = solve_covariance(inst.G, inst.a, p_c, 0.0, inst.sigma2);
        REQUIRE(res.status == SolverStatus::kOptimal);
        const WaterfillingResult wf = waterfilling_oracle(inst.G, p_c, inst.sigma2);
        const double wf_rate = achievable_rate(wf.W, inst.G, inst.sigma2);
        CHECK(res.objective_bits ==
              doctest::Approx(wf_rate).epsilon(1e-6));
    }
}

TEST_CASE("waterfilling_oracle closed-form cases") {
    // single mode, unit gain: everything on it
    Eigen::MatrixXcd G1(1, 1);
    G1(0, 0) = 1.0;
    const WaterfillingResult one = waterfilling_oracle(G1, 1.0, 1.0);
    CHECK(one.W(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(achievable_rate(one.W, G1, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    // two equal modes: symmetric split
    const Eigen::MatrixXcd G2 = Eigen::MatrixXcd::Identity(2, 2);
    const WaterfillingResult two = waterfilling_oracle(G2, 3.0, 0.7);
    CHECK(two.allocations(0) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(two.allocations(1) == doctest::Approx(1.5).epsilon(1e-10));

    // 1 vs 1e-6 eigenvalue at small power: weak mode stays dry
    Eigen::MatrixXcd G3 = Eigen::MatrixXcd::Zero(2, 2);
    G3(0, 0) = 1.0;
    G3(1, 1) = 1e-3;
    const WaterfillingResult skew = waterfilling_oracle(G3, 0.5, 1.0);
    CHECK(skew.allocations(0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(skew.allocations(1) == 0.0);
    CHECK(skew.water_level < 1e6);

    // all-zero channel: degenerate zero matrix
    const WaterfillingResult dead = waterfilling_oracle(Eigen::MatrixXcd::Zero(3, 2), 1.0, 1.0);
    CHECK(dead.degenerate);
    CHECK(dead.W.norm() == 0.0);
}

TEST_CASE("marginal feasibility returns the aligned rank-one matrix") {
    SystemConfig cfg;
    PortSelection sel{{3, 8, 21}};
    const Eigen::MatrixXcd G = response_matrix(sel, cfg);
    const Eigen::VectorXcd a = sensing_steering(sel, cfg);
    const double p_c = 2.5;
    const SolverResult res = solve_covariance(G, a, p_c, 3.0 * p_c, 0.3);
    REQUIRE(res.status == SolverStatus::kOptimal);
    CHECK(res.trace_active);
    CHECK(res.gain_active);
    const Eigen::MatrixXcd want = (p_c / 3.0) * (a * a.adjoint());
    CHECK((res.W - want).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("infeasible inputs give the INFEASIBLE status, not an exception") {
    SystemConfig cfg;
    PortSelection sel{{3, 8}};
    const Eigen::MatrixXcd G = response_matrix(sel, cfg);
    const Eigen::VectorXcd a = sensing_steering(sel, cfg);
    CHECK(solve_covariance(G, a, 1.0, 2.0 * (1.0 + 1e-3), 1.0).status ==
          SolverStatus::kInfeasible);
    CHECK(solve_covariance(G, a, -1.0, 0.0, 1.0).status == SolverStatus::kInfeasible);
    CHECK(solve_covariance(G, a, 0.0, 0.0, 1.0).status == SolverStatus::kInfeasible);
}

TEST_CASE("solution satisfies constraints and beats random feasible samples") {
    std::mt19937 rng(22);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        Instance inst = random_instance(rng, 3, 3);
        const int m0 = static_cast<int>(inst.G.rows());
        const double p_c = 1.0 + 4.0 * uni(rng);
        const double gamma = (0.55 + 0.4 * uni(rng)) * m0 * p_c;  // likely binding
        const SolverResult res = solve_covariance(inst.G, inst.a, p_c, gamma, inst.sigma2);
        REQUIRE(res.status == SolverStatus::kOptimal);
        CHECK(res.W.trace().real() <= p_c * (1.0 + 1e-8));
        CHECK(beampattern_gain(res.W, inst.a) >= gamma * (1.0 - 1e-8));
        validate_covariance(res.W);

        const Eigen::MatrixXcd aligned = (inst.a * inst.a.adjoint()) / m0;  // trace 1
        double best_sample = 0.0;
        for (int s = 0; s < 2000; ++s) {
            Eigen::MatrixXcd R;
            if (s % 2 == 0) {
                Eigen::VectorXcd v(m0);
                for (int i = 0; i < m0; ++i) v(i) = testutil::Cplx(gauss(rng), gauss(rng));
                R = v * v.adjoint();
            } else {
                R = testutil::random_psd(rng, m0, 1.0);
            }
            R *= 1.0 / R.trace().real();
            const double g_r = beampattern_gain(R, inst.a) * p_c;
            const double rho_min =
                std::clamp((gamma - g_r) / (m0 * p_c - g_r), 0.0, 1.0);
            const double rho = rho_min + (1.0 - rho_min) * uni(rng);
            const Eigen::MatrixXcd W = p_c * (rho * aligned + (1.0 - rho) * R);
            best_sample = std::max(best_sample, achievable_rate(W, inst.G, inst.sigma2));
        }
        CHECK(res.objective_bits >=
              best_sample - 1e-3 * std::max(1.0, std::abs(best_sample)));
    }
}

TEST_CASE("objective never exceeds the gain-free water-filling value") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst = random_instance(rng, 5, 4);
        const int m0 = static_cast<int>(inst.G.rows());
        const double p_c = 0.5 + 5.0 * uni(rng);
        const double gamma = uni(rng) * 0.9 * m0 * p_c;
        const SolverResult res = solve_covariance(inst.G, inst.a, p_c, gamma, inst.sigma2);
        REQUIRE(res.status == SolverStatus::kOptimal);
        const double wf_rate = achievable_rate(waterfilling_oracle(inst.G, p_c, inst.sigma2).W,
                                               inst.G, inst.sigma2);
        CHECK(res.objective_bits <= wf_rate + 1e-8 * std::max(1.0, wf_rate));

        // complementary slackness: a slack gain constraint means the
        // water-filling point was optimal all along
        const double gain = beampattern_gain(res.W, inst.a);
        if (gain > gamma * (1.0 + 1e-5) + 1e-9) {
            CHECK(res.objective_bits == doctest::Approx(wf_rate).epsilon(1e-5));
        }
    }
}

TEST_CASE("objective is monotone in the power budget") {
    std::mt19937 rng(24);
    Instance inst = random_instance(rng, 4, 3);
    const int m0 = static_cast<int>(inst.G.rows());
    double prev = -1.0;
    for (double p_c : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double gamma = 0.4 * m0 * p_c;
        const SolverResult res = solve_covariance(inst.G, inst.a, p_c, gamma, inst.sigma2);
        REQUIRE(res.status == SolverStatus::kOptimal);
        CHECK(res.objective_bits >= prev - 1e-9);
        prev = res.objective_bits;
    }
}

TEST_CASE("scale equivariance of powers and noise") {
    std::mt19937 rng(25);
    Instance inst = random_instance(rng, 4, 3);
    const int m0 = static_cast<int>(inst.G.rows());
    const double p_c = 2.0, gamma = 0.6 * m0 * p_c;
    const SolverResult base = solve_covariance(inst.G, inst.a, p_c, gamma, inst.sigma2);
    const double c = 137.0;
    const SolverResult scaled =
        solve_covariance(inst.G, inst.a, c * p_c, c * gamma, c * inst.sigma2);
    REQUIRE(base.status == SolverStatus::kOptimal);
    REQUIRE(scaled.status == SolverStatus::kOptimal);
    CHECK(scaled.objective_bits == doctest::Approx(base.objective_bits).epsilon(1e-8));
    CHECK((scaled.W - c * base.W).cwiseAbs().maxCoeff() <=
          1e-8 * c * base.W.cwiseAbs().maxCoeff());
}

TEST_CASE("solver is deterministic") {
    std::mt19937 rng(26);
    Instance inst = random_instance(rng, 5, 4);
    const int m0 = static_cast<int>(inst.G.rows());
    const SolverResult r1 = solve_covariance(inst.G, inst.a, 3.0, 0.7 * m0 * 3.0, inst.sigma2);
    const SolverResult r2 = solve_covariance(inst.G, inst.a, 3.0, 0.7 * m0 * 3.0, inst.sigma2);
    CHECK(r1.W == r2.W);  // bit-identical
    CHECK(r1.objective_bits == r2.objective_bits);
    CHECK(r1.newton_iters == r2.newton_iters);
}

TEST_CASE("iteration cap reports MAX_ITERS with the best iterate") {
    std::mt19937 rng(27);
    Instance inst = random_instance(rng, 4, 3);
    SolverOptions opts;
    opts.max_iters = 3;
    const SolverResult res = solve_covariance(inst.G, inst.a, 2.0, 0.0, inst.sigma2, opts);
    CHECK(res.status == SolverStatus::kMaxIters);
    CHECK(res.kkt_residual > 0.0);
    CHECK(res.W.trace().real() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("diagnostic stream receives central-path lines") {
    std::mt19937 rng(28);
    Instance inst = random_instance(rng, 3, 2);
    std::ostringstream diag;
    SolverOptions opts;
    opts.diag = &diag;
    solve_covariance(inst.G, inst.a, 1.5, 0.0, inst.sigma2, opts);
    CHECK(diag.str().find("barrier t=") != std::string::npos);
}

TEST_CASE("solver rejects malformed inputs") {
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Ones(3, 2);
    Eigen::VectorXcd a = Eigen::VectorXcd::Ones(2);  // wrong length
    CHECK_THROWS_AS(solve_covariance(G, a, 1.0, 0.0, 1.0), std::domain_error);
    SolverOptions bad;
    bad.barrier_decrease = 1.5;
    CHECK_THROWS_AS(solve_covariance(G, Eigen::VectorXcd::Ones(3), 1.0, 0.0, 1.0, bad),
                    std::domain_error);
}
