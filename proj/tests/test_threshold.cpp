#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "kxor/instance.hpp"
#include "kxor/threshold.hpp"

using namespace kxor;

TEST_CASE("threshold quantities basic identities") {
    SUBCASE("D=2, mu=1 by hand") {
        const ThresholdQuantities q = threshold_quantities(2, 1);
        CHECK(q.g == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(q.delta == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(q.r == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(q.h == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(q.s_sat == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(exact_f(2, 2, 1) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("1 - 2g + 2*delta = 1 - 2r exhaustively for D <= 64") {
        for (int D = 0; D <= 64; ++D) {
            for (int mu = 0; mu <= D; ++mu) {
                const ThresholdQuantities q = threshold_quantities(D, mu);
                CHECK(q.one_minus_2g + 2 * q.delta ==
                      doctest::Approx(1.0 - 2 * q.r).epsilon(1e-13));
                CHECK(q.r <= q.g);
                CHECK(q.g <= 1.0);
                CHECK(q.g - q.r == doctest::Approx(q.delta).epsilon(1e-13));
            }
        }
    }
    SUBCASE("out-of-range mu is rejected") {
        CHECK_THROWS(threshold_quantities(4, 5));
        CHECK_THROWS(threshold_quantities(4, -1));
        CHECK_THROWS(exact_f(3, 4, 5));
        CHECK_THROWS(exact_f(1, 4, 2));
    }
}

TEST_CASE("k=2 closed form F = 1/2 + delta(1 - 2g + delta)") {
    for (int D = 0; D <= 64; ++D) {
        for (int mu = 0; mu <= D; ++mu) {
            const ThresholdQuantities q = threshold_quantities(D, mu);
            const double expected = 0.5 + q.delta * (q.one_minus_2g + q.delta);
            CHECK(std::abs(exact_f(2, D, mu) - expected) <= 1e-15);
        }
    }
}

TEST_CASE("odd-k reflection: two equal global maxima away from the center") {
    for (int D = 1; D <= 30; ++D) {
        double best = -1.0;
        std::vector<int> argmax;
        for (int mu = 0; mu <= D; ++mu) {
            const double f = exact_f(3, D, mu);
            if (f > best + 1e-13) {
                best = f;
                argmax = {mu};
            } else if (std::abs(f - best) <= 1e-13) {
                argmax.push_back(mu);
            }
        }
        if (argmax.size() == 1) {
            // a single optimum can only sit at the symmetric center
            CHECK(2 * argmax[0] == D);
        } else {
            REQUIRE(argmax.size() == 2);
            // the pair is symmetric: mu' = D - mu
            CHECK(argmax[0] + argmax[1] == D);
        }
    }
}

TEST_CASE("optimize_mu matches an explicit scan and breaks ties low") {
    SUBCASE("k=2, D=2 against the 3-point scan") {
        const MuOptimum best = optimize_mu(2, 2);
        double scan_best = -1.0;
        int scan_mu = 0;
        for (int mu = 0; mu <= 2; ++mu) {
            const double f = exact_f(2, 2, mu);
            if (f > scan_best) {
                scan_best = f;
                scan_mu = mu;
            }
        }
        CHECK(best.mu == scan_mu);
        CHECK(best.f == doctest::Approx(scan_best).epsilon(1e-15));
    }
    SUBCASE("odd k reports the smaller of the two symmetric optima") {
        for (int D : {4, 7, 10, 15}) {
            const MuOptimum best = optimize_mu(3, D);
            CHECK(2 * best.mu <= D);
            CHECK(exact_f(3, D, D - best.mu) == doctest::Approx(best.f).epsilon(1e-13));
        }
    }
}

TEST_CASE("large-degree limit constants") {
    const ThresholdLimit k2 = large_d_constant_threshold(2);
    CHECK(std::abs(k2.c - 0.33649) <= 1e-4);
    CHECK(std::abs(k2.alpha - (-0.43845)) <= 1e-4);

    const ThresholdLimit k5 = large_d_constant_threshold(5);
    CHECK(std::abs(k5.c - 0.37008) <= 1e-4);
    CHECK(std::abs(k5.alpha - (-0.70408)) <= 1e-4);

    // |alpha| strictly increasing in k
    double prev = 0.0;
    for (int k = 2; k <= 19; ++k) {
        const ThresholdLimit lim = large_d_constant_threshold(k);
        CHECK(std::abs(lim.alpha) > prev);
        prev = std::abs(lim.alpha);
        // the stationarity condition holds at the solution
        const double a = lim.alpha;
        const double lhs = (k - 1) * std::sqrt(2.0 / M_PI) * std::exp(-2 * a * a);
        const double rhs = 2 * a * std::erf(a * std::sqrt(2.0));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("finite-degree constants converge to the limit") {
    // C_{k,D} = (F_opt - 1/2) sqrt(D) need not be monotone, but it is within
    // 0.01 of C_k by D = 10^4
    for (int k : {2, 3}) {
        const int D = 10000;
        const MuOptimum best = optimize_mu(k, D);
        const double ckd = (best.f - 0.5) * std::sqrt(static_cast<double>(D));
        CHECK(std::abs(ckd - large_d_constant_threshold(k).c) <= 0.01);
    }
}

TEST_CASE("Monte Carlo simulator") {
    SUBCASE("deterministic under seed") {
        const XorInstance inst = generate_regular_triangle_free(2, 3, 14, 4);
        const MonteCarloResult a = monte_carlo_run(inst, 1, 2000, 77);
        const MonteCarloResult b = monte_carlo_run(inst, 1, 2000, 77);
        CHECK(a.mean == b.mean);
        CHECK(a.std_error == b.std_error);
        const MonteCarloResult c = monte_carlo_run(inst, 1, 2000, 78);
        CHECK(a.mean != c.mean);
    }
    SUBCASE("mu = degree means every node flips; even k preserves parity") {
        // every clause's variables all flip, so for k=2 each clause outcome
        // is exactly the initial coin flip: mean within noise of 1/2
        const XorInstance inst = generate_regular_triangle_free(2, 3, 14, 4);
        const MonteCarloResult res = monte_carlo_run(inst, 3, 20000, 5);
        CHECK(std::abs(res.mean - 0.5) <= 4 * res.std_error);
    }
    SUBCASE("agrees with exact_F on regular triangle-free instances") {
        // k=2, D=2: 3-regular girth-5 graph (Petersen-like) via the generator
        const XorInstance inst = generate_regular_triangle_free(2, 3, 20, 11);
        for (int mu = 0; mu <= 2; ++mu) {
            const MonteCarloResult res = monte_carlo_run(inst, mu, 200000, 123);
            CHECK(std::abs(res.mean - exact_f(2, 2, mu)) <= 4 * res.std_error);
        }
    }
    SUBCASE("phantom neighbors simulate higher degree on disjoint clauses") {
        // disjoint k=3 clauses, simulated up to degree D+1 = 5
        const XorInstance inst = generate_regular_triangle_free(3, 1, 12, 2);
        for (int mu : {1, 2, 3}) {
            const MonteCarloResult res = monte_carlo_run(inst, mu, 200000, 321, 5);
            CHECK(std::abs(res.mean - exact_f(3, 4, mu)) <= 4 * res.std_error);
        }
        // refuses a target degree below an actual degree
        CHECK_THROWS(monte_carlo_run(inst, 1, 10, 0, 0));
    }
}
