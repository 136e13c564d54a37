#pragma once

#include <cstdint>
#include <optional>

#include "kxor/instance.hpp"

namespace kxor {

// Flip probabilities of the one-round threshold algorithm with parameter mu
// on a node with D other clauses, each satisfied i.i.d. with probability 1/2:
//   g     = Pr[flip | clause UNSAT] = 2^-D sum_{i<=mu}   C(D,i)
//   r     = Pr[flip | clause SAT]   = 2^-D sum_{i<=mu-1} C(D,i)
//   delta = g - r = 2^-D C(D,mu)
// s_sat is 1 - r (renamed to avoid colliding with sin(gamma) elsewhere).
struct ThresholdQuantities {
    double g = 0.0;
    double h = 0.0;  // 1 - g
    double r = 0.0;
    double s_sat = 0.0;  // 1 - r
    double delta = 0.0;
    double one_minus_2g = 0.0;  // computed without cancellation
};

ThresholdQuantities threshold_quantities(int D, int mu);

// Exact chance a clause is satisfied after one synchronous flip round on a
// (D+1)-regular triangle-free instance:
//   F = 1/2 + ((1 - 2g + 2 delta)^k - (1 - 2g)^k) / 4.
// Binomial sums run in long double, good for D up to ~16000.
double exact_f(int k, int D, int mu);

struct MuOptimum {
    int mu = 0;
    double f = 0.0;
};

// Exhaustive argmax of exact_f over mu in {0..D}; ties broken toward the
// smaller mu (odd k has two symmetric optima).
MuOptimum optimize_mu(int k, int D);

struct ThresholdLimit {
    double c = 0.0;      // F = 1/2 + c/sqrt(D) as D -> infinity
    double alpha = 0.0;  // optimal scaled threshold, mu = D/2 + alpha sqrt(D)
};

// Solves (k-1) sqrt(2/pi) e^(-2 alpha^2) = 2 alpha erf(alpha sqrt(2)) by
// bracketed bisection on alpha in [-3, 0), then
//   C_k = (k/2) sqrt(2/pi) e^(-2 alpha^2) erf(-alpha sqrt(2))^(k-1).
ThresholdLimit large_d_constant_threshold(int k);

struct MonteCarloResult {
    double mean = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

// Empirical satisfying fraction after one synchronous flip round over
// independent uniform initializations. Each node counts satisfied clauses
// among ALL of its clauses and flips iff the count is at most mu.
// If simulate_to_degree is set, nodes with fewer clauses than that degree
// draw the missing neighbor clauses as fair coins. Deterministic given seed.
MonteCarloResult monte_carlo_run(const XorInstance& inst, int mu, long trials,
                                 std::uint64_t seed,
                                 std::optional<int> simulate_to_degree = std::nullopt);

}  // namespace kxor
