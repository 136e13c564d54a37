#pragma once

#include <span>
#include <vector>

#include "kxor/instance.hpp"

namespace kxor {

// Depth-1 parameters: phase angle gamma, mixing angle beta.
struct QaoaAngles {
    double gamma = 0.0;
    double beta = 0.0;
};

// Per-clause expectation E1 = <d Z...Z> on a (D+1)-regular triangle-free
// instance; the satisfying fraction is 1/2 + E1.
//
//   E1 = (s/2) * Im[(p + i q c^D)^k]
//
// with s = sin(gamma), c = cos(gamma), p = cos(2 beta), q = sin(2 beta).
double closed_form_regular(int k, int D, QaoaAngles angles);

// Per-clause expectation for a clause whose members have other-degrees
// other_degrees[0..k-1]; reduces to closed_form_regular when all equal.
double closed_form_triangle_free(std::span<const int> other_degrees, QaoaAngles angles);

// Clause-averaged closed-form satisfying fraction for a whole instance.
double closed_form_instance_fraction(const XorInstance& inst, QaoaAngles angles);

struct QaoaOptimum {
    double e1 = 0.0;        // per-clause expectation at the optimum
    double fraction = 0.0;  // 1/2 + e1
    QaoaAngles angles;
};

// Global maximum of closed_form_regular over (gamma, beta) for fixed k, D.
// Dense scan in gamma with an exact inner maximization over beta, then
// golden-section refinement of both.
QaoaOptimum optimize_finite_d(int k, int D);

struct QaoaLargeD {
    double c = 0.0;     // fraction = 1/2 + c/sqrt(D) + o(1/sqrt(D))
    double t = 0.0;     // optimal gamma * sqrt(D)
    double beta = 0.0;  // optimal beta, sin(2 beta) = 1/(t sqrt(k))
};

// Large-degree limit: maximize over t >= 1/sqrt(k)
//   (1/2) t^(1-k) k^(-k/2) Im[(sqrt(t^2 k - 1) + i e^(-t^2/2))^k].
QaoaLargeD large_d_constant(int k);

// The large-D objective itself (log-stabilized), exposed for tests.
double large_d_objective(int k, double t);

// Exact expected satisfying fraction of the depth-1 QAOA by dense
// statevector evolution. Refuses n > cap (memory is 16 bytes * 2^n).
double statevector_expectation(const XorInstance& inst, QaoaAngles angles, int cap = 24);

// Per-clause satisfaction probabilities under the depth-1 QAOA state;
// <d_j Z...Z> = probs[j] - 1/2.
std::vector<double> statevector_clause_probabilities(const XorInstance& inst,
                                                     QaoaAngles angles, int cap = 24);

}  // namespace kxor
