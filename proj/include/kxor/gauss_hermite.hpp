#pragma once

#include <vector>

namespace kxor {

// Gauss-Hermite rule for integrals against e^{-x^2}. For a standard normal
// expectation E[f(z)] use sum_j w_j f(sqrt(2) x_j) / sqrt(pi).
struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussHermite gauss_hermite(int n);

}  // namespace kxor
