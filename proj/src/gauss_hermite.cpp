#include "kxor/gauss_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kxor {

namespace {

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating the
// first row of the eigenvector matrix (all Golub-Welsch needs).
void tql_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& first) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("gauss_hermite: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double rr = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(rr, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    rr = std::hypot(f, g);
                    e[i + 1] = rr;
                    if (rr == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / rr;
                    c = g / rr;
                    g = d[i + 1] - p;
                    rr = (d[i] - g) * s + 2.0 * c * b;
                    p = s * rr;
                    d[i + 1] = g + p;
                    g = c * rr - b;
                    f = first[i + 1];
                    first[i + 1] = s * first[i] + c * f;
                    first[i] = c * first[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

GaussHermite gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite needs n >= 1");
    // Jacobi matrix of the (monic) Hermite recurrence: zero diagonal,
    // off-diagonal sqrt(j/2)
    std::vector<double> d(n, 0.0), e(n - 1);
    for (int j = 1; j < n; ++j) e[j - 1] = std::sqrt(0.5 * j);
    std::vector<double> first(n, 0.0);
    first[0] = 1.0;
    tql_first_row(d, e, first);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    GaussHermite rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = sqrt_pi * first[idx[i]] * first[idx[i]];
    }
    return rule;
}

}  // namespace kxor
