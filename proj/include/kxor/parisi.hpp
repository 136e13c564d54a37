#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kxor {

// Mean-field covariance polynomial xi(s) = sum_p c_p s^p, c_p >= 0.
struct MixedXi {
    std::vector<std::pair<int, double>> terms;  // (p, c_p)

    double xi(double s) const;
    double xi_prime(double s) const;
    double xi_second(double s) const;

    // pure k-spin model: xi(s) = s^k
    static MixedXi pure(int k);
};

// Nondecreasing step function on [0,1): breakpoints 0 = q_0 < ... <
// q_{mu+1} = 1 and one value per interval, m_0 <= ... <= m_mu with m_0 = 0
// permitted.
struct StepOrderParam {
    std::vector<double> breakpoints;
    std::vector<double> values;

    int pieces() const { return static_cast<int>(values.size()) - 1; }
};

struct ParisiSettings {
    int grid = 1601;       // spatial grid points on [-L, L]
    int quad = 201;        // Gauss-Hermite nodes; lower orders under-resolve
                           // near-hard-max levels (large m) and can dip below
                           // the true infimum
    double extent = 0.0;   // 0 = choose L = 4 * sum(a_i) + 8 automatically
    double q_floor = 1e-4; // smallest admissible first breakpoint
};

// Zero-temperature functional Psi_0(0) - B for the given step order
// parameter. Psi runs backward from Psi(x) = |x| through Gaussian
// smoothings of width a_i = sqrt(xi'(q_{i+1}) - xi'(q_i)); levels with
// m_i > 0 use the soft-max rule (1/m) log E[e^{m Psi}] with max-shift
// stabilization. B = (1/2) sum_i m_i \int_{q_i}^{q_{i+1}} t xi''(t) dt in
// closed form.
double evaluate_functional(const MixedXi& xi, const StepOrderParam& op,
                           const ParisiSettings& settings);

// Same computation, returning the grid and every Psi level (boundary last)
// for the invariant checks.
struct ParisiTrace {
    std::vector<double> grid;
    std::vector<std::vector<double>> levels;
    double value = 0.0;
    double penalty = 0.0;
};
ParisiTrace evaluate_functional_trace(const MixedXi& xi, const StepOrderParam& op,
                                      const ParisiSettings& settings);

struct ParisiResult {
    double value = 0.0;
    StepOrderParam minimizer;
    ParisiSettings settings;
    int restarts = 0;
    bool converged = false;
};

// Minimize evaluate_functional over step order parameters with `pieces`
// nonzero pieces: coarse grid seeding, then Nelder-Mead in a reparameterized
// unconstrained space, with random restarts.
ParisiResult minimize_parisi(const MixedXi& xi, int pieces, const ParisiSettings& settings,
                             std::uint64_t seed, int restarts = 3);

// sqrt(2 log 2), the random-energy-model limit bounding P(k) from above.
double parisi_upper_bound_value();

// Optimal satisfying fraction of large sparse Max kXOR:
// 1/2 + (P/2) sqrt(k/D).
double optimal_fraction_kxor(int k, double D, double parisi_value);

struct KsatResult {
    double b = 0.0;  // Parisi value of the supplied mixed model
    double c = 0.0;  // b / 2^k
    ParisiResult inner;
};

// Runs the minimizer on a caller-supplied mixed model for Max kSAT and
// reports (B, C = B/2^k). The fraction converter is 1 - 2^-k + C/sqrt(alpha)
// at clause density alpha.
KsatResult ksat_mode(int k, const MixedXi& xi, int pieces, const ParisiSettings& settings,
                     std::uint64_t seed, int restarts = 3);

double ksat_fraction(int k, double c, double clause_density);

}  // namespace kxor
