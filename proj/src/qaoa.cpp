#include "kxor/qaoa.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "kxor/optimize.hpp"

namespace kxor {

double closed_form_regular(int k, int D, QaoaAngles angles) {
    if (k < 2 || D < 0) throw std::invalid_argument("closed_form_regular needs k >= 2, D >= 0");
    const double s = std::sin(angles.gamma);
    const double c = std::cos(angles.gamma);
    const double p = std::cos(2.0 * angles.beta);
    const double q = std::sin(2.0 * angles.beta);
    const std::complex<double> base(p, q * std::pow(c, D));
    return 0.5 * s * std::imag(std::pow(base, k));
}

double closed_form_triangle_free(std::span<const int> other_degrees, QaoaAngles angles) {
    const int k = static_cast<int>(other_degrees.size());
    if (k < 2 || k > 26) throw std::invalid_argument("degree vector length must be in [2, 26]");
    for (int d : other_degrees)
        if (d < 0) throw std::invalid_argument("other-degrees must be nonnegative");
    const double s = std::sin(angles.gamma);
    const double c = std::cos(angles.gamma);
    const double p = std::cos(2.0 * angles.beta);
    const double q = std::sin(2.0 * angles.beta);

    // Sum over odd-size member subsets I: (-1)^((|I|-1)/2) q^|I| p^(k-|I|)
    // c^(sum of D_i over I).
    double total = 0.0;
    for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
        const int j = std::popcount(subset);
        if ((j & 1) == 0) continue;
        int dsum = 0;
        for (int i = 0; i < k; ++i)
            if (subset & (1u << i)) dsum += other_degrees[i];
        const double sign = ((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        total += sign * std::pow(q, j) * std::pow(p, k - j) * std::pow(c, dsum);
    }
    return 0.5 * s * total;
}

double closed_form_instance_fraction(const XorInstance& inst, QaoaAngles angles) {
    if (inst.clauses.empty()) throw std::invalid_argument("instance has no clauses");
    const std::vector<int> deg = variable_degrees(inst);
    double sum = 0.0;
    for (int ci = 0; ci < inst.num_clauses(); ++ci) {
        const std::vector<int> other = clause_other_degrees(inst, deg, ci);
        sum += closed_form_triangle_free(other, angles);
    }
    return 0.5 + sum / inst.num_clauses();
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// max over beta of E1(k, D, gamma, beta) at fixed gamma
double profile_over_beta(int k, int D, double gamma, double* best_beta = nullptr) {
    auto f = [&](double beta) { return closed_form_regular(k, D, {gamma, beta}); };
    ScanMax m = scan_then_refine_max(f, 1e-9, kHalfPi - 1e-9, 121, 1e-13);
    if (best_beta) *best_beta = m.x;
    return m.value;
}

}  // namespace

QaoaOptimum optimize_finite_d(int k, int D) {
    auto profile = [&](double gamma) { return profile_over_beta(k, D, gamma); };
    ScanMax m = scan_then_refine_max(profile, 1e-9, kHalfPi - 1e-9, 241, 1e-11);
    QaoaOptimum opt;
    opt.angles.gamma = m.x;
    opt.e1 = profile_over_beta(k, D, m.x, &opt.angles.beta);
    opt.fraction = 0.5 + opt.e1;
    return opt;
}

double large_d_objective(int k, double t) {
    const double tk = t * t * k;
    if (tk < 1.0) return -1.0;
    // base = sqrt(t^2 k - 1) + i e^(-t^2/2); value = 0.5 t^(1-k) k^(-k/2)
    // |base|^k sin(k arg), evaluated in logs so large k does not overflow.
    const double re = std::sqrt(tk - 1.0);
    const double im = std::exp(-0.5 * t * t);
    const double log_mag = 0.5 * k * std::log(re * re + im * im) + (1.0 - k) * std::log(t) -
                           0.5 * k * std::log(static_cast<double>(k));
    const double theta = std::atan2(im, re);
    return 0.5 * std::exp(log_mag) * std::sin(k * theta);
}

QaoaLargeD large_d_constant(int k) {
    if (k < 2) throw std::invalid_argument("large_d_constant needs k >= 2");
    const double t_min = 1.0 / std::sqrt(static_cast<double>(k)) + 1e-12;
    const double t_max = 6.0;
    auto f = [&](double t) { return large_d_objective(k, t); };
    ScanMax m = scan_then_refine_max(f, t_min, t_max, 600, 1e-12);
    if (m.x >= t_max - 1e-6) {
        throw std::runtime_error("large_d_constant: optimizer ran into the bracket edge t_max=" +
                                 std::to_string(t_max) + " at k=" + std::to_string(k));
    }
    QaoaLargeD out;
    out.c = m.value;
    out.t = m.x;
    out.beta = 0.5 * std::asin(1.0 / (m.x * std::sqrt(static_cast<double>(k))));
    return out;
}

namespace {

std::vector<double> statevector_probabilities_impl(const XorInstance& inst, QaoaAngles angles,
                                                   int cap, bool per_clause,
                                                   double* fraction_out) {
    if (inst.n > cap)
        throw std::invalid_argument("statevector refused: n=" + std::to_string(inst.n) +
                                    " exceeds cap " + std::to_string(cap));
    validate_instance(inst);
    if (inst.clauses.empty()) throw std::invalid_argument("instance has no clauses");
    const int n = inst.n;
    const std::size_t dim = std::size_t{1} << n;
    const int m = inst.num_clauses();

    std::vector<std::uint32_t> masks(m), targets(m);
    for (int ci = 0; ci < m; ++ci) {
        std::uint32_t mask = 0;
        for (int v : inst.clauses[ci].vars) mask |= (1u << v);
        masks[ci] = mask;
        targets[ci] = inst.clauses[ci].sign == -1 ? 1u : 0u;
    }

    // satisfied-clause count per basis state (bit = 1 means x = -1)
    std::vector<std::uint16_t> sat(dim, 0);
    for (std::size_t z = 0; z < dim; ++z) {
        int cnt = 0;
        for (int ci = 0; ci < m; ++ci)
            cnt += ((std::popcount(static_cast<std::uint32_t>(z) & masks[ci]) & 1u) == targets[ci]);
        sat[z] = static_cast<std::uint16_t>(cnt);
    }

    // |+>^n, then the diagonal phase e^{-i gamma C}
    std::vector<std::complex<double>> amp(dim);
    const double norm = std::pow(2.0, -0.5 * n);
    for (std::size_t z = 0; z < dim; ++z) {
        const double phase = -angles.gamma * sat[z];
        amp[z] = std::polar(norm, phase);
    }

    // mixing: e^{-i beta X} on each qubit
    const double cb = std::cos(angles.beta);
    const std::complex<double> msb(0.0, -std::sin(angles.beta));
    for (int qubit = 0; qubit < n; ++qubit) {
        const std::size_t bit = std::size_t{1} << qubit;
        for (std::size_t z = 0; z < dim; ++z) {
            if (z & bit) continue;
            const std::complex<double> a0 = amp[z];
            const std::complex<double> a1 = amp[z | bit];
            amp[z] = cb * a0 + msb * a1;
            amp[z | bit] = msb * a0 + cb * a1;
        }
    }

    std::vector<double> probs;
    double frac = 0.0;
    if (per_clause) probs.assign(m, 0.0);
    for (std::size_t z = 0; z < dim; ++z) {
        const double w = std::norm(amp[z]);
        frac += w * sat[z];
        if (per_clause) {
            for (int ci = 0; ci < m; ++ci)
                if ((std::popcount(static_cast<std::uint32_t>(z) & masks[ci]) & 1u) == targets[ci])
                    probs[ci] += w;
        }
    }
    if (fraction_out) *fraction_out = frac / m;
    return probs;
}

}  // namespace

double statevector_expectation(const XorInstance& inst, QaoaAngles angles, int cap) {
    double frac = 0.0;
    statevector_probabilities_impl(inst, angles, cap, false, &frac);
    return frac;
}

std::vector<double> statevector_clause_probabilities(const XorInstance& inst, QaoaAngles angles,
                                                     int cap) {
    return statevector_probabilities_impl(inst, angles, cap, true, nullptr);
}

}  // namespace kxor
