#include "kxor/threshold.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "kxor/rng.hpp"

namespace kxor {

namespace {

// Normalized binomial weights t_i = C(D,i) / 2^D by recurrence. Long double
// keeps t_0 = 2^-D representable up to D ~ 16000.
std::vector<long double> binomial_weights(int D) {
    std::vector<long double> t(static_cast<std::size_t>(D) + 1);
    t[0] = std::pow(0.5L, D);
    for (int i = 0; i < D; ++i)
        t[i + 1] = t[i] * static_cast<long double>(D - i) / static_cast<long double>(i + 1);
    return t;
}

struct Sums {
    long double g;             // sum_{i<=mu} t_i
    long double delta;         // t_mu
    long double one_minus_2g;  // sum_{i>mu} - sum_{i<=mu}
};

Sums tail_sums(const std::vector<long double>& t, int mu) {
    long double lo = 0.0L, hi = 0.0L;
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
        if (i <= mu)
            lo += t[i];
        else
            hi += t[i];
    }
    return {lo, t[mu], hi - lo};
}

long double f_from_sums(int k, const Sums& s) {
    // F = 1/2 + ((1-2g+2d)^k - (1-2g)^k)/4; 1-2g is formed from the tail
    // difference so it stays accurate when g is close to 1/2.
    const long double a = s.one_minus_2g + 2.0L * s.delta;
    const long double b = s.one_minus_2g;
    return 0.5L + (std::pow(a, static_cast<long double>(k)) -
                   std::pow(b, static_cast<long double>(k))) / 4.0L;
}

}  // namespace

ThresholdQuantities threshold_quantities(int D, int mu) {
    if (D < 0 || mu < 0 || mu > D)
        throw std::invalid_argument("threshold_quantities needs 0 <= mu <= D");
    const std::vector<long double> t = binomial_weights(D);
    const Sums s = tail_sums(t, mu);
    ThresholdQuantities q;
    q.g = static_cast<double>(s.g);
    q.h = static_cast<double>(1.0L - s.g);
    q.delta = static_cast<double>(s.delta);
    q.r = static_cast<double>(s.g - s.delta);
    q.s_sat = static_cast<double>(1.0L - (s.g - s.delta));
    q.one_minus_2g = static_cast<double>(s.one_minus_2g);
    return q;
}

double exact_f(int k, int D, int mu) {
    if (k < 2) throw std::invalid_argument("exact_f needs k >= 2");
    if (mu < 0 || mu > D) throw std::invalid_argument("exact_f needs 0 <= mu <= D");
    const std::vector<long double> t = binomial_weights(D);
    return static_cast<double>(f_from_sums(k, tail_sums(t, mu)));
}

MuOptimum optimize_mu(int k, int D) {
    if (k < 2 || D < 0) throw std::invalid_argument("optimize_mu needs k >= 2, D >= 0");
    const std::vector<long double> t = binomial_weights(D);
    // one pass: maintain prefix (lo) and suffix (hi) sums incrementally
    long double total = 0.0L;
    for (long double w : t) total += w;
    long double lo = 0.0L;
    MuOptimum best{0, -1.0};
    for (int mu = 0; mu <= D; ++mu) {
        lo += t[mu];
        const Sums s{lo, t[mu], (total - lo) - lo};
        const double f = static_cast<double>(f_from_sums(k, s));
        if (f > best.f) best = {mu, f};
    }
    return best;
}

ThresholdLimit large_d_constant_threshold(int k) {
    if (k < 2) throw std::invalid_argument("large_d_constant_threshold needs k >= 2");
    const double root_2_pi = std::sqrt(2.0 / std::numbers::pi);
    auto residual = [&](double alpha) {
        return (k - 1) * root_2_pi * std::exp(-2.0 * alpha * alpha) -
               2.0 * alpha * std::erf(alpha * std::numbers::sqrt2);
    };
    // bracket on [-3, 0): residual > 0 near 0-, < 0 at -3
    double lo = -3.0, hi = -1e-12;
    if (residual(lo) >= 0.0 || residual(hi) <= 0.0) {
        throw std::runtime_error("large_d_constant_threshold: no sign change on [-3, 0); "
                                 "residual(-3)=" + std::to_string(residual(lo)) +
                                 " residual(0-)=" + std::to_string(residual(hi)));
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double alpha = 0.5 * (lo + hi);
    ThresholdLimit out;
    out.alpha = alpha;
    out.c = 0.5 * k * root_2_pi * std::exp(-2.0 * alpha * alpha) *
            std::pow(std::erf(-alpha * std::numbers::sqrt2), k - 1);
    return out;
}

MonteCarloResult monte_carlo_run(const XorInstance& inst, int mu, long trials,
                                 std::uint64_t seed, std::optional<int> simulate_to_degree) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_run needs trials >= 1");
    validate_instance(inst);
    if (inst.clauses.empty()) throw std::invalid_argument("instance has no clauses");
    const int n = inst.n;
    const int m = inst.num_clauses();
    const std::vector<int> deg = variable_degrees(inst);
    if (simulate_to_degree) {
        for (int v = 0; v < n; ++v)
            if (deg[v] > *simulate_to_degree)
                throw std::invalid_argument("simulate_to_degree below an actual variable degree");
    }

    std::vector<int8_t> x(n);
    std::vector<int16_t> sat_count(n);
    double sum = 0.0, sumsq = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
        for (int v = 0; v < n; ++v) x[v] = rng.coin() ? 1 : -1;
        std::fill(sat_count.begin(), sat_count.end(), 0);
        for (const Clause& c : inst.clauses) {
            int prod = 1;
            for (int v : c.vars) prod *= x[v];
            if (prod == c.sign)
                for (int v : c.vars) sat_count[v]++;
        }
        for (int v = 0; v < n; ++v) {
            int count = sat_count[v];
            if (simulate_to_degree) {
                const int phantom = *simulate_to_degree - deg[v];
                for (int i = 0; i < phantom; ++i) count += rng.coin() ? 1 : 0;
            }
            if (count <= mu) x[v] = -x[v];
        }
        int satisfied = 0;
        for (const Clause& c : inst.clauses) {
            int prod = 1;
            for (int v : c.vars) prod *= x[v];
            if (prod == c.sign) satisfied++;
        }
        const double frac = static_cast<double>(satisfied) / m;
        sum += frac;
        sumsq += frac * frac;
    }
    MonteCarloResult res;
    res.trials = trials;
    res.mean = sum / trials;
    const double var = std::max(0.0, sumsq / trials - res.mean * res.mean);
    res.std_error = std::sqrt(var / trials);
    return res;
}

}  // namespace kxor
