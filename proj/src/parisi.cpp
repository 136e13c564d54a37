#include "kxor/parisi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kxor/gauss_hermite.hpp"
#include "kxor/optimize.hpp"
#include "kxor/rng.hpp"

namespace kxor {

double MixedXi::xi(double s) const {
    double v = 0.0;
    for (auto [p, c] : terms) v += c * std::pow(s, p);
    return v;
}

double MixedXi::xi_prime(double s) const {
    double v = 0.0;
    for (auto [p, c] : terms) v += c * p * std::pow(s, p - 1);
    return v;
}

double MixedXi::xi_second(double s) const {
    double v = 0.0;
    for (auto [p, c] : terms)
        if (p >= 2) v += c * p * (p - 1) * std::pow(s, p - 2);
    return v;
}

MixedXi MixedXi::pure(int k) {
    if (k < 2) throw std::invalid_argument("pure k-spin model needs k >= 2");
    return MixedXi{{{k, 1.0}}};
}

namespace {

void validate_model(const MixedXi& xi) {
    bool has_p2 = false;
    for (auto [p, c] : xi.terms) {
        if (c < 0.0) throw std::invalid_argument("xi coefficients must be nonnegative");
        if (p < 1) throw std::invalid_argument("xi powers must be >= 1");
        if (p >= 2 && c > 0.0) has_p2 = true;
    }
    if (!has_p2) throw std::invalid_argument("xi needs a term with p >= 2");
}

void validate_order_param(const StepOrderParam& op) {
    const std::size_t nb = op.breakpoints.size();
    if (nb < 2 || op.values.size() != nb - 1)
        throw std::invalid_argument("order parameter needs one value per interval");
    if (op.breakpoints.front() != 0.0 || op.breakpoints.back() != 1.0)
        throw std::invalid_argument("breakpoints must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < nb; ++i)
        if (!(op.breakpoints[i] < op.breakpoints[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    double prev = 0.0;
    for (double m : op.values) {
        if (m < 0.0 || m < prev)
            throw std::invalid_argument("values must be nonnegative and nondecreasing");
        prev = m;
    }
}

double normal_cdf(double u) { return 0.5 * std::erfc(-u / std::numbers::sqrt2); }

// (1/m) log E[e^{m |x + a z|}] for z standard normal, m > 0; exact.
double softmax_abs_kernel(double x, double a, double m) {
    const double ax = std::abs(x);
    if (a < 1e-12) return ax + 0.5 * m * a * a;
    const double phi_plus = normal_cdf(ax / a + m * a);
    const double phi_minus = normal_cdf(-ax / a + m * a);
    return 0.5 * m * a * a + ax +
           std::log(phi_plus + std::exp(-2.0 * m * ax) * phi_minus) / m;
}

// E|x + a z|, exact.
double mean_abs_kernel(double x, double a) {
    if (a < 1e-12) return std::abs(x);
    return a * std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * x * x / (a * a)) +
           x * std::erf(x / (a * std::numbers::sqrt2));
}

struct EvalContext {
    std::vector<double> grid;
    double extent = 0.0;
    double h = 0.0;
    std::vector<double> widths;  // a_i per interval
    double penalty = 0.0;
};

EvalContext prepare(const MixedXi& xi, const StepOrderParam& op,
                    const ParisiSettings& settings) {
    validate_model(xi);
    validate_order_param(op);
    const int levels = static_cast<int>(op.values.size());

    EvalContext ctx;
    double width_sum = 0.0;
    for (int i = 0; i < levels; ++i) {
        const double d = xi.xi_prime(op.breakpoints[i + 1]) - xi.xi_prime(op.breakpoints[i]);
        const double a = std::sqrt(std::max(0.0, d));
        ctx.widths.push_back(a);
        width_sum += a;
    }
    double extent = settings.extent;
    if (extent <= 0.0) {
        extent = 4.0 * width_sum + 8.0;
    } else if (extent < 3.0 * width_sum + 4.0) {
        throw std::invalid_argument("grid extent " + std::to_string(extent) +
                                    " too small for total Gaussian width; need at least " +
                                    std::to_string(3.0 * width_sum + 4.0));
    }
    int n = settings.grid;
    if (n < 41) throw std::invalid_argument("grid needs at least 41 points");
    if (n % 2 == 0) n += 1;
    ctx.extent = extent;
    ctx.h = 2.0 * extent / (n - 1);
    ctx.grid.resize(n);
    for (int j = 0; j < n; ++j) ctx.grid[j] = -extent + ctx.h * j;

    // B = (1/2) sum_i m_i \int_{q_i}^{q_{i+1}} t xi''(t) dt, termwise:
    // \int t xi'' = sum_p c_p (p-1) t^p.
    double b = 0.0;
    for (int i = 0; i < levels; ++i) {
        double seg = 0.0;
        for (auto [p, c] : xi.terms)
            seg += c * (p - 1) *
                   (std::pow(op.breakpoints[i + 1], p) - std::pow(op.breakpoints[i], p));
        b += 0.5 * op.values[i] * seg;
    }
    ctx.penalty = b;
    return ctx;
}

// linear interpolation with even symmetry and unit-slope extrapolation
double interp(const std::vector<double>& psi, double extent, double h, double y) {
    const double ay = std::abs(y);
    if (ay >= extent) return psi.back() + (ay - extent);
    const double u = (y + extent) / h;
    const std::size_t i0 = static_cast<std::size_t>(u);
    const double f = u - static_cast<double>(i0);
    return psi[i0] * (1.0 - f) + psi[i0 + 1] * f;
}

ParisiTrace evaluate_impl(const MixedXi& xi, const StepOrderParam& op,
                          const ParisiSettings& settings, bool keep_levels) {
    EvalContext ctx = prepare(xi, op, settings);
    const int levels = static_cast<int>(op.values.size());
    const std::size_t n = ctx.grid.size();
    const GaussHermite gh = gauss_hermite(settings.quad);

    ParisiTrace trace;
    std::vector<double> psi(n);
    for (std::size_t j = 0; j < n; ++j) psi[j] = std::abs(ctx.grid[j]);
    if (keep_levels) trace.levels.push_back(psi);

    std::vector<double> next(n);
    for (int level = levels - 1; level >= 0; --level) {
        const double a = ctx.widths[level];
        const double m = op.values[level];
        const bool boundary = (level == levels - 1);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = ctx.grid[j];
            if (boundary) {
                // innermost level acts on |x|; both update rules have
                // closed forms there
                next[j] = m > 0.0 ? softmax_abs_kernel(x, a, m) : mean_abs_kernel(x, a);
                continue;
            }
            if (a < 1e-12) {
                next[j] = psi[j];
                continue;
            }
            if (m > 0.0) {
                double peak = -1e300;
                for (int t = 0; t < settings.quad; ++t) {
                    const double v =
                        interp(psi, ctx.extent, ctx.h,
                               x + a * std::numbers::sqrt2 * gh.nodes[t]);
                    peak = std::max(peak, m * v);
                }
                double acc = 0.0;
                for (int t = 0; t < settings.quad; ++t) {
                    const double v =
                        interp(psi, ctx.extent, ctx.h,
                               x + a * std::numbers::sqrt2 * gh.nodes[t]);
                    acc += gh.weights[t] * std::exp(m * v - peak);
                }
                next[j] = (peak + std::log(acc / std::sqrt(std::numbers::pi))) / m;
            } else {
                double acc = 0.0;
                for (int t = 0; t < settings.quad; ++t)
                    acc += gh.weights[t] * interp(psi, ctx.extent, ctx.h,
                                                  x + a * std::numbers::sqrt2 * gh.nodes[t]);
                next[j] = acc / std::sqrt(std::numbers::pi);
            }
        }
        psi.swap(next);
        if (keep_levels) trace.levels.push_back(psi);
    }
    if (keep_levels) std::reverse(trace.levels.begin(), trace.levels.end());
    trace.grid = ctx.grid;
    trace.penalty = ctx.penalty;
    trace.value = psi[(n - 1) / 2] - ctx.penalty;
    return trace;
}

}  // namespace

double evaluate_functional(const MixedXi& xi, const StepOrderParam& op,
                           const ParisiSettings& settings) {
    return evaluate_impl(xi, op, settings, false).value;
}

ParisiTrace evaluate_functional_trace(const MixedXi& xi, const StepOrderParam& op,
                                      const ParisiSettings& settings) {
    return evaluate_impl(xi, op, settings, true);
}

namespace {

// Unconstrained parameterization of a mu-piece order parameter:
// theta = (u_1..u_mu, v_1..v_mu); breakpoints from a softmax partition of
// [q_floor, 1], values from cumulative positive increments exp(v_j).
StepOrderParam decode_params(const std::vector<double>& theta, int pieces, double q_floor) {
    StepOrderParam op;
    op.breakpoints.push_back(0.0);
    double total = 1.0;  // implicit weight of the final interval
    std::vector<double> w(pieces);
    for (int j = 0; j < pieces; ++j) {
        w[j] = std::exp(std::clamp(theta[j], -30.0, 30.0));
        total += w[j];
    }
    double cum = 0.0;
    for (int j = 0; j < pieces; ++j) {
        cum += w[j] / total;
        op.breakpoints.push_back(q_floor + (1.0 - q_floor) * cum);
    }
    op.breakpoints.push_back(1.0);

    op.values.push_back(0.0);
    double m = 0.0;
    for (int j = 0; j < pieces; ++j) {
        m += std::exp(std::clamp(theta[pieces + j], -30.0, 3.5));
        op.values.push_back(m);
    }
    return op;
}

}  // namespace

ParisiResult minimize_parisi(const MixedXi& xi, int pieces, const ParisiSettings& settings,
                             std::uint64_t seed, int restarts) {
    if (pieces < 1) throw std::invalid_argument("minimize_parisi needs at least one piece");
    validate_model(xi);
    const int dim = 2 * pieces;

    auto objective = [&](const std::vector<double>& theta) {
        return evaluate_functional(xi, decode_params(theta, pieces, settings.q_floor), settings);
    };

    // Near-REM profile: tiny first breakpoint, all values at sqrt(2 log 2).
    std::vector<double> rem_seed(dim, 0.0);
    rem_seed[0] = -12.0;
    rem_seed[pieces] = std::log(parisi_upper_bound_value());
    for (int j = 1; j < pieces; ++j) rem_seed[pieces + j] = -8.0;

    ParisiResult best;
    best.value = 1e300;
    best.settings = settings;
    for (int restart = 0; restart < std::max(1, restarts); ++restart) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(restart));
        std::vector<double> start;
        double start_val = 1e300;
        if (restart == 0) {
            start = rem_seed;
            start_val = objective(rem_seed);
        }
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> theta(dim);
            for (int j = 0; j < pieces; ++j) theta[j] = 2.0 * rng.normal();
            for (int j = 0; j < pieces; ++j) theta[pieces + j] = -0.5 + rng.normal();
            const double v = objective(theta);
            if (v < start_val) {
                start_val = v;
                start = theta;
            }
        }
        NelderMeadResult nm = nelder_mead(objective, start, 0.5, 500, 1e-9);
        if (nm.value < best.value) {
            best.value = nm.value;
            best.minimizer = decode_params(nm.x, pieces, settings.q_floor);
            best.converged = nm.converged;
        }
        best.restarts = restart + 1;
    }
    return best;
}

double parisi_upper_bound_value() { return std::sqrt(2.0 * std::log(2.0)); }

double optimal_fraction_kxor(int k, double D, double parisi_value) {
    if (D < 1.0) throw std::invalid_argument("optimal_fraction_kxor needs D >= 1");
    return 0.5 + 0.5 * parisi_value * std::sqrt(static_cast<double>(k) / D);
}

KsatResult ksat_mode(int k, const MixedXi& xi, int pieces, const ParisiSettings& settings,
                     std::uint64_t seed, int restarts) {
    if (k < 2) throw std::invalid_argument("ksat_mode needs k >= 2");
    KsatResult out;
    out.inner = minimize_parisi(xi, pieces, settings, seed, restarts);
    out.b = out.inner.value;
    out.c = out.b / std::pow(2.0, k);
    return out;
}

double ksat_fraction(int k, double c, double clause_density) {
    if (clause_density <= 0.0) throw std::invalid_argument("clause density must be positive");
    return 1.0 - std::pow(2.0, -k) + c / std::sqrt(clause_density);
}

}  // namespace kxor
