// Acceptance gate: one line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "kxor/golden.hpp"
#include "kxor/instance.hpp"
#include "kxor/nlts.hpp"
#include "kxor/parisi.hpp"
#include "kxor/qaoa.hpp"
#include "kxor/rng.hpp"
#include "kxor/threshold.hpp"

using namespace kxor;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) failures++;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

XorInstance cycle_instance(int len) {
    XorInstance inst;
    inst.k = 2;
    inst.n = len;
    for (int i = 0; i < len; ++i)
        inst.clauses.push_back({{std::min(i, (i + 1) % len), std::max(i, (i + 1) % len)}, 1});
    canonicalize(inst);
    return inst;
}

XorInstance loose_cycle_k4(int clauses) {
    XorInstance inst;
    inst.k = 4;
    inst.n = 3 * clauses;
    for (int c = 0; c < clauses; ++c) {
        const int base = 3 * c;
        inst.clauses.push_back({{base, base + 1, base + 2, (base + 3) % inst.n}, 1});
    }
    canonicalize(inst);
    return inst;
}

// 1: Table 2 QAOA columns to 1e-4
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int worst_k = 0;
    for (const auto& row : golden::kLargeDegree) {
        const QaoaLargeD lim = large_d_constant(row.k);
        const double err = std::max({std::abs(lim.c - row.c_qaoa), std::abs(lim.t - row.t),
                                     std::abs(lim.beta - row.beta)});
        if (err > worst) {
            worst = err;
            worst_k = row.k;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "QAOA limit table k=2..19, max |err| %.2e (k=%d), %.1fs", worst, worst_k,
                  elapsed_s(t0));
    report(1, worst <= 1e-4 && elapsed_s(t0) <= 60.0, buf);
}

// 2: Table 2 threshold columns to 1e-4
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int worst_k = 0;
    for (const auto& row : golden::kLargeDegree) {
        const ThresholdLimit lim = large_d_constant_threshold(row.k);
        const double err =
            std::max(std::abs(lim.c - row.c_mu), std::abs(lim.alpha - row.alpha));
        if (err > worst) {
            worst = err;
            worst_k = row.k;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "threshold limit table k=2..19, max |err| %.2e (k=%d), %.1fs", worst,
                  worst_k, elapsed_s(t0));
    report(2, worst <= 1e-4 && elapsed_s(t0) <= 60.0, buf);
}

// 3: crossover between the two algorithms at k=4/5
void criterion_3() {
    bool ok = true;
    for (int k = 2; k <= 19; ++k) {
        const double cq = large_d_constant(k).c;
        const double ct = large_d_constant_threshold(k).c;
        if (k <= 4)
            ok = ok && (ct > cq);
        else
            ok = ok && (cq > ct);
    }
    report(3, ok, "threshold leads for k in {2,3,4}, QAOA leads for 5 <= k <= 19");
}

// 4: k=3 asymptotics and the finite-degree winner set
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const QaoaLargeD k3 = large_d_constant(3);
    const bool asym_ok = std::abs(k3.c - 0.33146) <= 1e-4 && std::abs(k3.t - 1.0535) <= 1e-3;

    // reference set covers D >= 2 (at D = 1 the QAOA also leads,
    // 0.76795 vs 0.75)
    std::set<int> winners;
    for (int D = 2; D < 300; ++D) {
        const double qaoa = optimize_finite_d(3, D).fraction;
        const double thr = optimize_mu(3, D).f;
        if (qaoa > thr) winners.insert(D);
    }
    const std::set<int> expected(golden::kQaoaWinsK3.begin(), golden::kQaoaWinsK3.end());
    std::string got = "{";
    for (int d : winners) got += std::to_string(d) + ",";
    got += "}";
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "k=3: C=%.6f t=%.5f, QAOA winner set for D<300 = %s, %.1fs", k3.c, k3.t,
                  got.c_str(), elapsed_s(t0));
    report(4, asym_ok && winners == expected && elapsed_s(t0) <= 300.0, buf);
}

// 5: closed form vs statevector oracle
void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<XorInstance> insts = {
        cycle_instance(8),
        cycle_instance(11),
        cycle_instance(16),
        generate_regular_triangle_free(3, 2, 15, 5),
        generate_regular_triangle_free(3, 2, 18, 9),
        loose_cycle_k4(5),
        loose_cycle_k4(6),
    };
    Rng rng(17);
    int pairs = 0;
    double worst = 0.0;
    for (const XorInstance& inst : insts) {
        for (int s = 0; s < 20; ++s) {
            const QaoaAngles angles{rng.uniform() * std::numbers::pi / 2,
                                    rng.uniform() * std::numbers::pi / 2};
            worst = std::max(worst, std::abs(closed_form_instance_fraction(inst, angles) -
                                             statevector_expectation(inst, angles)));
            pairs++;
        }
    }
    const double ring = statevector_expectation(
        cycle_instance(8), {std::numbers::pi / 4, std::numbers::pi / 8});
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "oracle equivalence over %d pairs, max |diff| %.2e; 8-cycle point %.15f, "
                  "%.1fs",
                  pairs, worst, ring, elapsed_s(t0));
    report(5, pairs >= 100 && worst <= 1e-9 && std::abs(ring - 0.75) <= 1e-12, buf);
}

// 6: random-sign averaging on an instance with a triangle
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    // 3-uniform triangle: variables 0, 1, 3 pairwise co-occur in distinct
    // clauses (fails check_triangle_free), n = 6, m = 3
    XorInstance tri;
    tri.k = 3;
    tri.n = 6;
    tri.clauses = {{{0, 1, 2}, 1}, {{0, 3, 4}, 1}, {{1, 3, 5}, 1}};
    canonicalize(tri);
    const int m = tri.num_clauses();
    const auto deg = variable_degrees(tri);
    Rng rng(23);
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        const QaoaAngles angles{rng.uniform() * std::numbers::pi / 2,
                                rng.uniform() * std::numbers::pi / 2};
        std::vector<double> avg(m, 0.0);
        for (int pattern = 0; pattern < (1 << m); ++pattern) {
            XorInstance si = tri;
            for (int c = 0; c < m; ++c) si.clauses[c].sign = (pattern >> c) & 1 ? -1 : 1;
            const auto probs = statevector_clause_probabilities(si, angles);
            for (int c = 0; c < m; ++c) avg[c] += probs[c] - 0.5;
        }
        for (int c = 0; c < m; ++c) {
            const auto others = clause_other_degrees(tri, deg, c);
            worst = std::max(worst, std::abs(avg[c] / (1 << m) -
                                             closed_form_triangle_free(others, angles)));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "sign-averaged statevector vs closed form, max |diff| %.2e, %.1fs", worst,
                  elapsed_s(t0));
    report(6, worst <= 1e-9, buf);
}

// 7: Monte Carlo vs exact_F across the (k, D, mu) matrix
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const long trials = 1000000;
    int total = 0, within = 0;
    for (int k : {2, 3, 4}) {
        // two disjoint clauses; phantom coins simulate degree D+1
        const XorInstance inst = generate_regular_triangle_free(k, 1, 2 * k, 100 + k);
        for (int D = 1; D <= 6; ++D) {
            for (int mu = 0; mu <= D; ++mu) {
                const MonteCarloResult mc =
                    monte_carlo_run(inst, mu, trials, 1000 + 100 * k + 10 * D + mu, D + 1);
                const double f = exact_f(k, D, mu);
                total++;
                if (std::abs(mc.mean - f) <= 3.0 * mc.std_error) within++;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "Monte Carlo within 3 SE on %d/%d configs, %.1fs", within,
                  total, elapsed_s(t0));
    report(7, within >= static_cast<int>(std::ceil(0.95 * total)) && elapsed_s(t0) <= 600.0,
           buf);
}

// 8: Parisi values at default and CI settings
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    const ParisiSettings full;  // defaults
    const double p2 = minimize_parisi(MixedXi::pure(2), 2, full, 12345).value;
    const double p3 = minimize_parisi(MixedXi::pure(3), 2, full, 12345).value;
    const double p15 = minimize_parisi(MixedXi::pure(15), 2, full, 12345).value;
    const double rem = parisi_upper_bound_value();
    const bool full_ok = std::abs(p2 - 1.07928) / 1.07928 <= 0.002 &&
                         std::abs(p3 - 1.150) / 1.150 <= 0.002 &&
                         std::abs(p15 - 1.17741) <= 1e-3 && p2 <= rem + 2e-3 &&
                         p3 <= rem + 2e-3 && p15 <= rem + 2e-3;

    ParisiSettings ci;
    ci.grid = 401;
    bool ci_ok = true;
    for (int k : {2, 3, 15}) {
        const auto tk = std::chrono::steady_clock::now();
        const double v = minimize_parisi(MixedXi::pure(k), 2, ci, 12345, 1).value;
        const double target = k == 2 ? 1.07928 : (k == 3 ? 1.150 : 1.17741);
        ci_ok = ci_ok && std::abs(v - target) / target <= 0.01 && elapsed_s(tk) <= 120.0;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "P(2)=%.6f P(3)=%.6f P(15)=%.6f (known 1.07928 / 1.150 / 1.17741), CI mode "
                  "%s, %.1fs",
                  p2, p3, p15, ci_ok ? "ok" : "off", elapsed_s(t0));
    report(8, full_ok && ci_ok, buf);
}

// 9: kSAT identity and plumbing; numeric match needs the external model
void criterion_9() {
    const MixedXi toy{{{2, 0.5}, {3, 1.0}}};
    ParisiSettings ci;
    ci.grid = 401;
    const KsatResult res = ksat_mode(3, toy, 1, ci, 7, 1);
    const bool identity_ok = std::abs(res.c - res.b / 8.0) <= 1e-12 && res.b > 0.0;
    const bool converter_ok =
        std::abs(ksat_fraction(3, 0.277, 4.0) - (7.0 / 8.0 + 0.277 / 2.0)) <= 1e-12;
    report(9, identity_ok && converter_ok,
           "kSAT plumbing and C = B/2^k identity; numeric B(3)/C3 match: "
           "SKIPPED-CONDITIONAL (mixed-model coefficients are caller-supplied, "
           "not shipped)");
}

// 10: NLTS desk scale on C6 and C8
void criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int len : {6, 8}) {
        const NltsInstance inst = construct_nlts(cycle_graph(len), 2, 9, 11);
        ok = ok && brute_force_optimum(inst.derived).best_fraction == 1.0;
        ok = ok && verify_partial_z2(inst, 1);
        const auto optima = brute_force_all_optima(inst.derived);
        int claimed = 0;
        for (const auto& x : optima) {
            bool form = true;
            for (int v : inst.sources) form = form && x[v] == -1;
            for (int v : inst.sinks) form = form && x[v] == 1;
            for (int v = 0; v < inst.inner_count(); ++v) form = form && x[v] == x[0];
            claimed += form;
        }
        // the two inner-constant states; even cycles (bipartite inner graph)
        // additionally admit the two cut-induced ground states
        ok = ok && claimed == 2 && optima.size() == 4;
    }
    ok = ok && std::abs(qaoa_depth_bound(5184.0 * 8.0, 1) - 3.0 / 648.0) <= 1e-12;
    ok = ok &&
         std::abs(fraction_bound(100, 0.0) - (0.99 + 2.0 * std::sqrt(99.0) / 10000.0)) <= 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "C6/C8 r=9: satisfiable, 2 inner-constant ground states (+2 bipartite cut "
                  "states), Z2 symmetry, bound formulas, %.1fs",
                  elapsed_s(t0));
    report(10, ok, buf);
}

// 11: condensed invariant sweep (the full property suites run under ctest)
void criterion_11() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    // qaoa: k=2 identity and stationarity
    Rng rng(7);
    for (int s = 0; s < 50 && ok; ++s) {
        const double g = rng.uniform() * std::numbers::pi / 2;
        const double b = rng.uniform() * std::numbers::pi / 2;
        const int D = static_cast<int>(rng.below(10));
        const double expect = std::sin(g) * std::cos(2 * b) * std::sin(2 * b) *
                              std::pow(std::cos(g), D);
        ok = std::abs(closed_form_regular(2, D, {g, b}) - expect) <= 1e-14;
    }
    // threshold: algebraic identities over D <= 64
    for (int D = 0; D <= 64 && ok; ++D) {
        for (int mu = 0; mu <= D && ok; ++mu) {
            const ThresholdQuantities q = threshold_quantities(D, mu);
            ok = std::abs((q.one_minus_2g + 2 * q.delta) - (1.0 - 2 * q.r)) <= 1e-13;
            const double f2 = 0.5 + q.delta * (q.one_minus_2g + q.delta);
            ok = ok && std::abs(exact_f(2, D, mu) - f2) <= 1e-15;
        }
    }
    // parisi: mu=0 closed form and level convexity
    ParisiSettings ci;
    ci.grid = 401;
    ok = ok && std::abs(evaluate_functional(MixedXi::pure(2), {{0.0, 1.0}, {0.0}}, ci) -
                        2.0 / std::sqrt(std::numbers::pi)) <= 1e-12;
    const ParisiTrace trace = evaluate_functional_trace(
        MixedXi::pure(3), {{0.0, 0.3, 1.0}, {0.0, 1.0}}, ci);
    for (const auto& psi : trace.levels) {
        for (std::size_t j = 1; j + 1 < psi.size() && ok; ++j)
            ok = psi[j + 1] - 2 * psi[j] + psi[j - 1] >= -1e-8;
    }
    // nlts: odd cycle has exactly the two claimed ground states
    const NltsInstance c5 = construct_nlts(cycle_graph(5), 2, 9, 11);
    ok = ok && brute_force_all_optima(c5.derived).size() == 2 && verify_partial_z2(c5, 1);

    char buf[120];
    std::snprintf(buf, sizeof buf, "condensed invariant sweep across modules, %.1fs",
                  elapsed_s(t0));
    report(11, ok, buf);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%d/11 criteria passed in %.1fs\n", 11 - failures, elapsed_s(t0));
    return failures == 0 ? 0 : 1;
}
