// kxor: command-line surface for the Max kXOR toolkit.
//
// Subcommands: qaoa-table, threshold-table, parisi, ksat, compare, nlts,
// verify, gen. Every data file is written atomically and accompanied by a
// manifest with FNV-1a checksums. Exit codes: 0 success, 1 check failure,
// 2 usage error.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kxor/golden.hpp"
#include "kxor/instance.hpp"
#include "kxor/nlts.hpp"
#include "kxor/parisi.hpp"
#include "kxor/qaoa.hpp"
#include "kxor/rng.hpp"
#include "kxor/threshold.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace kxor;

namespace {

constexpr const char* kVersion = "1.0.0";

// An exception for failed result checks (golden mismatch, failed
// verification, missing cache): exit code 1 rather than the usage code 2.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Shared options and the manifest plumbing for one subcommand run.
struct RunContext {
    std::string subcommand;
    fs::path out_dir = "results";
    std::string format = "csv";
    std::uint64_t seed = 1;
    bool no_golden = false;
    json params = json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::string>> written;  // (name, checksum)

    void add_common(CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
        cmd->add_option("--seed", seed, "random seed")->capture_default_str();
        cmd->add_option("--format", format, "data file format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_flag("--no-golden", no_golden, "skip golden-row validation");
    }

    void emit(const std::string& name, const std::string& content) {
        fs::create_directories(out_dir);
        atomic_write(out_dir / name, content);
        written.emplace_back(name, fnv1a_hex(content));
        std::printf("wrote %s\n", (out_dir / name).string().c_str());
    }

    void finish() {
        json manifest;
        manifest["subcommand"] = subcommand;
        manifest["params"] = params;
        manifest["seed"] = seed;
        manifest["version"] = kVersion;
        json files = json::array();
        for (const auto& [name, sum] : written)
            files.push_back({{"file", name}, {"fnv1a", sum}});
        manifest["outputs"] = files;
        manifest["wall_clock_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        atomic_write(out_dir / (subcommand + ".manifest.json"), manifest.dump(2) + "\n");
    }
};

// ---------------------------------------------------------------- tables

struct TableRow {
    std::vector<std::string> cells;
};

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const TableRow& r : rows) {
        for (std::size_t i = 0; i < r.cells.size(); ++i)
            out << (i ? "," : "") << r.cells[i];
        out << "\n";
    }
    return out.str();
}

std::string render_json_table(const std::vector<std::string>& header,
                              const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const TableRow& r : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r.cells[i];
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

void emit_table(RunContext& ctx, const std::string& stem,
                const std::vector<std::string>& header, const std::vector<TableRow>& rows) {
    if (ctx.format == "csv")
        ctx.emit(stem + ".csv", render_csv(header, rows));
    else
        ctx.emit(stem + ".json", render_json_table(header, rows));
}

const golden::LargeDegreeRow* golden_row(int k) {
    for (const auto& row : golden::kLargeDegree)
        if (row.k == k) return &row;
    return nullptr;
}

void check_range(int k_min, int k_max, int d_min, int d_max, bool limit) {
    if (k_min < 2 || k_max >= 200)
        throw CLI::ValidationError("--k-min/--k-max", "k range must lie in [2, 200)");
    if (!limit && (d_min < 0 || d_max >= 300))
        throw CLI::ValidationError("--d-min/--d-max", "D range must lie in [0, 300)");
}

void cmd_qaoa_table(RunContext& ctx, int k_min, int k_max, int d_min, int d_max,
                    bool limit) {
    check_range(k_min, k_max, d_min, d_max, limit);
    std::vector<TableRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        if (limit) {
            const QaoaLargeD lim = large_d_constant(k);
            if (!ctx.no_golden) {
                if (const auto* g = golden_row(k)) {
                    if (std::abs(lim.c - g->c_qaoa) > 1e-4 || std::abs(lim.t - g->t) > 1e-4 ||
                        std::abs(lim.beta - g->beta) > 1e-4)
                        throw CheckFailure("golden mismatch at k=" + std::to_string(k) +
                                           ": computed C=" + fmt(lim.c) +
                                           " expected " + fmt(g->c_qaoa));
                }
            }
            rows.push_back({{std::to_string(k), "inf", fmt(lim.c), fmt(lim.t),
                             fmt(lim.beta)}});
        } else {
            for (int D = d_min; D <= d_max; ++D) {
                const QaoaOptimum opt = optimize_finite_d(k, D);
                rows.push_back({{std::to_string(k), std::to_string(D), fmt(opt.fraction),
                                 fmt(opt.angles.gamma), fmt(opt.angles.beta)}});
            }
        }
    }
    emit_table(ctx, "qaoa_table", {"k", "D", "c_or_fraction", "gamma_or_t", "beta"}, rows);
}

void cmd_threshold_table(RunContext& ctx, int k_min, int k_max, int d_min, int d_max,
                         bool limit) {
    check_range(k_min, k_max, d_min, d_max, limit);
    std::vector<TableRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        if (limit) {
            const ThresholdLimit lim = large_d_constant_threshold(k);
            if (!ctx.no_golden) {
                if (const auto* g = golden_row(k)) {
                    if (std::abs(lim.c - g->c_mu) > 1e-4 ||
                        std::abs(lim.alpha - g->alpha) > 1e-4)
                        throw CheckFailure("golden mismatch at k=" + std::to_string(k) +
                                           ": computed C_mu=" + fmt(lim.c) +
                                           " expected " + fmt(g->c_mu));
                }
            }
            rows.push_back({{std::to_string(k), "inf", fmt(lim.c), fmt(lim.alpha)}});
        } else {
            for (int D = d_min; D <= d_max; ++D) {
                const MuOptimum opt = optimize_mu(k, D);
                rows.push_back({{std::to_string(k), std::to_string(D), fmt(opt.f),
                                 std::to_string(opt.mu)}});
            }
        }
    }
    emit_table(ctx, "threshold_table", {"k", "D", "c_or_fraction", "mu_or_alpha"}, rows);
}

// ---------------------------------------------------------------- parisi

// Cache key: canonical descriptor of (model, pieces, grid, quad).
std::string model_descriptor(const MixedXi& xi, int pieces, const ParisiSettings& s) {
    std::ostringstream ss;
    ss << "xi=";
    for (const auto& [p, c] : xi.terms) ss << p << ":" << fmt(c) << ",";
    ss << ";pieces=" << pieces << ";grid=" << s.grid << ";quad=" << s.quad;
    return ss.str();
}

fs::path cache_path(const RunContext& ctx) { return ctx.out_dir / "parisi_cache.json"; }

json load_cache(const RunContext& ctx) {
    const fs::path p = cache_path(ctx);
    if (!fs::exists(p)) return json::object();
    return json::parse(read_file(p));
}

void store_cache_entry(RunContext& ctx, const std::string& descriptor,
                       const ParisiResult& res) {
    json cache = load_cache(ctx);
    json entry;
    entry["descriptor"] = descriptor;
    entry["value"] = res.value;
    entry["breakpoints"] = res.minimizer.breakpoints;
    entry["values"] = res.minimizer.values;
    entry["restarts"] = res.restarts;
    cache[fnv1a_hex(descriptor)] = entry;
    fs::create_directories(ctx.out_dir);
    atomic_write(cache_path(ctx), cache.dump(2) + "\n");
}

MixedXi model_from_json(const json& j) {
    MixedXi xi;
    for (const auto& term : j.at("xi"))
        xi.terms.emplace_back(term.at("p").get<int>(), term.at("c").get<double>());
    return xi;
}

void cmd_parisi(RunContext& ctx, int k_min, int k_max, const std::string& model_file,
                int pieces, ParisiSettings settings, int restarts) {
    struct Job {
        std::string label;
        MixedXi xi;
        double known = 0.0;     // independent value, 0 if none
        double published = 0.0; // published numerical value, 0 if none
    };
    std::vector<Job> jobs;
    if (!model_file.empty()) {
        const json j = json::parse(read_file(model_file));
        Job job{"model", model_from_json(j), 0.0, 0.0};
        if (j.contains("pieces")) pieces = j["pieces"].get<int>();
        if (j.contains("grid")) settings.grid = j["grid"].get<int>();
        if (j.contains("quad")) settings.quad = j["quad"].get<int>();
        jobs.push_back(job);
    } else {
        if (k_min < 2) throw CLI::ValidationError("--k-min", "k must be >= 2");
        for (int k = k_min; k <= k_max; ++k) {
            Job job{std::to_string(k), MixedXi::pure(k), 0.0, 0.0};
            for (const auto& row : golden::kParisiValues)
                if (row.k == k) {
                    job.known = row.known;
                    job.published = row.computed;
                }
            jobs.push_back(job);
        }
    }

    json rows = json::array();
    for (const Job& job : jobs) {
        ParisiResult res;
        if (pieces == 0) {
            // mu = 0: single plain-Gaussian level, no minimization needed
            res.minimizer = {{0.0, 1.0}, {0.0}};
            res.value = evaluate_functional(job.xi, res.minimizer, settings);
            res.converged = true;
        } else {
            res = minimize_parisi(job.xi, pieces, settings, ctx.seed, restarts);
        }
        if (!ctx.no_golden && job.published > 0.0 &&
            std::abs(res.value - job.published) > 2e-3)
            throw CheckFailure("golden mismatch at k=" + job.label + ": computed " +
                               fmt(res.value) + " published " + fmt(job.published));
        json row;
        row["k"] = job.label;
        row["value"] = res.value;
        if (job.known > 0.0) row["known"] = job.known;
        row["minimizer"] = {{"breakpoints", res.minimizer.breakpoints},
                            {"values", res.minimizer.values}};
        row["settings"] = {{"pieces", pieces},
                           {"grid", settings.grid},
                           {"quad", settings.quad},
                           {"restarts", restarts},
                           {"seed", ctx.seed}};
        row["converged"] = res.converged;
        rows.push_back(row);
        store_cache_entry(ctx, model_descriptor(job.xi, pieces, settings), res);
    }
    ctx.emit("parisi.json", rows.dump(2) + "\n");
}

void cmd_ksat(RunContext& ctx, int k, const std::string& model_file, int pieces,
              ParisiSettings settings, int restarts, double alpha) {
    const json j = json::parse(read_file(model_file));
    const MixedXi xi = model_from_json(j);
    if (j.contains("pieces")) pieces = j["pieces"].get<int>();
    if (j.contains("grid")) settings.grid = j["grid"].get<int>();
    if (j.contains("quad")) settings.quad = j["quad"].get<int>();
    const KsatResult res = ksat_mode(k, xi, pieces, settings, ctx.seed, restarts);
    if (std::abs(res.c - res.b / std::pow(2.0, k)) > 1e-12)
        throw CheckFailure("C = B / 2^k identity violated");
    json out;
    out["k"] = k;
    out["b"] = res.b;
    out["c"] = res.c;
    if (alpha > 0.0) {
        out["clause_density"] = alpha;
        out["fraction"] = ksat_fraction(k, res.c, alpha);
    }
    out["minimizer"] = {{"breakpoints", res.inner.minimizer.breakpoints},
                        {"values", res.inner.minimizer.values}};
    out["settings"] = {{"pieces", pieces},
                       {"grid", settings.grid},
                       {"quad", settings.quad},
                       {"restarts", restarts},
                       {"seed", ctx.seed}};
    ctx.emit("ksat.json", out.dump(2) + "\n");
}

// ---------------------------------------------------------------- compare

void cmd_compare(RunContext& ctx, int k_min, int k_max, int d_min, int d_max, bool limit,
                 int pieces, const ParisiSettings& settings) {
    check_range(k_min, k_max, d_min, d_max, limit);
    const json cache = load_cache(ctx);
    std::vector<TableRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        const std::string key =
            fnv1a_hex(model_descriptor(MixedXi::pure(k), pieces, settings));
        if (!cache.contains(key))
            throw CheckFailure("no cached Parisi value for k=" + std::to_string(k) +
                               " (pieces=" + std::to_string(pieces) +
                               ", grid=" + std::to_string(settings.grid) +
                               ", quad=" + std::to_string(settings.quad) +
                               "); run: kxor parisi --k-min " + std::to_string(k) +
                               " --k-max " + std::to_string(k) + " --pieces " +
                               std::to_string(pieces) + " --grid " +
                               std::to_string(settings.grid) + " --quad " +
                               std::to_string(settings.quad) + " --out " +
                               ctx.out_dir.string());
        const double p = cache[key]["value"].get<double>();
        if (limit) {
            // sqrt(D)-scaled constants: fraction = 1/2 + c/sqrt(D)
            const double upper = 0.5 * p * std::sqrt(static_cast<double>(k));
            rows.push_back({{std::to_string(k), "inf", fmt(large_d_constant(k).c),
                             fmt(large_d_constant_threshold(k).c), fmt(upper)}});
        } else {
            for (int D = d_min; D <= d_max; ++D) {
                const double qaoa = optimize_finite_d(k, D).fraction;
                const double thr = optimize_mu(k, D).f;
                const double upper = optimal_fraction_kxor(k, D + 1, p);
                rows.push_back({{std::to_string(k), std::to_string(D), fmt(qaoa), fmt(thr),
                                 fmt(upper)}});
            }
        }
    }
    emit_table(ctx, "compare",
               {"k", "D", "qaoa_fraction", "threshold_fraction", "parisi_upper_bound"},
               rows);
}

// ---------------------------------------------------------------- nlts

void cmd_nlts(RunContext& ctx, const std::string& inner_kind, int n_inner, int degree,
              int r, double delta) {
    Graph inner;
    if (inner_kind == "cycle") {
        inner = cycle_graph(n_inner);
        degree = 2;
    } else {
        inner = random_regular_graph(n_inner, degree, ctx.seed);
    }
    const NltsInstance inst = construct_nlts(inner, degree, r, ctx.seed);
    ctx.emit("nlts_instance.json", instance_to_json(inst.derived));

    json side;
    side["params"] = {{"inner", inner_kind},
                      {"n_inner", n_inner},
                      {"degree", degree},
                      {"r", r},
                      {"seed", ctx.seed}};
    json v_plus = json::array();
    for (int v = 0; v < inst.inner_count(); ++v) v_plus.push_back(v);
    side["v_plus"] = v_plus;
    side["sources"] = inst.sources;
    side["sinks"] = inst.sinks;
    side["clauses"] = inst.derived.num_clauses();
    side["qaoa_depth_bound"] =
        qaoa_depth_bound(static_cast<double>(inst.total_variables()), degree);
    side["fraction_bound"] = fraction_bound(degree < 2 ? 2 : degree, delta);

    bool verified_ok = true;
    if (inst.total_variables() <= 22) {
        const bool satisfiable = brute_force_optimum(inst.derived).best_fraction == 1.0;
        const auto optima = brute_force_all_optima(inst.derived);
        int claimed = 0;
        for (const auto& x : optima) {
            bool form = true;
            for (int v : inst.sources) form = form && x[v] == -1;
            for (int v : inst.sinks) form = form && x[v] == 1;
            for (int v = 0; v < inst.inner_count(); ++v) form = form && x[v] == x[0];
            claimed += form;
        }
        const bool z2 = verify_partial_z2(inst, ctx.seed);
        side["verification"] = {{"satisfiable", satisfiable},
                                {"ground_states", optima.size()},
                                {"inner_constant_ground_states", claimed},
                                {"partial_z2", z2}};
        verified_ok = satisfiable && claimed == 2 && z2;
    } else {
        side["verification"] = {{"partial_z2", verify_partial_z2(inst, ctx.seed)}};
        verified_ok = side["verification"]["partial_z2"].get<bool>();
    }
    ctx.emit("nlts_summary.json", side.dump(2) + "\n");
    if (!verified_ok) throw CheckFailure("constructed instance failed verification");
}

// ---------------------------------------------------------------- gen

void cmd_gen(RunContext& ctx, int k, int degree, int n) {
    const XorInstance inst = generate_regular_triangle_free(k, degree, n, ctx.seed);
    ctx.emit("instance.json", instance_to_json(inst));
}

// ---------------------------------------------------------------- verify

struct CheckList {
    json checks = json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
        std::printf("  [%s] %s: %s\n", pass ? "ok" : "FAIL", name.c_str(), detail.c_str());
    }
};

void verify_qaoa_oracle(CheckList& out, std::uint64_t seed) {
    std::vector<XorInstance> insts;
    {
        XorInstance ring;
        ring.k = 2;
        ring.n = 8;
        for (int i = 0; i < 8; ++i)
            ring.clauses.push_back({{std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8)}, 1});
        canonicalize(ring);
        insts.push_back(ring);
    }
    // fixed generator seeds known to pass the triangle-free rejection
    // sampler; the caller's seed drives only the angle draws
    insts.push_back(generate_regular_triangle_free(3, 2, 15, 5));
    insts.push_back(generate_regular_triangle_free(2, 3, 14, 4));
    Rng rng(seed);
    double worst = 0.0;
    for (const XorInstance& inst : insts) {
        for (int s = 0; s < 20; ++s) {
            const QaoaAngles angles{rng.uniform() * std::numbers::pi / 2,
                                    rng.uniform() * std::numbers::pi / 2};
            worst = std::max(worst, std::abs(closed_form_instance_fraction(inst, angles) -
                                             statevector_expectation(inst, angles)));
        }
    }
    out.add("closed-form-vs-statevector", worst <= 1e-9, "max |diff| " + fmt(worst));
    const double ring_val =
        statevector_expectation(insts[0], {std::numbers::pi / 4, std::numbers::pi / 8});
    out.add("8-cycle-point", std::abs(ring_val - 0.75) <= 1e-12, fmt(ring_val));
}

void verify_threshold_mc(CheckList& out, std::uint64_t seed) {
    const XorInstance inst = generate_regular_triangle_free(2, 3, 20, 11);
    double worst_z = 0.0;
    for (int mu = 0; mu <= 2; ++mu) {
        const MonteCarloResult res = monte_carlo_run(inst, mu, 200000, seed);
        worst_z = std::max(worst_z,
                           std::abs(res.mean - exact_f(2, 2, mu)) / res.std_error);
    }
    out.add("mc-vs-exact-f", worst_z <= 4.0, "max |z| " + fmt(worst_z));
    const MonteCarloResult a = monte_carlo_run(inst, 1, 5000, seed);
    const MonteCarloResult b = monte_carlo_run(inst, 1, 5000, seed);
    out.add("mc-deterministic", a.mean == b.mean, fmt(a.mean));
}

void verify_parisi_invariants(CheckList& out, std::uint64_t seed) {
    ParisiSettings ci;
    ci.grid = 401;
    const double mu0 = evaluate_functional(MixedXi::pure(2), {{0.0, 1.0}, {0.0}}, ci);
    out.add("mu0-closed-form",
            std::abs(mu0 - 2.0 / std::sqrt(std::numbers::pi)) <= 1e-12, fmt(mu0));
    const ParisiTrace trace =
        evaluate_functional_trace(MixedXi::pure(3), {{0.0, 0.3, 1.0}, {0.0, 1.0}}, ci);
    bool convex = true;
    for (const auto& psi : trace.levels)
        for (std::size_t j = 1; j + 1 < psi.size(); ++j)
            convex = convex && psi[j + 1] - 2 * psi[j] + psi[j - 1] >= -1e-8;
    out.add("psi-levels-convex", convex, std::to_string(trace.levels.size()) + " levels");
    const double p2 = minimize_parisi(MixedXi::pure(2), 2, ci, seed, 1).value;
    out.add("p2-ci-mode", std::abs(p2 - 1.07928) / 1.07928 <= 0.01, fmt(p2));
}

void verify_nlts_groundstates(CheckList& out, std::uint64_t seed) {
    for (int len : {5, 6}) {
        const NltsInstance inst = construct_nlts(cycle_graph(len), 2, 9, seed);
        const bool sat = brute_force_optimum(inst.derived).best_fraction == 1.0;
        const auto optima = brute_force_all_optima(inst.derived);
        int claimed = 0;
        for (const auto& x : optima) {
            bool form = true;
            for (int v : inst.sources) form = form && x[v] == -1;
            for (int v : inst.sinks) form = form && x[v] == 1;
            for (int v = 0; v < inst.inner_count(); ++v) form = form && x[v] == x[0];
            claimed += form;
        }
        out.add("c" + std::to_string(len) + "-ground-states", sat && claimed == 2,
                std::to_string(optima.size()) + " optima, " + std::to_string(claimed) +
                    " inner-constant");
        out.add("c" + std::to_string(len) + "-partial-z2", verify_partial_z2(inst, seed),
                "exhaustive");
    }
}

void cmd_verify(RunContext& ctx, const std::string& suite) {
    CheckList list;
    std::printf("suite %s (seed %llu)\n", suite.c_str(),
                static_cast<unsigned long long>(ctx.seed));
    if (suite == "qaoa-oracle" || suite == "all") verify_qaoa_oracle(list, ctx.seed);
    if (suite == "threshold-mc" || suite == "all") verify_threshold_mc(list, ctx.seed);
    if (suite == "parisi-invariants" || suite == "all")
        verify_parisi_invariants(list, ctx.seed);
    if (suite == "nlts-groundstates" || suite == "all")
        verify_nlts_groundstates(list, ctx.seed);
    json report;
    report["suite"] = suite;
    report["seed"] = ctx.seed;
    report["checks"] = list.checks;
    report["passed"] = list.all_pass;
    ctx.emit("verify_report.json", report.dump(2) + "\n");
    if (!list.all_pass) throw CheckFailure("verification suite failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max kXOR numerical toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunContext ctx;
    int k_min = 2, k_max = 19, d_min = 0, d_max = 0;
    bool limit = false;
    int pieces = 2, restarts = 3;
    ParisiSettings settings;
    std::string model_file, suite = "all", inner_kind = "cycle";
    int ksat_k = 3, n_inner = 6, nlts_degree = 3, nlts_r = 9;
    int gen_k = 3, gen_degree = 2, gen_n = 15;
    double ksat_alpha = 0.0, nlts_delta = 0.0;

    auto add_k_range = [&](CLI::App* cmd) {
        cmd->add_option("--k-min", k_min)->capture_default_str();
        cmd->add_option("--k-max", k_max)->capture_default_str();
    };
    auto add_d_range = [&](CLI::App* cmd) {
        cmd->add_flag("--limit", limit, "large-degree limit rows instead of a D range");
        cmd->add_option("--d-min", d_min)->capture_default_str();
        cmd->add_option("--d-max", d_max)->capture_default_str();
    };
    auto add_parisi_opts = [&](CLI::App* cmd) {
        cmd->add_option("--pieces", pieces)->capture_default_str();
        cmd->add_option("--grid", settings.grid)->capture_default_str();
        cmd->add_option("--quad", settings.quad)->capture_default_str();
        cmd->add_option("--restarts", restarts)->capture_default_str();
    };

    CLI::App* qaoa = app.add_subcommand("qaoa-table", "depth-1 QAOA optima table");
    ctx.add_common(qaoa);
    add_k_range(qaoa);
    add_d_range(qaoa);

    CLI::App* thr = app.add_subcommand("threshold-table", "threshold algorithm table");
    ctx.add_common(thr);
    add_k_range(thr);
    add_d_range(thr);

    CLI::App* par = app.add_subcommand("parisi", "ground-state energy densities P(k)");
    ctx.add_common(par);
    add_k_range(par);
    par->add_option("--model", model_file, "mixed-model JSON file");
    add_parisi_opts(par);

    CLI::App* ksat = app.add_subcommand("ksat", "Max kSAT mode on a supplied mixed model");
    ctx.add_common(ksat);
    ksat->add_option("--k", ksat_k)->capture_default_str();
    ksat->add_option("--model", model_file, "mixed-model JSON file")->required();
    ksat->add_option("--alpha", ksat_alpha, "clause density for the fraction column");
    add_parisi_opts(ksat);

    CLI::App* cmp = app.add_subcommand("compare", "QAOA vs threshold vs Parisi bound");
    ctx.add_common(cmp);
    add_k_range(cmp);
    add_d_range(cmp);
    add_parisi_opts(cmp);

    CLI::App* nlts = app.add_subcommand("nlts", "partial-Z2 obstruction instance");
    ctx.add_common(nlts);
    nlts->add_option("--inner", inner_kind, "inner graph family")
        ->check(CLI::IsMember({"cycle", "random"}))
        ->capture_default_str();
    nlts->add_option("--n", n_inner, "inner vertex count")->capture_default_str();
    nlts->add_option("--degree", nlts_degree, "inner degree (random graphs)")
        ->capture_default_str();
    nlts->add_option("--r", nlts_r)->capture_default_str();
    nlts->add_option("--delta", nlts_delta, "slack in the fraction bound")
        ->capture_default_str();

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ctx.add_common(ver);
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"qaoa-oracle", "threshold-mc", "parisi-invariants",
                               "nlts-groundstates", "all"}))
        ->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "regular triangle-free instance");
    ctx.add_common(gen);
    gen->add_option("--k", gen_k)->capture_default_str();
    gen->add_option("--degree", gen_degree)->capture_default_str();
    gen->add_option("--n", gen_n)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (qaoa->parsed()) {
            ctx.subcommand = "qaoa-table";
            ctx.params = {{"k_min", k_min}, {"k_max", k_max}, {"d_min", d_min},
                          {"d_max", d_max}, {"limit", limit}, {"format", ctx.format}};
            if (!limit && d_max == 0 && d_min == 0 && !qaoa->count("--d-max")) limit = true;
            ctx.params["limit"] = limit;
            cmd_qaoa_table(ctx, k_min, k_max, d_min, d_max, limit);
        } else if (thr->parsed()) {
            ctx.subcommand = "threshold-table";
            if (!limit && !thr->count("--d-max")) limit = true;
            ctx.params = {{"k_min", k_min}, {"k_max", k_max}, {"d_min", d_min},
                          {"d_max", d_max}, {"limit", limit}, {"format", ctx.format}};
            cmd_threshold_table(ctx, k_min, k_max, d_min, d_max, limit);
        } else if (par->parsed()) {
            ctx.subcommand = "parisi";
            if (!par->count("--k-max")) k_max = 3;  // full-accuracy runs are slow
            ctx.params = {{"k_min", k_min},   {"k_max", k_max}, {"model", model_file},
                          {"pieces", pieces}, {"grid", settings.grid},
                          {"quad", settings.quad}, {"restarts", restarts}};
            cmd_parisi(ctx, k_min, k_max, model_file, pieces, settings, restarts);
        } else if (ksat->parsed()) {
            ctx.subcommand = "ksat";
            ctx.params = {{"k", ksat_k},       {"model", model_file},
                          {"pieces", pieces},  {"grid", settings.grid},
                          {"quad", settings.quad}, {"restarts", restarts},
                          {"alpha", ksat_alpha}};
            cmd_ksat(ctx, ksat_k, model_file, pieces, settings, restarts, ksat_alpha);
        } else if (cmp->parsed()) {
            ctx.subcommand = "compare";
            if (!limit && !cmp->count("--d-max")) limit = true;
            ctx.params = {{"k_min", k_min}, {"k_max", k_max}, {"d_min", d_min},
                          {"d_max", d_max}, {"limit", limit}, {"pieces", pieces},
                          {"grid", settings.grid}, {"quad", settings.quad}};
            cmd_compare(ctx, k_min, k_max, d_min, d_max, limit, pieces, settings);
        } else if (nlts->parsed()) {
            ctx.subcommand = "nlts";
            ctx.params = {{"inner", inner_kind}, {"n", n_inner},
                          {"degree", nlts_degree}, {"r", nlts_r}, {"delta", nlts_delta}};
            cmd_nlts(ctx, inner_kind, n_inner, nlts_degree, nlts_r, nlts_delta);
        } else if (ver->parsed()) {
            ctx.subcommand = "verify";
            ctx.params = {{"suite", suite}};
            cmd_verify(ctx, suite);
        } else if (gen->parsed()) {
            ctx.subcommand = "gen";
            ctx.params = {{"k", gen_k}, {"degree", gen_degree}, {"n", gen_n}};
            cmd_gen(ctx, gen_k, gen_degree, gen_n);
        }
        ctx.finish();
    } catch (const CheckFailure& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
