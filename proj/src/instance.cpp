#include "kxor/instance.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kxor/rng.hpp"
#include "json.hpp"

namespace kxor {

void validate_instance(const XorInstance& inst) {
    if (inst.k < 2) throw std::invalid_argument("instance arity k must be >= 2");
    if (inst.n < inst.k) throw std::invalid_argument("instance needs at least k variables");
    std::set<std::pair<std::vector<int>, int>> seen;
    for (const Clause& c : inst.clauses) {
        if (static_cast<int>(c.vars.size()) != inst.k)
            throw std::invalid_argument("clause arity does not match instance k");
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("clause sign must be +1 or -1");
        std::vector<int> sorted = c.vars;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("clause has repeated variable");
        if (sorted.front() < 0 || sorted.back() >= inst.n)
            throw std::invalid_argument("clause variable index out of range");
        if (!seen.insert({sorted, c.sign}).second)
            throw std::invalid_argument("duplicate clause (same variables and sign)");
    }
}

bool has_contradictory_pair(const XorInstance& inst) {
    std::set<std::vector<int>> positive, negative;
    for (const Clause& c : inst.clauses) {
        std::vector<int> sorted = c.vars;
        std::sort(sorted.begin(), sorted.end());
        (c.sign == 1 ? positive : negative).insert(std::move(sorted));
    }
    for (const auto& vars : positive)
        if (negative.count(vars)) return true;
    return false;
}

void canonicalize(XorInstance& inst) {
    for (Clause& c : inst.clauses) std::sort(c.vars.begin(), c.vars.end());
    std::sort(inst.clauses.begin(), inst.clauses.end(), [](const Clause& a, const Clause& b) {
        if (a.vars != b.vars) return a.vars < b.vars;
        return a.sign < b.sign;
    });
}

std::vector<int> variable_degrees(const XorInstance& inst) {
    std::vector<int> deg(inst.n, 0);
    for (const Clause& c : inst.clauses)
        for (int v : c.vars) deg[v]++;
    return deg;
}

std::vector<int> clause_other_degrees(const XorInstance& inst,
                                      const std::vector<int>& degrees,
                                      int clause_index) {
    std::vector<int> out;
    for (int v : inst.clauses[clause_index].vars) out.push_back(degrees[v] - 1);
    return out;
}

bool check_triangle_free(const XorInstance& inst) {
    const int n = inst.n;
    // clauses containing each variable
    std::vector<std::vector<int>> var_clauses(n);
    for (int ci = 0; ci < inst.num_clauses(); ++ci)
        for (int v : inst.clauses[ci].vars) var_clauses[v].push_back(ci);

    // (a) pair co-occurrence <= 1
    std::map<std::pair<int, int>, int> pair_count;
    for (const Clause& c : inst.clauses) {
        for (std::size_t i = 0; i < c.vars.size(); ++i)
            for (std::size_t j = i + 1; j < c.vars.size(); ++j) {
                int u = std::min(c.vars[i], c.vars[j]);
                int v = std::max(c.vars[i], c.vars[j]);
                if (++pair_count[{u, v}] > 1) return false;
            }
    }

    std::vector<std::set<int>> nbrs(n);
    for (const Clause& c : inst.clauses)
        for (int u : c.vars)
            for (int v : c.vars)
                if (u != v) nbrs[u].insert(v);

    auto common_count = [&](int u, int v, const std::set<int>& exclude) {
        int cnt = 0;
        for (int w : nbrs[u])
            if (!exclude.count(w) && nbrs[v].count(w)) cnt++;
        return cnt;
    };

    // (b) clause-mates: no common neighbor outside the clause
    for (const Clause& c : inst.clauses) {
        std::set<int> members(c.vars.begin(), c.vars.end());
        for (std::size_t i = 0; i < c.vars.size(); ++i)
            for (std::size_t j = i + 1; j < c.vars.size(); ++j)
                if (common_count(c.vars[i], c.vars[j], members) > 0) return false;
    }

    // (c) non-clause-mates: at most one common neighbor
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (nbrs[u].count(v)) continue;  // handled in (b)
            if (common_count(u, v, {}) > 1) return false;
        }
    return true;
}

double evaluate_fraction(const XorInstance& inst, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != inst.n)
        throw std::invalid_argument("assignment length does not match variable count");
    if (inst.clauses.empty()) return 0.0;
    int satisfied = 0;
    for (const Clause& c : inst.clauses) {
        int prod = 1;
        for (int v : c.vars) prod *= assignment[v];
        if (prod == c.sign) satisfied++;
    }
    return static_cast<double>(satisfied) / static_cast<double>(inst.num_clauses());
}

XorInstance flip_all_signs(const XorInstance& inst) {
    XorInstance out = inst;
    for (Clause& c : out.clauses) c.sign = -c.sign;
    return out;
}

namespace {

// Bitmask encoding used by the exhaustive scans: variable i maps to bit
// (n-1-i) so that ascending mask order is lexicographic order on
// assignments with +1 sorting before -1.
struct MaskedClauses {
    std::vector<std::uint32_t> masks;
    std::vector<std::uint32_t> targets;  // parity bit that satisfies the clause
};

MaskedClauses build_masks(const XorInstance& inst) {
    MaskedClauses mc;
    for (const Clause& c : inst.clauses) {
        std::uint32_t mask = 0;
        for (int v : c.vars) mask |= (1u << (inst.n - 1 - v));
        mc.masks.push_back(mask);
        mc.targets.push_back(c.sign == -1 ? 1u : 0u);
    }
    return mc;
}

std::vector<int> mask_to_assignment(std::uint32_t z, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = ((z >> (n - 1 - i)) & 1u) ? -1 : 1;
    return x;
}

}  // namespace

BruteForceResult brute_force_optimum(const XorInstance& inst, int cap) {
    if (inst.n > cap) {
        throw std::invalid_argument("brute force refused: n=" + std::to_string(inst.n) +
                                    " exceeds cap " + std::to_string(cap));
    }
    validate_instance(inst);
    MaskedClauses mc = build_masks(inst);
    const std::uint64_t total = 1ull << inst.n;
    long long best = -1;
    std::uint32_t best_z = 0;
    for (std::uint64_t z = 0; z < total; ++z) {
        long long sat = 0;
        for (std::size_t i = 0; i < mc.masks.size(); ++i)
            sat += ((std::popcount(static_cast<std::uint32_t>(z) & mc.masks[i]) & 1u) == mc.targets[i]);
        if (sat > best) {
            best = sat;
            best_z = static_cast<std::uint32_t>(z);
        }
    }
    BruteForceResult res;
    res.best_satisfied = best;
    res.best_fraction = inst.clauses.empty() ? 0.0
                                             : static_cast<double>(best) / inst.num_clauses();
    res.assignment = mask_to_assignment(best_z, inst.n);
    return res;
}

std::vector<std::vector<int>> brute_force_all_optima(const XorInstance& inst, int cap) {
    if (inst.n > cap)
        throw std::invalid_argument("brute force refused: n exceeds cap");
    validate_instance(inst);
    MaskedClauses mc = build_masks(inst);
    const std::uint64_t total = 1ull << inst.n;
    long long best = -1;
    std::vector<std::uint32_t> arg;
    for (std::uint64_t z = 0; z < total; ++z) {
        long long sat = 0;
        for (std::size_t i = 0; i < mc.masks.size(); ++i)
            sat += ((std::popcount(static_cast<std::uint32_t>(z) & mc.masks[i]) & 1u) == mc.targets[i]);
        if (sat > best) {
            best = sat;
            arg.clear();
        }
        if (sat == best) arg.push_back(static_cast<std::uint32_t>(z));
    }
    std::vector<std::vector<int>> out;
    for (std::uint32_t z : arg) out.push_back(mask_to_assignment(z, inst.n));
    return out;
}

XorInstance generate_regular_triangle_free(int k, int degree, int n, std::uint64_t seed,
                                           const GeneratorOptions& opts) {
    if (k < 2 || degree < 1 || n < k)
        throw std::invalid_argument("generator needs k >= 2, degree >= 1, n >= k");
    if ((static_cast<long long>(n) * degree) % k != 0)
        throw std::invalid_argument("n*degree must be divisible by k");
    const int m = n * degree / k;
    Rng rng(seed);
    for (int attempt = 0; attempt < opts.rejection_budget; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * degree);
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs.push_back(v);
        rng.shuffle(stubs);

        XorInstance inst;
        inst.k = k;
        inst.n = n;
        bool ok = true;
        for (int ci = 0; ci < m && ok; ++ci) {
            Clause c;
            c.vars.assign(stubs.begin() + static_cast<std::size_t>(ci) * k,
                          stubs.begin() + static_cast<std::size_t>(ci + 1) * k);
            std::sort(c.vars.begin(), c.vars.end());
            if (std::adjacent_find(c.vars.begin(), c.vars.end()) != c.vars.end()) ok = false;
            c.sign = rng.sign();
            inst.clauses.push_back(std::move(c));
        }
        if (!ok || !check_triangle_free(inst)) continue;
        canonicalize(inst);
        return inst;
    }
    throw std::runtime_error("rejection budget of " + std::to_string(opts.rejection_budget) +
                             " attempts exhausted generating a triangle-free instance");
}

std::string instance_to_json(const XorInstance& inst) {
    XorInstance canon = inst;
    canonicalize(canon);
    nlohmann::ordered_json j;
    j["k"] = canon.k;
    j["n"] = canon.n;
    j["clauses"] = nlohmann::ordered_json::array();
    for (const Clause& c : canon.clauses) {
        nlohmann::ordered_json jc;
        jc["vars"] = c.vars;
        jc["sign"] = c.sign;
        j["clauses"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

XorInstance instance_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    XorInstance inst;
    try {
        inst.k = j.at("k").get<int>();
        inst.n = j.at("n").get<int>();
        for (const auto& jc : j.at("clauses")) {
            Clause c;
            c.vars = jc.at("vars").get<std::vector<int>>();
            c.sign = jc.at("sign").get<int>();
            inst.clauses.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("instance field error: ") + e.what());
    }
    validate_instance(inst);
    canonicalize(inst);
    return inst;
}

XorInstance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return instance_from_json(ss.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_instance(const XorInstance& inst, const std::string& path) {
    validate_instance(inst);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open instance file for writing: " + path);
    out << instance_to_json(inst);
}

}  // namespace kxor
