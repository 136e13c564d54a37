#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kxor {

// One XOR clause: product of the +-1 values of `vars` must equal `sign`
// for the clause to be satisfied. `vars` is kept sorted.
struct Clause {
    std::vector<int> vars;
    int sign = 1;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// A k-uniform weighted XOR CSP over n +-1 variables.
struct XorInstance {
    int k = 0;
    int n = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    friend bool operator==(const XorInstance&, const XorInstance&) = default;
};

// Throws std::invalid_argument if arity, variable range, or duplicate-clause
// invariants are violated. Contradictory pairs (same vars, opposite signs)
// are allowed here; use has_contradictory_pair to flag them.
void validate_instance(const XorInstance& inst);

bool has_contradictory_pair(const XorInstance& inst);

// Sorts each clause's variables and the clause list lexicographically by
// vars (sign breaks ties). All serialization goes through this form.
void canonicalize(XorInstance& inst);

// Number of clauses each variable appears in.
std::vector<int> variable_degrees(const XorInstance& inst);

// For one clause, the per-member "other degree" vector (degree minus one).
std::vector<int> clause_other_degrees(const XorInstance& inst,
                                      const std::vector<int>& degrees,
                                      int clause_index);

// True iff (a) every variable pair co-occurs in at most one clause,
// (b) clause-mates share no common neighbor outside their clause, and
// (c) variables with no common clause share at most one neighbor.
// (a)+(b) exclude multi-edges and triangles; (c) excludes the short even
// cycles that break the one-local analysis (a 4-cycle is the smallest
// 2-regular 2-uniform structure rejected, so only cycles of length >= 5
// pass at k=2).
bool check_triangle_free(const XorInstance& inst);

// Fraction of satisfied clauses; assignment entries are +-1.
double evaluate_fraction(const XorInstance& inst, const std::vector<int>& assignment);

XorInstance flip_all_signs(const XorInstance& inst);

struct BruteForceResult {
    long long best_satisfied = 0;
    double best_fraction = 0.0;
    std::vector<int> assignment;  // lexicographically smallest optimum, +1 sorts first
};

// Exact optimum over all 2^n assignments. Refuses n > cap.
BruteForceResult brute_force_optimum(const XorInstance& inst, int cap = 24);

// Same scan, but returns every optimal assignment (in lexicographic order).
std::vector<std::vector<int>> brute_force_all_optima(const XorInstance& inst, int cap = 24);

struct GeneratorOptions {
    int rejection_budget = 10000;
};

// Configuration-model sample of a degree-regular k-uniform instance,
// rejected until it passes check_triangle_free. Signs are uniform +-1.
// Deterministic given (arguments, seed).
XorInstance generate_regular_triangle_free(int k, int degree, int n, std::uint64_t seed,
                                           const GeneratorOptions& opts = {});

// Canonical JSON format:
//   {"k": int, "n": int, "clauses": [{"vars": [int,...], "sign": 1|-1}, ...]}
// with clauses sorted lexicographically by vars.
XorInstance read_instance(const std::string& path);
void write_instance(const XorInstance& inst, const std::string& path);

std::string instance_to_json(const XorInstance& inst);
XorInstance instance_from_json(const std::string& text);

}  // namespace kxor
