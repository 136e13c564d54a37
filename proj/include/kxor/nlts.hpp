#pragma once

#include <cstdint>
#include <vector>

#include "kxor/instance.hpp"

namespace kxor {

// Simple undirected graph.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int num_edges() const { return static_cast<int>(edges.size()); }
};

Graph cycle_graph(int n);

// Pairing-model sample of a d-regular simple graph; rejects multi-edges and
// self-loops. Deterministic given seed.
Graph random_regular_graph(int n, int d, std::uint64_t seed, int budget = 10000);

// Is the graph simple and d-regular?
bool is_regular_simple(const Graph& g, int d);

// Max 3XOR construction with partial Z2 symmetry: every inner edge (u,v)
// becomes a source clause {a(e),u,v} satisfied by product -1 and a sink
// clause {b(e),u,v} satisfied by product +1. Variables 0..n'-1 are the inner
// vertices (the symmetric set V+); sources and sinks follow.
struct NltsInstance {
    Graph inner;
    int inner_degree = 0;
    int r = 0;
    std::vector<int> sources;      // variable ids
    std::vector<int> sinks;        // variable ids
    std::vector<int> edge_source;  // per inner edge
    std::vector<int> edge_sink;
    XorInstance derived;

    int inner_count() const { return inner.n; }
    int total_variables() const { return derived.n; }
};

// Adds max(2, floor(n'/r)) new nodes split into sources and sinks (sizes
// differing by at most 1) and assigns edges round-robin along two random
// edge orderings, keeping every new node's degree at most 2*D*r.
NltsInstance construct_nlts(const Graph& inner, int degree, int r, std::uint64_t seed);

// Satisfied-count invariance under flipping every inner vertex; exhaustive
// when total variables <= exhaustive_cap, otherwise a seeded sample.
bool verify_partial_z2(const NltsInstance& inst, std::uint64_t seed,
                       int exhaustive_cap = 22, int samples = 2000);

// Violated-clause count of an assignment (the construction's energy).
long long energy(const NltsInstance& inst, const std::vector<int>& assignment);

// Largest depth excluded by the obstruction: log2(n/5184) / (648 D);
// 0 when n <= 5184.
double qaoa_depth_bound(double n_total, int inner_degree);

// Satisfying-fraction ceiling 0.99 + (2 sqrt(D-1) + delta) / (100 D).
double fraction_bound(int inner_degree, double delta);

// Exact maximum cut of a small graph (exhaustive, n <= cap).
long long max_cut_value(const Graph& g, int cap = 24);

}  // namespace kxor
