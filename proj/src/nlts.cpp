#include "kxor/nlts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kxor/rng.hpp"

namespace kxor {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

bool is_regular_simple(const Graph& g, int d) {
    std::vector<int> deg(g.n, 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n) return false;
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
        deg[u]++;
        deg[v]++;
    }
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

Graph random_regular_graph(int n, int d, std::uint64_t seed, int budget) {
    if (n < d + 1 || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("regular graph needs n > d and n*d even");
    Rng rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        Graph g;
        g.n = n;
        bool ok = true;
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second) ok = false;
            g.edges.emplace_back(u, v);
        }
        if (ok) return g;
    }
    throw std::runtime_error("pairing-model budget exhausted for a simple regular graph");
}

NltsInstance construct_nlts(const Graph& inner, int degree, int r, std::uint64_t seed) {
    if (r <= 4) throw std::invalid_argument("construction needs ratio r > 4");
    if (!is_regular_simple(inner, degree))
        throw std::invalid_argument("inner graph must be simple and degree-regular");
    const int n_inner = inner.n;
    const int n_edges = inner.num_edges();
    // floor(n'/r) up to the O(1) slack; desk-scale graphs still need one
    // source and one sink
    const int n_new = std::max(2, n_inner / r);
    const int cap = 2 * degree * r;
    const int n_sources = (n_new + 1) / 2;
    const int n_sinks = n_new / 2;
    if (static_cast<long long>(n_sources) * cap < n_edges ||
        static_cast<long long>(n_sinks) * cap < n_edges) {
        throw std::invalid_argument("degree cap 2*D*r infeasible: too few new nodes for " +
                                    std::to_string(n_edges) + " edges");
    }

    NltsInstance inst;
    inst.inner = inner;
    inst.inner_degree = degree;
    inst.r = r;
    for (int i = 0; i < n_sources; ++i) inst.sources.push_back(n_inner + i);
    for (int i = 0; i < n_sinks; ++i) inst.sinks.push_back(n_inner + n_sources + i);

    Rng rng(seed);
    // round-robin over a random node order along a random edge ordering,
    // skipping nodes at the cap
    auto assign = [&](const std::vector<int>& nodes) {
        std::vector<int> edge_order(n_edges);
        std::iota(edge_order.begin(), edge_order.end(), 0);
        rng.shuffle(edge_order);
        std::vector<int> node_order = nodes;
        rng.shuffle(node_order);
        std::vector<int> load(nodes.size(), 0);
        std::vector<int> result(n_edges, -1);
        std::size_t cursor = 0;
        for (int e : edge_order) {
            for (std::size_t tries = 0; tries < node_order.size(); ++tries) {
                const std::size_t idx = (cursor + tries) % node_order.size();
                if (load[idx] < cap) {
                    result[e] = node_order[idx];
                    load[idx]++;
                    cursor = idx + 1;
                    break;
                }
            }
            if (result[e] < 0) throw std::runtime_error("edge assignment ran out of capacity");
        }
        return result;
    };
    inst.edge_source = assign(inst.sources);
    inst.edge_sink = assign(inst.sinks);

    inst.derived.k = 3;
    inst.derived.n = n_inner + n_new;
    for (int e = 0; e < n_edges; ++e) {
        auto [u, v] = inner.edges[e];
        inst.derived.clauses.push_back({{inst.edge_source[e], u, v}, -1});
        inst.derived.clauses.push_back({{inst.edge_sink[e], u, v}, +1});
    }
    canonicalize(inst.derived);
    validate_instance(inst.derived);
    return inst;
}

namespace {

int satisfied_count(const XorInstance& inst, const std::vector<int>& x) {
    int sat = 0;
    for (const Clause& c : inst.clauses) {
        int prod = 1;
        for (int v : c.vars) prod *= x[v];
        if (prod == c.sign) sat++;
    }
    return sat;
}

}  // namespace

bool verify_partial_z2(const NltsInstance& inst, std::uint64_t seed, int exhaustive_cap,
                       int samples) {
    const int n = inst.total_variables();
    const int n_inner = inst.inner_count();
    auto check = [&](std::vector<int> x) {
        const int before = satisfied_count(inst.derived, x);
        for (int v = 0; v < n_inner; ++v) x[v] = -x[v];
        return before == satisfied_count(inst.derived, x);
    };
    if (n <= exhaustive_cap) {
        const std::uint64_t total = 1ull << n;
        for (std::uint64_t z = 0; z < total; ++z) {
            std::vector<int> x(n);
            for (int i = 0; i < n; ++i) x[i] = (z >> i) & 1u ? -1 : 1;
            if (!check(std::move(x))) return false;
        }
        return true;
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.sign();
        if (!check(std::move(x))) return false;
    }
    return true;
}

long long energy(const NltsInstance& inst, const std::vector<int>& assignment) {
    return inst.derived.num_clauses() - satisfied_count(inst.derived, assignment);
}

double qaoa_depth_bound(double n_total, int inner_degree) {
    if (inner_degree < 1) throw std::invalid_argument("inner degree must be >= 1");
    if (n_total <= 5184.0) return 0.0;
    return std::log2(n_total / 5184.0) / (648.0 * inner_degree);
}

double fraction_bound(int inner_degree, double delta) {
    if (inner_degree < 2 || delta < 0.0)
        throw std::invalid_argument("fraction_bound needs D >= 2, delta >= 0");
    return 0.99 + (2.0 * std::sqrt(inner_degree - 1.0) + delta) / (100.0 * inner_degree);
}

long long max_cut_value(const Graph& g, int cap) {
    if (g.n > cap) throw std::invalid_argument("max cut brute force refused: n exceeds cap");
    long long best = 0;
    const std::uint64_t total = 1ull << g.n;
    for (std::uint64_t z = 0; z < total; ++z) {
        long long cut = 0;
        for (auto [u, v] : g.edges)
            cut += (((z >> u) ^ (z >> v)) & 1u);
        best = std::max(best, cut);
    }
    return best;
}

}  // namespace kxor
