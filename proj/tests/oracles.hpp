// Brute-force reference implementations used as independent oracles in the
// tests. Everything here is deliberately naive: full permutation loops for
// isomorphism, full map enumeration for densities, mask filtering for the
// census. None of it shares code with the library paths it checks.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "c5/canon.hpp"
#include "c5/densities.hpp"
#include "c5/flags.hpp"
#include "c5/graph.hpp"
#include "c5/rational.hpp"

namespace oracle {

using c5::Graph;

inline void for_each_perm(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

inline bool iso_under(const Graph& g, const Graph& h, const std::vector<int>& p) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) != h.has_edge(p[u], p[v])) return false;
    return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    bool found = false;
    for_each_perm(g.n, [&](const std::vector<int>& p) {
        if (!found && iso_under(g, h, p)) found = true;
    });
    return found;
}

inline long aut_count(const Graph& g) {
    long count = 0;
    for_each_perm(g.n, [&](const std::vector<int>& p) {
        if (iso_under(g, g, p)) ++count;
    });
    return count;
}

// root-preserving flag isomorphism by raw permutation search
inline bool flag_isomorphic(const Graph& g, const std::vector<int>& gr, const Graph& h,
                            const std::vector<int>& hr) {
    if (g.n != h.n || gr.size() != hr.size()) return false;
    bool found = false;
    for_each_perm(g.n, [&](const std::vector<int>& p) {
        if (found) return;
        for (size_t i = 0; i < gr.size(); ++i)
            if (p[gr[i]] != hr[i]) return;
        if (iso_under(g, h, p)) found = true;
    });
    return found;
}

inline Graph from_mask(int n, uint32_t mask) {
    Graph g;
    g.n = n;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((mask >> idx) & 1u) {
                g.adj[i] |= static_cast<uint16_t>(1u << j);
                g.adj[j] |= static_cast<uint16_t>(1u << i);
            }
    return g;
}

// number of triangle-free isomorphism classes on n labeled vertices,
// counted by filtering all 2^C(n,2) graphs and bucketing via the library's
// canonical form (used to cross-check the generator's class counts)
inline long labeled_census(int n) {
    int bits = n * (n - 1) / 2;
    std::set<std::string> classes;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        Graph g = from_mask(n, mask);
        if (!c5::is_triangle_free(g)) continue;
        classes.insert(c5::canonical_form(g).bytes);
    }
    return static_cast<long>(classes.size());
}

// one representative per isomorphism class of ALL graphs on k vertices,
// triangle-free or not, found by raw permutation bucketing
inline std::vector<Graph> all_classes(int k) {
    std::vector<Graph> reps;
    int bits = k * (k - 1) / 2;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        Graph g = from_mask(k, mask);
        bool fresh = true;
        for (const Graph& r : reps)
            if (isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return reps;
}

// closed walks of length five; every such walk in a triangle-free graph
// wraps a pentagon exactly once in each of the 10 traversals
inline long trace_a5(const Graph& g) {
    long a[16][16] = {};
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) a[i][j] = g.has_edge(i, j);
    long a2[16][16] = {}, a4[16][16] = {};
    for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k)
            if (a[i][k])
                for (int j = 0; j < g.n; ++j) a2[i][j] += a[k][j];
    for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k)
            if (a2[i][k])
                for (int j = 0; j < g.n; ++j) a4[i][j] += a2[i][k] * a2[k][j];
    long tr = 0;
    for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.n; ++k) tr += a4[i][k] * a[k][i];
    return tr;
}

// seeded random triangle-free graph by greedy edge insertion
inline Graph random_triangle_free(int n, std::mt19937& rng, int tries_factor = 4) {
    Graph g;
    g.n = n;
    for (int t = 0; t < tries_factor * n * n; ++t) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        if (g.adj[u] & g.adj[v]) continue;  // common neighbor: would close a triangle
        g.adj[u] |= static_cast<uint16_t>(1u << v);
        g.adj[v] |= static_cast<uint16_t>(1u << u);
    }
    return g;
}

// direct density oracle: enumerate every map from |H| points to the parts
// of the step graphon and test the induced pattern by permutation search
inline c5::Rational direct_density(const Graph& source, const Graph& h) {
    int n = source.n, k = h.n;
    long count = 0, total = 0;
    std::vector<int> f(k, 0);
    while (true) {
        ++total;
        Graph pat;
        pat.n = k;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v)
                if (source.has_edge(f[u], f[v])) {
                    pat.adj[u] |= static_cast<uint16_t>(1u << v);
                    pat.adj[v] |= static_cast<uint16_t>(1u << u);
                }
        if (isomorphic(pat, h)) ++count;
        int i = k - 1;
        while (i >= 0 && f[i] == n - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    c5::Rational r(count, total);
    r.canonicalize();
    return r;
}

inline Graph petersen() {
    std::vector<c5::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return c5::make_graph(10, e);
}

}  // namespace oracle
