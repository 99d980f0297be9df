#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace c5 {

constexpr int kMaxVertices = 16;

// Small simple graph on at most 16 vertices, one adjacency bitset per
// vertex. Immutable in spirit: every operation takes graphs by value or
// const reference and returns fresh ones, so concurrent use is safe.
struct Graph {
    int n = 0;
    std::array<uint16_t, kMaxVertices> adj{};

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
    uint16_t vertex_mask() const { return static_cast<uint16_t>((1u << n) - 1u); }

    bool operator==(const Graph&) const = default;
};

using Edge = std::pair<int, int>;

Graph make_graph(int n, const std::vector<Edge>& edges);

// Induced subgraph on the vertices of `mask`, relabeled 0..k-1 in
// increasing original order.
Graph induced(const Graph& g, uint16_t mask);

// Relabeled copy: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::array<uint8_t, kMaxVertices>& perm);

std::vector<Edge> edge_list(const Graph& g);

bool is_triangle_free(const Graph& g);

// Number of 5-cycle subgraphs, each cycle counted once. Works for general
// graphs; in a triangle-free graph every 5-cycle is induced.
long count_c5(const Graph& g);

// Number of vertex subsets S with g[S] isomorphic to h. Requires |h| <= 7.
long count_induced(const Graph& g, const Graph& h);

struct BlowupSpec {
    Graph base;
    std::vector<int> sizes;  // one entry per base vertex, >= 0
};

// Parts become independent sets, base edges become complete bipartite
// joins between the corresponding parts.
Graph blowup(const BlowupSpec& spec);

Graph cycle(int n);
inline Graph pentagon() { return cycle(5); }

// Balanced blow-up of C5 on n vertices (part sizes floor((n+i)/5)).
Graph balanced_blowup_c5(int n);

// C5 with one vertex duplicated; the 6-vertex balanced blow-up.
Graph pentagon_plus();

// 8-cycle 0..7 plus the four main diagonals {i, i+4}.
Graph mobius_ladder_8();

}  // namespace c5
