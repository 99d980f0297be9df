#include "c5/graph.hpp"

#include <algorithm>

#include "c5/canon.hpp"

namespace c5 {

Graph make_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("make_graph: n out of range");
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("make_graph: vertex out of range");
        if (u == v) throw std::invalid_argument("make_graph: loop");
        if (g.has_edge(u, v)) throw std::invalid_argument("make_graph: duplicate edge");
        g.adj[u] |= static_cast<uint16_t>(1u << v);
        g.adj[v] |= static_cast<uint16_t>(1u << u);
    }
    return g;
}

Graph induced(const Graph& g, uint16_t mask) {
    Graph h;
    std::array<int, kMaxVertices> pos{};
    for (int v = 0; v < g.n; ++v)
        if ((mask >> v) & 1u) pos[v] = h.n++;
    for (int v = 0; v < g.n; ++v) {
        if (!((mask >> v) & 1u)) continue;
        uint16_t nb = g.adj[v] & mask;
        while (nb) {
            int u = __builtin_ctz(nb);
            nb &= static_cast<uint16_t>(nb - 1);
            h.adj[pos[v]] |= static_cast<uint16_t>(1u << pos[u]);
        }
    }
    return h;
}

Graph relabel(const Graph& g, const std::array<uint8_t, kMaxVertices>& perm) {
    Graph h;
    h.n = g.n;
    for (int v = 0; v < g.n; ++v) {
        uint16_t nb = g.adj[v];
        while (nb) {
            int u = __builtin_ctz(nb);
            nb &= static_cast<uint16_t>(nb - 1);
            h.adj[perm[v]] |= static_cast<uint16_t>(1u << perm[u]);
        }
    }
    return h;
}

std::vector<Edge> edge_list(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && (g.adj[u] & g.adj[v])) return false;
    return true;
}

namespace {

// The 12 cyclic orders of a 5-set with the first element fixed: each is a
// permutation of positions 1..4, one per cycle up to rotation+reflection.
constexpr int kCyclic5[12][4] = {
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}, {1, 4, 3, 2},
    {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 1, 2, 4}, {3, 2, 1, 4},
};

}  // namespace

long count_c5(const Graph& g) {
    if (g.n < 5) return 0;
    long total = 0;
    int v[5];
    for (v[0] = 0; v[0] < g.n; ++v[0])
        for (v[1] = v[0] + 1; v[1] < g.n; ++v[1])
            for (v[2] = v[1] + 1; v[2] < g.n; ++v[2])
                for (v[3] = v[2] + 1; v[3] < g.n; ++v[3])
                    for (v[4] = v[3] + 1; v[4] < g.n; ++v[4]) {
                        for (const auto& ord : kCyclic5) {
                            int a = v[0], b = v[ord[0]], c = v[ord[1]], d = v[ord[2]],
                                e = v[ord[3]];
                            if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                                g.has_edge(d, e) && g.has_edge(e, a))
                                ++total;
                        }
                    }
    return total;
}

long count_induced(const Graph& g, const Graph& h) {
    if (h.n > 7) throw std::invalid_argument("count_induced: pattern larger than 7");
    if (h.n > g.n) return 0;
    if (h.n == 0) return 1;
    CanonicalLabel target = canonical_form(h);
    std::array<int, 8> hdeg_sorted{};
    for (int v = 0; v < h.n; ++v) hdeg_sorted[v] = h.degree(v);
    std::sort(hdeg_sorted.begin(), hdeg_sorted.begin() + h.n);

    long total = 0;
    std::vector<int> pick(h.n);
    // enumerate h.n-subsets of V(g)
    for (int i = 0; i < h.n; ++i) pick[i] = i;
    while (true) {
        uint16_t mask = 0;
        for (int i = 0; i < h.n; ++i) mask |= static_cast<uint16_t>(1u << pick[i]);
        Graph sub = induced(g, mask);
        std::array<int, 8> deg{};
        for (int v = 0; v < sub.n; ++v) deg[v] = sub.degree(v);
        std::sort(deg.begin(), deg.begin() + sub.n);
        if (deg == hdeg_sorted && canonical_form(sub).bytes == target.bytes) ++total;

        int i = h.n - 1;
        while (i >= 0 && pick[i] == g.n - h.n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < h.n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

Graph blowup(const BlowupSpec& spec) {
    if (static_cast<int>(spec.sizes.size()) != spec.base.n)
        throw std::invalid_argument("blowup: sizes length must equal base order");
    int total = 0;
    for (int s : spec.sizes) {
        if (s < 0) throw std::invalid_argument("blowup: negative part size");
        total += s;
    }
    if (total > kMaxVertices) throw std::invalid_argument("blowup: result exceeds 16 vertices");
    std::vector<int> start(spec.base.n + 1, 0);
    for (int i = 0; i < spec.base.n; ++i) start[i + 1] = start[i] + spec.sizes[i];
    Graph g;
    g.n = total;
    for (int i = 0; i < spec.base.n; ++i)
        for (int j = i + 1; j < spec.base.n; ++j) {
            if (!spec.base.has_edge(i, j)) continue;
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v) {
                    g.adj[u] |= static_cast<uint16_t>(1u << v);
                    g.adj[v] |= static_cast<uint16_t>(1u << u);
                }
        }
    return g;
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    if (n == 2) e.pop_back();  // avoid the duplicate {0,1}
    return make_graph(n, e);
}

Graph balanced_blowup_c5(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("balanced_blowup_c5: n out of range");
    BlowupSpec spec{pentagon(), {}};
    for (int i = 0; i < 5; ++i) spec.sizes.push_back((n + i) / 5);
    return blowup(spec);
}

Graph pentagon_plus() { return blowup({pentagon(), {2, 1, 1, 1, 1}}); }

Graph mobius_ladder_8() {
    std::vector<Edge> e;
    for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
    return make_graph(8, e);
}

}  // namespace c5
