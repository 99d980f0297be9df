#include "c5/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "c5/canon.hpp"

namespace c5 {

namespace {

constexpr int kEnumCap = 12;

// All independent vertex subsets of g (including the empty set), as masks.
std::vector<uint16_t> independent_masks(const Graph& g) {
    std::vector<uint16_t> out;
    uint16_t full = g.vertex_mask();
    for (uint32_t m = 0; m <= full; ++m) {
        bool ok = true;
        uint16_t mm = static_cast<uint16_t>(m);
        uint16_t rest = mm;
        while (rest && ok) {
            int v = __builtin_ctz(rest);
            rest &= static_cast<uint16_t>(rest - 1);
            if (g.adj[v] & mm) ok = false;
        }
        if (ok) out.push_back(mm);
        if (full == 0) break;
    }
    return out;
}

Graph extend(const Graph& g, uint16_t nbrs) {
    Graph h = g;
    int v = h.n++;
    h.adj[v] = nbrs;
    uint16_t rest = nbrs;
    while (rest) {
        int u = __builtin_ctz(rest);
        rest &= static_cast<uint16_t>(rest - 1);
        h.adj[u] |= static_cast<uint16_t>(1u << v);
    }
    return h;
}

struct Generator {
    int target_n;
    const std::function<void(const Graph&)>& visit;
    long count = 0;

    void grow(const Graph& g, const CanonResult& canon_g) {
        if (g.n == target_n) {
            visit(g);
            ++count;
            return;
        }
        std::vector<uint16_t> sets = independent_masks(g);
        std::vector<uint16_t> reps = mask_orbit_reps(sets, canon_g.generators, g.n);
        std::vector<uint16_t> uniq;
        for (size_t i = 0; i < sets.size(); ++i)
            if (sets[i] == reps[i]) uniq.push_back(sets[i]);
        std::sort(uniq.begin(), uniq.end());
        for (uint16_t s : uniq) {
            Graph h = extend(g, s);
            CanonResult ch = canonical_full(h);
            // canonical deletion vertex: preimage of the last canonical slot
            int del = 0;
            for (int v = 0; v < h.n; ++v)
                if (ch.labeling[v] == h.n - 1) {
                    del = v;
                    break;
                }
            if (ch.orbit[del] != ch.orbit[h.n - 1]) continue;
            grow(h, ch);
        }
    }
};

}  // namespace

long enumerate_triangle_free(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 0 || n > kEnumCap)
        throw std::invalid_argument("enumerate_triangle_free: n must be in [0,12]");
    Graph empty;
    Generator gen{n, visit};
    gen.grow(empty, canonical_full(empty));
    return gen.count;
}

Census extremal_c5(int n) {
    if (n < 1 || n > kEnumCap) throw std::invalid_argument("extremal_c5: n must be in [1,12]");
    Census census;
    census.n = n;
    enumerate_triangle_free(n, [&](const Graph& g) {
        ++census.total;
        long c = count_c5(g);
        if (c > census.max_c5) {
            census.max_c5 = c;
            census.winners.clear();
        }
        if (c == census.max_c5) census.winners.push_back(canonical_form(g).bytes);
    });
    std::sort(census.winners.begin(), census.winners.end());
    return census;
}

}  // namespace c5
