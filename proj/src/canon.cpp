#include "c5/canon.hpp"

#include <algorithm>
#include <map>

#include "c5/graph6.hpp"

namespace c5 {

Perm identity_perm(int n) {
    Perm p{};
    for (int i = 0; i < n; ++i) p[i] = static_cast<uint8_t>(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b, int n) {
    Perm c{};
    for (int i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse_perm(const Perm& a, int n) {
    Perm c{};
    for (int i = 0; i < n; ++i) c[a[i]] = static_cast<uint8_t>(i);
    return c;
}

namespace {

bool is_identity(const Perm& p, int n) {
    for (int i = 0; i < n; ++i)
        if (p[i] != i) return false;
    return true;
}

// --- deterministic Schreier-Sims, sized for n <= 16 -------------------

struct BSGS {
    int n;
    struct Level {
        int beta = 0;
        std::vector<int> orbit;                    // points in discovery order
        std::array<int16_t, kMaxVertices> where{};  // point -> index in reps, -1 if absent
        std::vector<Perm> reps;                    // coset reps, reps[i](beta) = orbit[i]
        std::vector<Perm> gens;
    };
    std::vector<Level> levels;

    explicit BSGS(int n_) : n(n_) {}

    // returns the residue after sifting and the level where it got stuck
    std::pair<Perm, size_t> sift(Perm g) const {
        size_t i = 0;
        for (; i < levels.size(); ++i) {
            int x = g[levels[i].beta];
            if (levels[i].where[x] < 0) return {g, i};
            g = compose(inverse_perm(levels[i].reps[levels[i].where[x]], n), g, n);
        }
        return {g, i};
    }

    void rebuild_orbit(size_t li) {
        Level& L = levels[li];
        L.orbit.clear();
        L.reps.clear();
        L.where.fill(-1);
        L.orbit.push_back(L.beta);
        L.reps.push_back(identity_perm(n));
        L.where[L.beta] = 0;
        std::vector<const Perm*> gens;
        for (size_t j = li; j < levels.size(); ++j)
            for (const Perm& g : levels[j].gens) gens.push_back(&g);
        for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
            int p = L.orbit[qi];
            for (const Perm* g : gens) {
                int q = (*g)[p];
                if (L.where[q] < 0) {
                    L.where[q] = static_cast<int16_t>(L.reps.size());
                    L.reps.push_back(compose(*g, L.reps[L.where[p]], n));
                    L.orbit.push_back(q);
                }
            }
        }
    }

    bool add(const Perm& g0) {
        auto [g, i] = sift(g0);
        if (is_identity(g, n)) return false;
        if (i == levels.size()) {
            int beta = 0;
            while (g[beta] == beta) ++beta;
            Level L;
            L.beta = beta;
            L.where.fill(-1);
            levels.push_back(L);
        }
        levels[i].gens.push_back(g);
        for (size_t j = 0; j <= i && j < levels.size(); ++j) rebuild_orbit(j);
        for (size_t j = i; j < levels.size(); ++j) rebuild_orbit(j);
        return true;
    }

    // closure: keep sifting Schreier generators until everything
    // stabilizes; add() may grow `levels`, so each sweep works on copies
    // and restarts after the first change
    void complete() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t li = 0; li < levels.size() && !changed; ++li) {
                const std::vector<int> orbit = levels[li].orbit;
                const std::vector<Perm> reps = levels[li].reps;
                const std::array<int16_t, kMaxVertices> where = levels[li].where;
                std::vector<Perm> gens;
                for (size_t j = li; j < levels.size(); ++j)
                    for (const Perm& g : levels[j].gens) gens.push_back(g);
                for (size_t oi = 0; oi < orbit.size() && !changed; ++oi) {
                    for (const Perm& s : gens) {
                        int p = orbit[oi];
                        int q = s[p];
                        Perm schreier = compose(inverse_perm(reps[where[q]], n),
                                                compose(s, reps[where[p]], n), n);
                        if (add(schreier)) {
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }

    uint64_t order() const {
        uint64_t o = 1;
        for (const Level& L : levels) o *= static_cast<uint64_t>(L.orbit.size());
        return o;
    }
};

// --- equitable partition refinement ------------------------------------

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::array<int, kMaxVertices> cell_of{};
        for (size_t ci = 0; ci < cells.size(); ++ci)
            for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> key(cells.size(), 0);
                uint16_t nb = g.adj[v];
                while (nb) {
                    int u = __builtin_ctz(nb);
                    nb &= static_cast<uint16_t>(nb - 1);
                    ++key[cell_of[u]];
                }
                groups[key].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [key, verts] : groups) next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }
}

// adjacency bits of g under labeling L (vertex -> position), upper
// triangle in column order; fits 120 bits
struct Enc {
    std::array<uint64_t, 2> bits{};
    auto operator<=>(const Enc&) const = default;
};

Enc encode(const Graph& g, const Perm& lab) {
    Perm inv = inverse_perm(lab, g.n);
    Enc e;
    int idx = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(inv[i], inv[j])) e.bits[idx >> 6] |= 1ull << (idx & 63);
    return e;
}

struct SearchState {
    const Graph& g;
    bool have_first = false, have_best = false;
    Enc first_enc, best_enc;
    Perm first_lab{}, best_lab{};
    std::vector<Perm> autos;

    explicit SearchState(const Graph& g_) : g(g_) {}

    void try_record(const Perm& lab, const Enc& enc, const Enc& ref_enc, const Perm& ref_lab) {
        if (enc != ref_enc) return;
        Perm pi = compose(inverse_perm(ref_lab, g.n), lab, g.n);
        if (!is_identity(pi, g.n)) autos.push_back(pi);
    }

    void leaf(const Cells& cells) {
        Perm lab{};
        int pos = 0;
        for (const auto& cell : cells) lab[cell[0]] = static_cast<uint8_t>(pos++);
        Enc enc = encode(g, lab);
        if (!have_first) {
            have_first = true;
            first_enc = enc;
            first_lab = lab;
        } else {
            try_record(lab, enc, first_enc, first_lab);
            if (have_best && best_enc != first_enc) try_record(lab, enc, best_enc, best_lab);
        }
        if (!have_best || enc < best_enc) {
            have_best = true;
            best_enc = enc;
            best_lab = lab;
        }
    }
};

// union-find orbit check: is v equivalent to some vertex in `tried` under
// the recorded automorphisms that fix `path` pointwise?
bool prunable(const SearchState& st, const std::vector<int>& path, const std::vector<int>& tried,
              int v) {
    if (tried.empty() || st.autos.empty()) return false;
    std::array<int, kMaxVertices> parent{};
    for (int i = 0; i < st.g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& a : st.autos) {
        bool fixes = true;
        for (int p : path)
            if (a[p] != p) {
                fixes = false;
                break;
            }
        if (!fixes) continue;
        for (int i = 0; i < st.g.n; ++i) {
            int r1 = find(i), r2 = find(a[i]);
            if (r1 != r2) parent[r1] = r2;
        }
    }
    int rv = find(v);
    for (int u : tried)
        if (find(u) == rv) return true;
    return false;
}

void search(SearchState& st, Cells cells, std::vector<int>& path) {
    refine(st.g, cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1) {
            target = static_cast<int>(i);
            break;
        }
    if (target < 0) {
        st.leaf(cells);
        return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
        if (prunable(st, path, tried, v)) continue;
        Cells child;
        child.reserve(cells.size() + 1);
        for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
            if (i != target) {
                child.push_back(cells[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[i])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
        }
        path.push_back(v);
        search(st, std::move(child), path);
        path.pop_back();
        tried.push_back(v);
    }
}

CanonResult run_canon(const Graph& g, const Cells& initial) {
    CanonResult res;
    if (g.n == 0) {
        res.bytes = graph6_encode(g);
        res.canonical = g;
        res.labeling = identity_perm(0);
        res.aut_count = 1;
        return res;
    }
    SearchState st(g);
    std::vector<int> path;
    search(st, initial, path);
    res.labeling = st.best_lab;
    res.canonical = relabel(g, st.best_lab);
    res.bytes = graph6_encode(res.canonical);
    res.generators = st.autos;
    res.aut_count = group_order(st.autos, g.n);
    std::array<int, kMaxVertices> parent{};
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& a : st.autos)
        for (int i = 0; i < g.n; ++i) {
            int r1 = find(i), r2 = find(a[i]);
            if (r1 != r2) parent[r1] = r2;
        }
    std::array<int8_t, kMaxVertices> orbit_id{};
    orbit_id.fill(-1);
    int next_id = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (orbit_id[r] < 0) orbit_id[r] = static_cast<int8_t>(next_id++);
        res.orbit[v] = orbit_id[r];
    }
    return res;
}

}  // namespace

CanonResult canonical_full(const Graph& g) {
    Cells initial;
    if (g.n > 0) {
        std::vector<int> all(g.n);
        for (int i = 0; i < g.n; ++i) all[i] = i;
        initial.push_back(std::move(all));
    }
    return run_canon(g, initial);
}

CanonResult canonical_full(const Graph& g, const std::vector<std::vector<int>>& initial_cells) {
    return run_canon(g, initial_cells);
}

CanonicalLabel canonical_form(const Graph& g) {
    CanonResult r = canonical_full(g);
    return {r.bytes, r.aut_count};
}

std::string canonical_flag(const Graph& g, const std::vector<int>& roots) {
    std::array<bool, kMaxVertices> is_root{};
    Cells initial;
    for (int r : roots) {
        if (r < 0 || r >= g.n || is_root[r])
            throw std::invalid_argument("canonical_flag: bad root tuple");
        is_root[r] = true;
        initial.push_back({r});
    }
    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!is_root[v]) rest.push_back(v);
    if (!rest.empty()) initial.push_back(std::move(rest));
    CanonResult res = run_canon(g, initial);
    std::string bytes;
    bytes.push_back(static_cast<char>('0' + roots.size()));
    bytes.push_back(':');
    bytes += res.bytes;
    return bytes;
}

std::vector<uint16_t> mask_orbit_reps(const std::vector<uint16_t>& masks,
                                      const std::vector<Perm>& generators, int /*n*/) {
    auto apply = [&](const Perm& p, uint16_t m) {
        uint16_t out = 0;
        while (m) {
            int v = __builtin_ctz(m);
            m &= static_cast<uint16_t>(m - 1);
            out |= static_cast<uint16_t>(1u << p[v]);
        }
        return out;
    };
    std::map<uint16_t, uint16_t> rep;  // mask -> orbit representative (min)
    for (uint16_t m : masks) {
        if (rep.count(m)) continue;
        // BFS over the orbit of m
        std::vector<uint16_t> queue{m};
        std::vector<uint16_t> seen{m};
        uint16_t mn = m;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (const Perm& gperm : generators) {
                uint16_t im = apply(gperm, queue[qi]);
                if (std::find(seen.begin(), seen.end(), im) == seen.end()) {
                    seen.push_back(im);
                    queue.push_back(im);
                    mn = std::min(mn, im);
                }
            }
        }
        for (uint16_t s : seen) rep[s] = mn;
    }
    std::vector<uint16_t> out;
    out.reserve(masks.size());
    for (uint16_t m : masks) out.push_back(rep[m]);
    return out;
}

uint64_t group_order(const std::vector<Perm>& gens, int n) {
    if (n == 0) return 1;
    BSGS bsgs(n);
    for (const Perm& g : gens) bsgs.add(g);
    bsgs.complete();
    return bsgs.order();
}

}  // namespace c5
