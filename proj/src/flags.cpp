#include "c5/flags.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "c5/canon.hpp"
#include "c5/enumerate.hpp"
#include "c5/graph6.hpp"

namespace c5 {

Graph tuple_pattern(const Graph& g, const std::vector<int>& tuple) {
    Graph p;
    p.n = static_cast<int>(tuple.size());
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (g.has_edge(tuple[i], tuple[j])) {
                p.adj[i] |= static_cast<uint16_t>(1u << j);
                p.adj[j] |= static_cast<uint16_t>(1u << i);
            }
    return p;
}

Graph type_of(const Flag& f) { return tuple_pattern(f.graph, f.roots); }

std::vector<Type> enumerate_types(int k) {
    if (k < 0 || k > 5) throw std::invalid_argument("enumerate_types: k must be in [0,5]");
    int nbits = k * (k - 1) / 2;
    std::vector<Type> out;
    for (uint32_t mask = 0; mask < (1u << nbits); ++mask) {
        Graph g;
        g.n = k;
        int idx = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if ((mask >> idx) & 1u) {
                    g.adj[i] |= static_cast<uint16_t>(1u << j);
                    g.adj[j] |= static_cast<uint16_t>(1u << i);
                }
        if (is_triangle_free(g)) out.push_back({g});
    }
    return out;
}

std::vector<Type> representative_types(int k) {
    std::vector<std::pair<std::string, Graph>> reps;
    for (const Type& t : enumerate_types(k)) {
        CanonResult c = canonical_full(t.sigma);
        if (std::none_of(reps.begin(), reps.end(),
                         [&](const auto& r) { return r.first == c.bytes; }))
            reps.emplace_back(c.bytes, c.canonical);
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Type> out;
    out.reserve(reps.size());
    for (auto& [bytes, g] : reps) out.push_back({g});
    return out;
}

std::vector<Graph> flag_universe(int n) {
    std::vector<std::string> g6 = flag_universe_g6(n);
    std::vector<Graph> out;
    out.reserve(g6.size());
    for (const std::string& s : g6) out.push_back(graph6_decode(s));
    return out;
}

std::vector<std::string> flag_universe_g6(int n) {
    std::vector<std::string> out;
    enumerate_triangle_free(n, [&](const Graph& g) { out.push_back(canonical_form(g).bytes); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag> enumerate_flags(const Type& t, int m) {
    int k = t.k();
    if (m < k) throw std::invalid_argument("enumerate_flags: m < |type|");
    if (m > 7) throw std::invalid_argument("enumerate_flags: m > 7");
    std::vector<std::pair<std::string, Flag>> found;
    for (const Graph& g : flag_universe(m)) {
        // all injective k-tuples of V(g) inducing the type, exactly
        std::vector<int> tuple(k);
        std::vector<bool> used(m, false);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                if (!(tuple_pattern(g, tuple) == t.sigma)) return;
                std::string key = canonical_flag(g, tuple);
                if (std::none_of(found.begin(), found.end(),
                                 [&](const auto& p) { return p.first == key; }))
                    found.emplace_back(key, Flag{g, tuple});
                return;
            }
            for (int v = 0; v < m; ++v) {
                if (used[v]) continue;
                used[v] = true;
                tuple[pos] = v;
                self(self, pos + 1);
                used[v] = false;
            }
        };
        rec(rec, 0);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Flag> out;
    out.reserve(found.size());
    for (auto& [key, f] : found) out.push_back(std::move(f));
    return out;
}

DensityVector expansion_coefficients(const Graph& h, int level) {
    if (h.n > level) throw std::invalid_argument("expansion_coefficients: |H| > level");
    if (level > 7) throw std::invalid_argument("expansion_coefficients: level > 7");
    DensityVector out;
    out.level = level;
    Rational denom(binomial(level, h.n));
    for (const Graph& f : flag_universe(level)) {
        Rational c(count_induced(f, h));
        c /= denom;
        out.entries.emplace(graph6_encode(f), c);
    }
    return out;
}

Rational pair_density(const Flag& f1, const Flag& f2, const Graph& f,
                      const std::vector<int>& theta) {
    Graph sigma = type_of(f1);
    if (!(type_of(f2) == sigma)) throw std::invalid_argument("pair_density: type mismatch");
    int k = sigma.n;
    int m1 = f1.graph.n, m2 = f2.graph.n;
    if (m1 + m2 - k != f.n) throw std::invalid_argument("pair_density: size mismatch");
    if (!(tuple_pattern(f, theta) == sigma))
        throw std::invalid_argument("pair_density: theta does not induce the type");

    std::string key1 = canonical_flag(f1.graph, f1.roots);
    std::string key2 = canonical_flag(f2.graph, f2.roots);

    uint16_t theta_mask = 0;
    for (int v : theta) theta_mask |= static_cast<uint16_t>(1u << v);
    std::vector<int> rest;
    for (int v = 0; v < f.n; ++v)
        if (!((theta_mask >> v) & 1u)) rest.push_back(v);
    int a = m1 - k;
    int total = static_cast<int>(rest.size());

    long hits = 0, splits = 0;
    // iterate subsets of `rest` of size a as S1; complement is S2
    std::vector<int> pick(a);
    auto flag_key = [&](const std::vector<int>& extra) {
        uint16_t mask = theta_mask;
        for (int v : extra) mask |= static_cast<uint16_t>(1u << v);
        Graph sub = induced(f, mask);
        // positions of theta inside the induced subgraph, in root order
        std::vector<int> roots;
        roots.reserve(theta.size());
        for (int r : theta) {
            int pos = 0;
            for (int v = 0; v < r; ++v)
                if ((mask >> v) & 1u) ++pos;
            roots.push_back(pos);
        }
        return canonical_flag(sub, roots);
    };
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == a) {
            ++splits;
            std::vector<int> s1(pick.begin(), pick.end());
            std::vector<int> s2;
            for (int v : rest)
                if (std::find(s1.begin(), s1.end(), v) == s1.end()) s2.push_back(v);
            if (flag_key(s1) == key1 && flag_key(s2) == key2) ++hits;
            return;
        }
        for (int v = next; v < total; ++v) {
            pick[pos] = rest[v];
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    Rational r(hits, splits);
    r.canonicalize();
    return r;
}

namespace {

// The coefficient tables are pure functions of (basis, F) and get asked
// for repeatedly during verification runs; memoize them.
std::mutex pam_mutex;
std::map<std::string, QMatrix> pam_cache;

std::string pam_key(const FlagBasis& basis, const Graph& f) {
    std::string key = graph6_encode(basis.type.sigma);
    for (const Flag& fl : basis.flags) {
        key += '|';
        key += graph6_encode(fl.graph);
        for (int r : fl.roots) key += static_cast<char>('0' + r);
    }
    key += '#';
    key += graph6_encode(f);
    return key;
}

}  // namespace

QMatrix pair_average_matrix(const FlagBasis& basis, const Graph& f) {
    const Graph& sigma = basis.type.sigma;
    int k = sigma.n;
    int ell = f.n;
    int dim = static_cast<int>(basis.flags.size());
    if (dim == 0) return {};
    std::string key = pam_key(basis, f);
    {
        std::lock_guard<std::mutex> lock(pam_mutex);
        auto it = pam_cache.find(key);
        if (it != pam_cache.end()) return it->second;
    }
    int fsize = basis.flags[0].graph.n;
    int a = fsize - k;
    if (2 * fsize - k != ell)
        throw std::invalid_argument("pair_average_matrix: flag size does not match level");

    // canonical keys of the basis flags
    std::map<std::string, int> index;
    for (int i = 0; i < dim; ++i) {
        const Flag& fl = basis.flags[i];
        if (!(type_of(fl) == sigma))
            throw std::invalid_argument("pair_average_matrix: flag of wrong type");
        index.emplace(canonical_flag(fl.graph, fl.roots), i);
    }
    if (static_cast<int>(index.size()) != dim)
        throw std::invalid_argument("pair_average_matrix: duplicate flags in basis");

    std::vector<std::vector<long>> counts(dim, std::vector<long>(dim, 0));

    std::vector<int> theta(k);
    std::vector<bool> used(ell, false);
    std::vector<int> rest;
    auto flag_index = [&](uint16_t theta_mask, const std::vector<int>& extra) {
        uint16_t mask = theta_mask;
        for (int v : extra) mask |= static_cast<uint16_t>(1u << v);
        Graph sub = induced(f, mask);
        std::vector<int> roots;
        roots.reserve(theta.size());
        for (int r : theta) {
            int pos = 0;
            for (int v = 0; v < r; ++v)
                if ((mask >> v) & 1u) ++pos;
            roots.push_back(pos);
        }
        auto it = index.find(canonical_flag(sub, roots));
        return it == index.end() ? -1 : it->second;
    };
    std::vector<int> pick(a);
    long tuple_count = 0;
    auto split_rec = [&](auto&& self, int pos, int next, uint16_t theta_mask) -> void {
        if (pos == a) {
            std::vector<int> s1(pick.begin(), pick.end());
            int i = flag_index(theta_mask, s1);
            if (i < 0) return;
            std::vector<int> s2;
            for (int v : rest)
                if (std::find(s1.begin(), s1.end(), v) == s1.end()) s2.push_back(v);
            int j = flag_index(theta_mask, s2);
            if (j >= 0) ++counts[i][j];
            return;
        }
        for (int v = next; v < static_cast<int>(rest.size()); ++v) {
            pick[pos] = rest[v];
            self(self, pos + 1, v + 1, theta_mask);
        }
    };
    auto theta_rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            ++tuple_count;
            if (!(tuple_pattern(f, theta) == sigma)) return;
            uint16_t theta_mask = 0;
            for (int v : theta) theta_mask |= static_cast<uint16_t>(1u << v);
            rest.clear();
            for (int v = 0; v < ell; ++v)
                if (!((theta_mask >> v) & 1u)) rest.push_back(v);
            split_rec(split_rec, 0, 0, theta_mask);
            return;
        }
        for (int v = 0; v < ell; ++v) {
            if (used[v]) continue;
            used[v] = true;
            theta[pos] = v;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    if (k == 0) {
        tuple_count = 1;
        rest.clear();
        for (int v = 0; v < ell; ++v) rest.push_back(v);
        split_rec(split_rec, 0, 0, 0);
    } else {
        theta_rec(theta_rec, 0);
    }

    // ordered splits per tuple; counts get averaged over all injective
    // tuples, with non-type tuples contributing zero
    Integer denom = Integer(tuple_count) * binomial(ell - k, a);
    QMatrix w(dim, QVector(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // ordered pairs: counts already distinguish (S1,S2) from (S2,S1)
            Rational r(Integer(counts[i][j]), denom);
            r.canonicalize();
            w[i][j] = r;
        }
    {
        std::lock_guard<std::mutex> lock(pam_mutex);
        pam_cache.emplace(key, w);
    }
    return w;
}

DensityVector sos_coefficients(const FlagBasis& basis, const QMatrix& m, int level) {
    int k = basis.type.k();
    if ((level - k) % 2 != 0)
        throw std::invalid_argument("sos_coefficients: level and type size have different parity");
    int dim = static_cast<int>(basis.flags.size());
    if (static_cast<int>(m.size()) != dim)
        throw std::invalid_argument("sos_coefficients: matrix dimension mismatch");
    if (!is_symmetric(m)) throw std::invalid_argument("sos_coefficients: matrix not symmetric");
    for (const Flag& f : basis.flags)
        if (f.graph.n != (level + k) / 2)
            throw std::invalid_argument("sos_coefficients: flag size must be (level+k)/2");
    DensityVector out;
    out.level = level;
    for (const Graph& f : flag_universe(level)) {
        Rational total = 0;
        if (dim > 0) {
            QMatrix w = pair_average_matrix(basis, f);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) total += m[i][j] * w[i][j];
        }
        out.entries.emplace(graph6_encode(f), total);
    }
    return out;
}

}  // namespace c5
