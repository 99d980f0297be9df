#include "c5/densities.hpp"

#include <map>
#include <stdexcept>

#include "c5/canon.hpp"
#include "c5/flags.hpp"

namespace c5 {

namespace {

// multinomial h! / prod(m_i!)
Integer multinomial(int h, const std::vector<int>& m) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), h);
    for (int x : m) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), x);
        r /= f;
    }
    return r;
}

// Counts functions f: V(H)-sized point set -> parts whose induced pattern
// is isomorphic to h, grouped by image subset and multiplicities. The
// pattern of a group is a blow-up of the induced part graph, so one
// isomorphism test covers the whole group.
Integer pattern_map_count(const Graph& source, const Graph& h) {
    int n = source.n;
    int hh = h.n;
    CanonicalLabel target = canonical_form(h);
    int target_edges = h.edge_count();
    Integer total = 0;
    std::map<std::pair<uint64_t, uint64_t>, bool> memo;  // (part graph bits, sizes) -> iso?

    std::vector<int> subset;
    std::vector<int> sizes;
    auto test = [&](int d) {
        Graph part = induced(source, [&] {
            uint16_t m = 0;
            for (int v : subset) m |= static_cast<uint16_t>(1u << v);
            return m;
        }());
        uint64_t bits = 0;
        for (int i = 0; i < d; ++i) bits = bits << 7 | part.adj[i];
        uint64_t skey = 0;
        for (int i = 0; i < d; ++i) skey = skey << 3 | static_cast<unsigned>(sizes[i]);
        auto key = std::make_pair(bits, skey);
        auto it = memo.find(key);
        bool iso;
        if (it != memo.end()) {
            iso = it->second;
        } else {
            Graph pattern = blowup({part, sizes});
            iso = pattern.edge_count() == target_edges &&
                  canonical_form(pattern).bytes == target.bytes;
            memo.emplace(key, iso);
        }
        if (iso) total += multinomial(hh, sizes);
    };

    // enumerate d-subsets of parts and positive compositions of hh
    auto comp_rec = [&](auto&& self, int pos, int remaining) -> void {
        int d = static_cast<int>(subset.size());
        if (pos == d) {
            if (remaining == 0) test(d);
            return;
        }
        int max_here = remaining - (d - pos - 1);
        for (int take = 1; take <= max_here; ++take) {
            sizes[pos] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    auto subset_rec = [&](auto&& self, int next) -> void {
        int d = static_cast<int>(subset.size());
        if (d > 0 && d <= hh) {
            sizes.assign(d, 0);
            comp_rec(comp_rec, 0, hh);
        }
        if (d == hh) return;
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    if (hh == 0) return 1;
    subset_rec(subset_rec, 0);
    return total;
}

}  // namespace

Rational graphon_density(const Graphon& b, const Graph& h) {
    if (!b.roots.empty()) throw std::invalid_argument("graphon_density: rooted graphon");
    if (h.n > 7) throw std::invalid_argument("graphon_density: |H| > 7");
    if (b.source.n == 0) throw std::invalid_argument("graphon_density: empty source");
    if (h.n == 0) return 1;
    Integer count = pattern_map_count(b.source, h);
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), b.source.n, h.n);
    Rational r(count, denom);
    r.canonicalize();
    return r;
}

Rational flag_density_at(const Graph& source, const std::vector<int>& root_parts,
                         const Flag& f) {
    int k = static_cast<int>(root_parts.size());
    if (static_cast<int>(f.roots.size()) != k)
        throw std::invalid_argument("flag_density: root count mismatch");
    // the root parts must induce the flag's type, in order
    Graph sigma = type_of(f);
    for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
            if (sigma.has_edge(a, c) != source.has_edge(root_parts[a], root_parts[c]))
                throw std::invalid_argument("flag_density: roots do not induce the type");

    int m = f.graph.n;
    int free = m - k;
    std::string want = canonical_flag(f.graph, f.roots);

    // enumerate all part assignments of the non-root points
    Integer count = 0;
    std::vector<int> assign(free, 0);
    int n = source.n;
    while (true) {
        // pattern graph: roots first (at root_parts), then free points
        Graph pat;
        pat.n = m;
        std::vector<int> part(m);
        for (int a = 0; a < k; ++a) part[a] = root_parts[a];
        for (int a = 0; a < free; ++a) part[k + a] = assign[a];
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (source.has_edge(part[u], part[v])) {
                    pat.adj[u] |= static_cast<uint16_t>(1u << v);
                    pat.adj[v] |= static_cast<uint16_t>(1u << u);
                }
        std::vector<int> proots(k);
        for (int a = 0; a < k; ++a) proots[a] = a;
        if (canonical_flag(pat, proots) == want) ++count;

        int i = free - 1;
        while (i >= 0 && assign[i] == n - 1) {
            assign[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++assign[i];
    }
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), n, free);
    Rational r(count, denom);
    r.canonicalize();
    return r;
}

Rational flag_density(const Graphon& b, const Flag& f) {
    std::vector<bool> seen(b.source.n, false);
    for (int r : b.roots) {
        if (r < 0 || r >= b.source.n || seen[r])
            throw std::invalid_argument("flag_density: roots must be distinct source vertices");
        seen[r] = true;
    }
    return flag_density_at(b.source, b.roots, f);
}

Rational balanced_blowup_c5_density(int n) {
    if (n < 5) throw std::invalid_argument("balanced_blowup_c5_density: n < 5");
    int i = n % 5;
    Integer hi = (n + 5 - i) / 5;  // ceil(n/5)
    Integer lo = (n - i) / 5;      // floor(n/5)
    Integer num = 120;
    for (int t = 0; t < i; ++t) num *= hi;
    for (int t = 0; t < 5 - i; ++t) num *= lo;
    Integer denom = Integer(n) * n * n * n * n;
    Rational r(num, denom);
    r.canonicalize();
    return r;
}

BoundLine reference_low_line() {
    return {parse_rational("0.034"), parse_rational("4.57771"), parse_rational("0.095058")};
}

BoundLine reference_tight_line() {
    return {c5_density_cap(), make_rational(6), c5plus_density_floor()};
}

SmallNCheck small_n_ratio_check(int n, const BoundLine& line) {
    if (n < 10 || n >= 100)
        throw std::invalid_argument("small_n_ratio_check: n must be in [10,100)");
    SmallNCheck out;
    out.n = n;
    out.dn = balanced_blowup_c5_density(n);
    if (out.dn < line.x0)
        throw std::runtime_error("small_n_ratio_check: d_n below the line's hypothesis");
    out.lhs = line.at(out.dn) / (3 * out.dn);
    out.margin = out.lhs - (1 - make_rational(1, n));
    out.holds = out.margin > 0;
    return out;
}

namespace {

using Poly = std::vector<Integer>;  // coefficient of t^i at index i

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly poly_pow(const Poly& a, int e) {
    Poly r{Integer(1)};
    for (int i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

}  // namespace

bool asymptotic_check(int residue, int m0) {
    if (residue < 0 || residue > 4) throw std::invalid_argument("asymptotic_check: residue");
    if (m0 < 20) throw std::invalid_argument("asymptotic_check: m0 < 20");
    // d_n > 0.0384 (1 - 50/n^2) for n = 5m+i reduces to
    //   (n+5-i)^i (n-i)^(5-i) n^2 - n^7 + 50 n^5 > 0.
    // Substitute n = 5t + c with c = 5*m0 + residue and expand in t.
    long c = 5L * m0 + residue;
    Poly n{Integer(c), Integer(5)};
    Poly up{Integer(c + 5 - residue), Integer(5)};
    Poly dn{Integer(c - residue), Integer(5)};
    Poly lhs = poly_mul(poly_mul(poly_pow(up, residue), poly_pow(dn, 5 - residue)), poly_pow(n, 2));
    Poly rhs = poly_pow(n, 7);
    Poly n5 = poly_pow(n, 5);
    Poly p(8, Integer(0));
    for (size_t i = 0; i < lhs.size(); ++i) p[i] += lhs[i];
    for (size_t i = 0; i < rhs.size(); ++i) p[i] -= rhs[i];
    for (size_t i = 0; i < n5.size(); ++i) p[i] += 50 * n5[i];
    if (p[0] <= 0) return false;
    for (const Integer& coeff : p)
        if (coeff < 0) return false;
    return true;
}

bool asymptotic_direct(int n) {
    Rational dn = balanced_blowup_c5_density(n);
    Rational nn = make_rational(n);
    return dn > c5_density_cap() * (1 - 50 / (nn * nn));
}

FinalChainCheck final_chain_check(long n) {
    if (n < 100) throw std::invalid_argument("final_chain_check: n < 100");
    FinalChainCheck out;
    out.n = n;
    // d_n for arbitrary large n, directly from the closed form
    int i = static_cast<int>(n % 5);
    Integer hi = (n + 5 - i) / 5, lo = (n - i) / 5;
    Integer num = 120;
    for (int t = 0; t < i; ++t) num *= hi;
    for (int t = 0; t < 5 - i; ++t) num *= lo;
    Integer n5 = Integer(n) * n * n * n * n;
    Rational dn(num, n5);
    dn.canonicalize();

    Rational n2 = Rational(Integer(n) * n);
    Rational cap = c5_density_cap();
    Rational floor_ = c5plus_density_floor();
    bool step1 = dn > cap * (1 - 50 / n2);
    Rational lhs2 = (6 * (dn - cap) + floor_) / floor_;
    Rational rhs2 = 1 - 100 / n2;
    out.step2_margin = lhs2 - rhs2;
    Rational rhs3 = 1 - Rational(1, static_cast<unsigned long>(n));
    out.last_margin = rhs2 - rhs3;
    out.holds = step1 && out.step2_margin > 0 && out.last_margin >= 0;
    return out;
}

}  // namespace c5
