#include "c5/certificate.hpp"

#include <fstream>
#include <sstream>

#include "c5/canon.hpp"
#include "c5/graph6.hpp"

namespace c5 {

namespace {

constexpr const char* kMagic = "c5cert";
constexpr int kVersion = 1;

std::string kind_name(BoundKind k) {
    return k == BoundKind::lower_c5plus ? "lower_c5plus" : "upper_c5";
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::vector<std::string> tok;
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) tok.push_back(t);
            if (tok.empty() || tok[0][0] == '#') continue;
            return tok;
        }
        throw std::runtime_error("certificate: unexpected end of file");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("certificate: line " + std::to_string(lineno) + ": " + msg);
    }
};

void check_structure(const Certificate& c) {
    if (c.level < 3 || c.level > 7) throw std::runtime_error("certificate: level out of range");
    if (c.kind == BoundKind::lower_c5plus) {
        if (c.level < 6) throw std::runtime_error("certificate: level below |C5+| = 6");
        if (c.y < 0) throw std::runtime_error("certificate: negative y");
        if (c.lb < 0 || c.lb > c5_density_cap())
            throw std::runtime_error("certificate: lb outside [0, 24/625]");
    } else {
        if (c.level < 5) throw std::runtime_error("certificate: level below |C5| = 5");
        if (c.y != 0) throw std::runtime_error("certificate: upper bound with nonzero y");
        // fields without meaning for this kind are pinned so the canonical
        // form carries no mutable dead weight
        if (c.lb != 0) throw std::runtime_error("certificate: upper bound with nonzero lb");
        if (c.claimed_a != 0)
            throw std::runtime_error("certificate: upper bound with nonzero claimed slope");
    }
    for (const CertBlock& b : c.blocks) {
        int k = b.type.k();
        if (!is_triangle_free(b.type.sigma))
            throw std::runtime_error("certificate: type contains a triangle");
        if ((c.level - k) % 2 != 0)
            throw std::runtime_error("certificate: type size parity violation");
        int fsize = (c.level + k) / 2;
        if (static_cast<int>(b.matrix.size()) != static_cast<int>(b.flags.size()))
            throw std::runtime_error("certificate: matrix dimension mismatch");
        if (!is_symmetric(b.matrix)) throw std::runtime_error("certificate: matrix not symmetric");
        std::vector<std::string> keys;
        for (const Flag& f : b.flags) {
            if (f.graph.n != fsize)
                throw std::runtime_error("certificate: flag size must be (level+k)/2");
            if (!is_triangle_free(f.graph))
                throw std::runtime_error("certificate: flag contains a triangle");
            if (!(type_of(f) == b.type.sigma))
                throw std::runtime_error("certificate: flag does not induce its block type");
            keys.push_back(canonical_flag(f.graph, f.roots));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw std::runtime_error("certificate: duplicate flag in basis");
    }
    for (const auto& [g6, alpha] : c.slacks) {
        if (alpha < 0) throw std::runtime_error("certificate: negative slack");
        Graph f = graph6_decode(g6);
        if (f.n != c.level || !is_triangle_free(f))
            throw std::runtime_error("certificate: slack key not in the level universe");
    }
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
    LineReader rd(text);
    Certificate c;
    auto tok = rd.next();
    if (tok.size() != 2 || tok[0] != kMagic || tok[1] != std::to_string(kVersion))
        rd.fail("bad header (want 'c5cert 1')");
    auto expect = [&](const char* key, size_t count) {
        auto t = rd.next();
        if (t[0] != std::string(key) || t.size() != count)
            rd.fail(std::string("expected '") + key + "'");
        return t;
    };
    tok = expect("kind", 2);
    if (tok[1] == "lower_c5plus")
        c.kind = BoundKind::lower_c5plus;
    else if (tok[1] == "upper_c5")
        c.kind = BoundKind::upper_c5;
    else
        rd.fail("unknown kind");
    c.level = std::stoi(expect("level", 2)[1]);
    c.lb = parse_rational(expect("lb", 2)[1]);
    c.y = parse_rational(expect("y", 2)[1]);
    c.claimed_a = parse_rational(expect("claimed_a", 2)[1]);
    c.claimed_b = parse_rational(expect("claimed_b", 2)[1]);
    int nblocks = std::stoi(expect("blocks", 2)[1]);
    if (nblocks < 0) rd.fail("negative block count");
    for (int bi = 0; bi < nblocks; ++bi) {
        tok = expect("block", 2);
        if (std::stoi(tok[1]) != bi) rd.fail("blocks out of order");
        CertBlock blk;
        tok = expect("type", 3);
        int k = std::stoi(tok[1]);
        blk.type.sigma = graph6_decode(tok[2]);
        if (blk.type.sigma.n != k) rd.fail("type size does not match its graph6");
        int nflags = std::stoi(expect("flags", 2)[1]);
        for (int fi = 0; fi < nflags; ++fi) {
            tok = rd.next();
            if (tok[0] != "flag" || static_cast<int>(tok.size()) != 2 + k) rd.fail("bad flag line");
            Flag f;
            f.graph = graph6_decode(tok[1]);
            for (int r = 0; r < k; ++r) {
                int v = std::stoi(tok[2 + r]);
                if (v < 0 || v >= f.graph.n) rd.fail("flag root out of range");
                f.roots.push_back(v);
            }
            std::vector<int> sorted = f.roots;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                rd.fail("repeated flag root");
            blk.flags.push_back(std::move(f));
        }
        tok = expect("matrix", 2);
        if (std::stoi(tok[1]) != nflags) rd.fail("matrix size must equal flag count");
        blk.matrix.assign(nflags, QVector(nflags));
        for (int r = 0; r < nflags; ++r) {
            tok = rd.next();
            if (static_cast<int>(tok.size()) != nflags) rd.fail("bad matrix row");
            for (int cidx = 0; cidx < nflags; ++cidx)
                blk.matrix[r][cidx] = parse_rational(tok[cidx]);
        }
        c.blocks.push_back(std::move(blk));
    }
    int nslacks = std::stoi(expect("slacks", 2)[1]);
    for (int si = 0; si < nslacks; ++si) {
        tok = rd.next();
        if (tok.size() != 3 || tok[0] != "slack") rd.fail("bad slack line");
        c.slacks.emplace_back(tok[1], parse_rational(tok[2]));
    }
    tok = rd.next();
    if (tok.size() != 2 || tok[0] != "end" || tok[1] != kMagic) rd.fail("missing end marker");
    try {
        tok = rd.next();
    } catch (const std::runtime_error&) {
        check_structure(c);
        return c;
    }
    rd.fail("trailing content after the end marker");
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

std::string emit_certificate(const Certificate& c) {
    check_structure(c);
    std::ostringstream out;
    out << kMagic << " " << kVersion << "\n";
    out << "kind " << kind_name(c.kind) << "\n";
    out << "level " << c.level << "\n";
    out << "lb " << rational_str(c.lb) << "\n";
    out << "y " << rational_str(c.y) << "\n";
    out << "claimed_a " << rational_str(c.claimed_a) << "\n";
    out << "claimed_b " << rational_str(c.claimed_b) << "\n";
    out << "blocks " << c.blocks.size() << "\n";
    for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
        const CertBlock& b = c.blocks[bi];
        out << "block " << bi << "\n";
        out << "type " << b.type.k() << " " << graph6_encode(b.type.sigma) << "\n";
        out << "flags " << b.flags.size() << "\n";
        for (const Flag& f : b.flags) {
            out << "flag " << graph6_encode(f.graph);
            for (int r : f.roots) out << " " << r;
            out << "\n";
        }
        out << "matrix " << b.matrix.size() << "\n";
        for (const QVector& row : b.matrix) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << rational_str(row[i]);
            out << "\n";
        }
    }
    out << "slacks " << c.slacks.size() << "\n";
    for (const auto& [g6, alpha] : c.slacks)
        out << "slack " << g6 << " " << rational_str(alpha) << "\n";
    out << "end " << kMagic << "\n";
    return out.str();
}

Verdict verify_certificate(const Certificate& c) {
    check_structure(c);
    Verdict v;
    // PSD of every block, exactly
    for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
        PsdResult p = verify_psd_full(c.blocks[bi].matrix);
        if (!p.psd) {
            v.failure = "block " + std::to_string(bi) + " is not PSD (pivot " +
                        std::to_string(p.failing_pivot) + ")";
            return v;
        }
    }

    DensityVector c5v = expansion_coefficients(pentagon(), c.level);
    DensityVector c5pv;
    if (c.kind == BoundKind::lower_c5plus) c5pv = expansion_coefficients(pentagon_plus(), c.level);

    bool first = true;
    for (const Graph& f : flag_universe(c.level)) {
        std::string g6 = graph6_encode(f);
        Rational sos = 0;
        for (const CertBlock& b : c.blocks) {
            if (b.flags.empty()) continue;
            QMatrix w = pair_average_matrix({b.type, b.flags}, f);
            int dim = static_cast<int>(b.flags.size());
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) sos += b.matrix[i][j] * w[i][j];
        }
        Rational net;
        if (c.kind == BoundKind::lower_c5plus)
            net = c5pv.at(g6) - c.y * c5v.at(g6) - sos;
        else
            net = c5v.at(g6) + sos;
        v.per_f_slack.emplace_back(g6, net);
        bool better = c.kind == BoundKind::lower_c5plus ? net < v.k : net > v.k;
        if (first || better) v.k = net;
        first = false;
    }
    // rewrite per-F values as slacks against the extreme
    for (auto& [g6, net] : v.per_f_slack)
        net = c.kind == BoundKind::lower_c5plus ? net - v.k : v.k - net;

    if (c.kind == BoundKind::lower_c5plus) {
        // proven: d(C5+) >= y*d(C5) + K for all triangle-free graphons,
        // hence >= y*(d(C5)-lb) + (K + y*lb) when d(C5) >= lb
        v.proven_a = c.y;
        v.proven_b = v.k + c.y * c.lb;
        Rational right = c5_density_cap();
        auto proven_at = [&](const Rational& x) -> Rational { return c.y * x + v.k; };
        auto claimed_at = [&](const Rational& x) -> Rational {
            return c.claimed_a * (x - c.lb) + c.claimed_b;
        };
        v.margin_left = proven_at(c.lb) - claimed_at(c.lb);
        v.margin_right = proven_at(right) - claimed_at(right);
        if (v.margin_left < 0) {
            v.failure = "dominance fails at d(C5) = " + rational_str(c.lb) + " by " +
                        rational_str(-v.margin_left);
            return v;
        }
        if (v.margin_right < 0) {
            v.failure = "dominance fails at d(C5) = " + rational_str(right) + " by " +
                        rational_str(-v.margin_right);
            return v;
        }
    } else {
        v.proven_a = 0;
        v.proven_b = v.k;
        v.margin_left = v.margin_right = c.claimed_b - v.k;
        if (v.margin_left < 0) {
            v.failure = "proven upper bound " + rational_str(v.k) + " exceeds claimed " +
                        rational_str(c.claimed_b);
            return v;
        }
    }
    v.valid = true;
    return v;
}

ChainReport verify_bound_chain(const Certificate& lower, const Certificate& tight,
                               const Certificate& upper) {
    ChainReport rep;
    rep.ok = true;
    auto step = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.steps.push_back({name, ok, detail});
        if (!ok) rep.ok = false;
        return ok;
    };

    if (lower.kind != BoundKind::lower_c5plus || tight.kind != BoundKind::lower_c5plus ||
        upper.kind != BoundKind::upper_c5)
        throw std::invalid_argument("verify_bound_chain: certificate kinds mismatch");

    Verdict vl = verify_certificate(lower);
    if (!step("lower certificate valid", vl.valid, vl.failure)) return rep;
    Verdict vt = verify_certificate(tight);
    if (!step("tight certificate valid", vt.valid, vt.failure)) return rep;
    Verdict vu = verify_certificate(upper);
    if (!step("upper certificate valid", vu.valid, vu.failure)) return rep;

    Rational cap = c5_density_cap();      // 24/625
    Rational floor_ = c5plus_density_floor();  // 72/625
    if (!step("upper bound at most 24/625", vu.k <= cap, "proven " + rational_str(vu.k)))
        return rep;

    // 10 <= n < 100: d(C5+)/(3 d(C5)) >= (y d_n + K)/(3 d_n) > 1 - 1/n.
    // The middle step substitutes d(C5) -> d_n and needs K <= 0.
    step("lower certificate constant K <= 0", vl.k <= 0, "K = " + rational_str(vl.k));
    for (int n = 10; n < 100; ++n) {
        Rational dn = balanced_blowup_c5_density(n);
        Rational margin = (lower.y * dn + vl.k) - 3 * dn * (1 - make_rational(1, n));
        step("n=" + std::to_string(n), margin > 0, "margin " + rational_str(margin));
    }

    // n >= 100 via the tight and upper certificates:
    //   ratio >= (y_t d_n + K_t)/(3 d(C5)) >= (y_t d_n + K_t)/0.1152
    //         >= (corner - 1.92 y_t / n^2)/0.1152 >= 1 - (50 y_t/3)/n^2 >= 1 - 1/n
    // using d_n > 0.0384(1 - 50/n^2) (the five residue classes) and
    // corner = y_t*0.0384 + K_t >= 0.1152. The last step needs y_t <= 6.
    Rational corner = tight.y * cap + vt.k;
    step("tight certificate value at 24/625 reaches 72/625", corner >= floor_,
         "value " + rational_str(corner));
    step("tight certificate slope at most 6", tight.y <= 6, "y = " + rational_str(tight.y));
    // numerator stays positive: y_t d_n + K_t >= 0.1152 - 11.52/n^2 > 0 at n >= 100
    step("numerator positive for n >= 100",
         floor_ - tight.y * cap * make_rational(50, 10000) > 0, "");
    for (int i = 0; i < 5; ++i)
        step("residue class " + std::to_string(i) + " polynomial check", asymptotic_check(i, 20),
             "");
    FinalChainCheck fc = final_chain_check(100);
    step("closing display at n = 100 (equality)", fc.holds && fc.last_margin == 0,
         "last margin " + rational_str(fc.last_margin));
    return rep;
}

}  // namespace c5
