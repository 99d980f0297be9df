#include "c5/sdp.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "c5/canon.hpp"
#include "c5/graph6.hpp"
#include "c5/version.hpp"

namespace c5 {

namespace {

std::vector<int> type_sizes_for_level(int level) {
    std::vector<int> ks;
    for (int k = level % 2; k <= level - 2; k += 2) ks.push_back(k);
    return ks;
}

}  // namespace

SdpLayout sdp_layout(BoundKind kind, int level, const Rational& lb,
                     std::optional<Rational> fix_y) {
    if (level < 5 || level > 7) throw std::invalid_argument("sdp_layout: level must be 5..7");
    if (kind == BoundKind::lower_c5plus && level < 6)
        throw std::invalid_argument("sdp_layout: lower bound needs level >= 6");
    SdpLayout layout;
    layout.kind = kind;
    layout.level = level;
    layout.lb = lb;
    layout.fix_y = std::move(fix_y);
    for (int k : type_sizes_for_level(level)) {
        for (const Type& t : representative_types(k)) {
            FlagBasis basis{t, enumerate_flags(t, (level + k) / 2)};
            if (!basis.flags.empty()) layout.bases.push_back(std::move(basis));
        }
    }
    layout.universe = flag_universe_g6(level);
    layout.universe_graphs = flag_universe(level);
    return layout;
}

std::string write_sdpa(const SdpLayout& layout) {
    int m = static_cast<int>(layout.universe.size());
    int nb = static_cast<int>(layout.bases.size());
    bool has_y = layout.has_y_block();
    // blocks: 1..nb PSD; nb+1 slack diag (-m); [nb+2 y (1)]; last diag (-2)
    int y_block = has_y ? nb + 2 : -1;
    int split_block = nb + 2 + (has_y ? 1 : 0);
    int nblocks = split_block;

    DensityVector c5v = expansion_coefficients(pentagon(), layout.level);
    DensityVector c5pv;
    if (layout.kind == BoundKind::lower_c5plus)
        c5pv = expansion_coefficients(pentagon_plus(), layout.level);

    std::ostringstream out;
    out << "* " << kToolName << " " << kToolVersion << " sdpa export\n";
    out << "* kind " << (layout.kind == BoundKind::lower_c5plus ? "lower_c5plus" : "upper_c5")
        << " level " << layout.level << " lb " << rational_str(layout.lb);
    if (layout.fix_y) out << " fix_y " << rational_str(*layout.fix_y);
    out << "\n";
    out << "* problem: maximize tr(F0 Y) subject to tr(A_F Y) = rhs_F, Y psd.\n";
    out << "* Y = diag(M_1.." << nb << ", slack diag, " << (has_y ? "y, " : "")
        << "split pair for the free scalar bound).\n";
    out << "* constraints follow the sorted canonical graph6 order of the level universe:\n";
    for (int i = 0; i < m; ++i) out << "* F[" << i + 1 << "] = " << layout.universe[i] << "\n";
    for (int b = 0; b < nb; ++b) {
        const FlagBasis& basis = layout.bases[b];
        out << "* block " << b + 1 << ": type " << basis.type.k() << " "
            << graph6_encode(basis.type.sigma) << " dim " << basis.flags.size() << "\n";
    }
    out << m << "\n";
    out << nblocks << "\n";
    for (int b = 0; b < nb; ++b) out << (b ? " " : "") << layout.bases[b].flags.size();
    out << " -" << m;
    if (has_y) out << " 1";
    out << " -2\n";
    for (int i = 0; i < m; ++i) {
        Rational rhs = layout.kind == BoundKind::lower_c5plus
                           ? (layout.fix_y ? c5pv.at(layout.universe[i]) -
                                                 *layout.fix_y * c5v.at(layout.universe[i])
                                           : c5pv.at(layout.universe[i]))
                           : c5v.at(layout.universe[i]);
        out << (i ? " " : "") << rational_decimal(rhs, 18);
    }
    out << "\n";

    auto entry = [&](int matno, int blk, int i, int j, const Rational& v) {
        if (v == 0) return;
        out << matno << " " << blk << " " << i << " " << j << " " << rational_decimal(v, 18)
            << "\n";
    };
    // F0: objective
    if (layout.kind == BoundKind::lower_c5plus) {
        if (has_y) entry(0, y_block, 1, 1, layout.lb);
        entry(0, split_block, 1, 1, make_rational(1));
        entry(0, split_block, 2, 2, make_rational(-1));
    } else {
        entry(0, split_block, 1, 1, make_rational(-1));
        entry(0, split_block, 2, 2, make_rational(1));
    }
    // constraints
    for (int fi = 0; fi < m; ++fi) {
        const Graph& f = layout.universe_graphs[fi];
        for (int b = 0; b < nb; ++b) {
            QMatrix w = pair_average_matrix(layout.bases[b], f);
            int dim = static_cast<int>(layout.bases[b].flags.size());
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    Rational v = layout.kind == BoundKind::lower_c5plus ? w[i][j] : -w[i][j];
                    entry(fi + 1, b + 1, i + 1, j + 1, v);
                }
        }
        entry(fi + 1, nb + 1, fi + 1, fi + 1,
              make_rational(layout.kind == BoundKind::lower_c5plus ? 1 : -1));
        if (has_y) entry(fi + 1, y_block, 1, 1, c5v.at(layout.universe[fi]));
        entry(fi + 1, split_block, 1, 1, make_rational(1));
        entry(fi + 1, split_block, 2, 2, make_rational(-1));
    }
    return out.str();
}

FloatSolution parse_solution(const SdpLayout& layout, const std::string& text) {
    int m = static_cast<int>(layout.universe.size());
    int nb = static_cast<int>(layout.bases.size());
    bool has_y = layout.has_y_block();
    int y_block = has_y ? nb + 2 : -1;
    int split_block = nb + 2 + (has_y ? 1 : 0);

    std::vector<int> dims(split_block + 1, 0);
    for (int b = 0; b < nb; ++b) dims[b + 1] = static_cast<int>(layout.bases[b].flags.size());
    dims[nb + 1] = m;
    if (has_y) dims[y_block] = 1;
    dims[split_block] = 2;

    FloatSolution sol;
    sol.psd.resize(nb);
    for (int b = 0; b < nb; ++b)
        sol.psd[b].assign(dims[b + 1], std::vector<double>(dims[b + 1], 0.0));

    std::istringstream in(text);
    std::string line;
    bool have_primal = false;
    double kplus = 0, kminus = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '*' || line[0] == '"') continue;
        std::istringstream ls(line);
        if (!have_primal) {
            std::vector<double> xs;
            double v;
            while (ls >> v) xs.push_back(v);
            if (static_cast<int>(xs.size()) != m)
                throw std::runtime_error("solution: primal line has " +
                                         std::to_string(xs.size()) + " values, want " +
                                         std::to_string(m));
            have_primal = true;
            continue;
        }
        int matno, blk, i, j;
        double v;
        if (!(ls >> matno >> blk >> i >> j >> v))
            throw std::runtime_error("solution: malformed entry line: " + line);
        std::string extra;
        if (ls >> extra) throw std::runtime_error("solution: trailing tokens: " + line);
        if (matno != 1 && matno != 2) throw std::runtime_error("solution: bad matrix number");
        if (blk < 1 || blk > split_block) throw std::runtime_error("solution: block out of range");
        if (i < 1 || j < 1 || i > dims[blk] || j > dims[blk] || i > j)
            throw std::runtime_error("solution: index out of range in block " +
                                     std::to_string(blk));
        if (matno != 2) continue;
        if (blk <= nb) {
            sol.psd[blk - 1][i - 1][j - 1] = v;
            sol.psd[blk - 1][j - 1][i - 1] = v;
        } else if (blk == y_block) {
            sol.y = v;
        } else if (blk == split_block) {
            if (i == 1 && j == 1) kplus = v;
            if (i == 2 && j == 2) kminus = v;
        }
    }
    if (!have_primal) throw std::runtime_error("solution: empty file");
    double scalar = kplus - kminus;
    if (layout.kind == BoundKind::lower_c5plus) {
        sol.bound = scalar;
        double yv = layout.fix_y ? layout.fix_y->get_d() : sol.y;
        if (layout.fix_y) sol.y = yv;
        sol.objective = scalar + yv * layout.lb.get_d();
    } else {
        sol.bound = scalar;       // U = Y11 - Y22
        sol.objective = -scalar;  // the emitted objective maximizes -U
    }
    return sol;
}

FloatSolution load_solution(const SdpLayout& layout, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_solution(layout, ss.str());
}

namespace {

struct VarMap {
    // upper-triangle entries of every block, flattened
    std::vector<std::array<int, 3>> vars;  // (block, i, j), i <= j
    std::vector<std::vector<std::vector<int>>> idx;

    explicit VarMap(const SdpLayout& layout) {
        idx.resize(layout.bases.size());
        for (size_t b = 0; b < layout.bases.size(); ++b) {
            int d = static_cast<int>(layout.bases[b].flags.size());
            idx[b].assign(d, std::vector<int>(d, -1));
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) {
                    idx[b][i][j] = idx[b][j][i] = static_cast<int>(vars.size());
                    vars.push_back({static_cast<int>(b), i, j});
                }
        }
    }
    int index(int b, int i, int j) const { return idx[b][i][j]; }
};

std::vector<QMatrix> assemble_blocks(const SdpLayout& layout, const QVector& x,
                                     const VarMap& vm) {
    std::vector<QMatrix> blocks(layout.bases.size());
    size_t vi = 0;
    for (size_t b = 0; b < layout.bases.size(); ++b) {
        int d = static_cast<int>(layout.bases[b].flags.size());
        blocks[b].assign(d, QVector(d));
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                blocks[b][i][j] = x[vi];
                blocks[b][j][i] = x[vi];
                ++vi;
            }
    }
    (void)vm;
    return blocks;
}

Certificate build_certificate(const SdpLayout& layout, std::vector<QMatrix> blocks,
                              const Rational& y, const RoundOptions& opts) {
    Certificate cert;
    cert.kind = layout.kind;
    cert.level = layout.level;
    cert.lb = layout.kind == BoundKind::lower_c5plus ? layout.lb : make_rational(0);
    cert.y = layout.kind == BoundKind::lower_c5plus ? y : make_rational(0);
    cert.claimed_a = opts.claimed_a;
    cert.claimed_b = opts.claimed_b;
    for (size_t b = 0; b < layout.bases.size(); ++b) {
        // drop identically-zero blocks to keep certificates small
        bool all_zero = true;
        for (const QVector& row : blocks[b])
            for (const Rational& v : row)
                if (v != 0) all_zero = false;
        if (all_zero) continue;
        cert.blocks.push_back({layout.bases[b].type, layout.bases[b].flags, std::move(blocks[b])});
    }
    return cert;
}

// Kernel vectors of the extremal step graphon at one block: rooted flag
// density vectors for every placement of the type in the parts of C5
// (repeats allowed), deduplicated.
std::vector<QVector> extremal_kernel_vectors(const FlagBasis& basis) {
    const Graph pent = pentagon();
    int k = basis.type.k();
    int dim = static_cast<int>(basis.flags.size());
    std::vector<QVector> vecs;
    std::vector<int> tuple(k, 0);
    while (true) {
        bool match = true;
        for (int a = 0; a < k && match; ++a)
            for (int b = a + 1; b < k && match; ++b)
                if (basis.type.sigma.has_edge(a, b) != pent.has_edge(tuple[a], tuple[b]))
                    match = false;
        if (match) {
            QVector v(dim);
            for (int i = 0; i < dim; ++i)
                v[i] = flag_density_at(pent, tuple, basis.flags[i]);
            if (std::find(vecs.begin(), vecs.end(), v) == vecs.end()) vecs.push_back(std::move(v));
        }
        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == 4) {
            tuple[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[pos];
    }
    return vecs;
}

Certificate round_tight(const SdpLayout& layout, const FloatSolution& sol,
                        const RoundOptions& opts, const Rational& y) {
    VarMap vm(layout);
    size_t nvars = vm.vars.size();
    QVector x(nvars);
    for (size_t v = 0; v < nvars; ++v) {
        auto [b, i, j] = vm.vars[v];
        x[v] = approx_nearest(rational_from_double(sol.psd[b][i][j]), opts.den_cap);
    }

    // the exact bound the support equalities pin down
    Rational cap = c5_density_cap(), floor_ = c5plus_density_floor();
    Rational target = layout.kind == BoundKind::lower_c5plus ? floor_ - cap * y : cap;

    DensityVector c5v = expansion_coefficients(pentagon(), layout.level);
    DensityVector c5pv;
    if (layout.kind == BoundKind::lower_c5plus)
        c5pv = expansion_coefficients(pentagon_plus(), layout.level);

    std::vector<QVector> rows;
    QVector rhs;
    // support equalities: every F with positive density in the extremal
    // graphon must meet the bound with equality
    Graphon extremal{pentagon(), {}};
    for (size_t fi = 0; fi < layout.universe_graphs.size(); ++fi) {
        const Graph& f = layout.universe_graphs[fi];
        if (graphon_density(extremal, f) == 0) continue;
        QVector row(nvars, Rational(0));
        for (size_t b = 0; b < layout.bases.size(); ++b) {
            QMatrix w = pair_average_matrix(layout.bases[b], f);
            int d = static_cast<int>(layout.bases[b].flags.size());
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j)
                    row[vm.index(static_cast<int>(b), i, j)] =
                        i == j ? w[i][j] : 2 * w[i][j];
        }
        const std::string& g6 = layout.universe[fi];
        if (layout.kind == BoundKind::lower_c5plus)
            rhs.push_back(c5pv.at(g6) - y * c5v.at(g6) - (floor_ - cap * y));
        else
            rhs.push_back(cap - c5v.at(g6));
        rows.push_back(std::move(row));
    }
    // kernel rows: M v = 0 for every extremal rooted density vector v
    for (size_t b = 0; b < layout.bases.size(); ++b) {
        int d = static_cast<int>(layout.bases[b].flags.size());
        for (const QVector& v : extremal_kernel_vectors(layout.bases[b])) {
            for (int r = 0; r < d; ++r) {
                QVector row(nvars, Rational(0));
                for (int j = 0; j < d; ++j)
                    row[vm.index(static_cast<int>(b), r, j)] += v[j];
                rows.push_back(std::move(row));
                rhs.push_back(Rational(0));
            }
        }
    }

    if (!solve_affine(rows, rhs, x))
        throw std::runtime_error(
            "tight rounding: support/kernel system inconsistent at this level");

    std::vector<QMatrix> blocks = assemble_blocks(layout, x, vm);
    for (size_t b = 0; b < blocks.size(); ++b)
        if (!verify_psd(blocks[b]))
            throw std::runtime_error("tight rounding: block " + std::to_string(b) +
                                     " lost positive semidefiniteness; raise --den-cap");

    Certificate cert = build_certificate(layout, std::move(blocks), y, opts);
    Verdict verdict = verify_certificate(cert);
    if (!verdict.valid)
        throw std::runtime_error("tight rounding: certificate failed verification: " +
                                 verdict.failure);
    bool on_target = layout.kind == BoundKind::lower_c5plus ? verdict.k == floor_ - cap * y
                                                            : verdict.k == target;
    if (!on_target)
        throw std::runtime_error("tight rounding: proven bound " + rational_str(verdict.k) +
                                 " missed the extremal target " + rational_str(target));
    return cert;
}

Certificate round_plain(const SdpLayout& layout, const FloatSolution& sol,
                        const RoundOptions& opts, const Rational& y) {
    VarMap vm(layout);
    QVector x(vm.vars.size());
    for (size_t v = 0; v < vm.vars.size(); ++v) {
        auto [b, i, j] = vm.vars[v];
        x[v] = approx_nearest(rational_from_double(sol.psd[b][i][j]), opts.den_cap);
    }
    std::vector<QMatrix> blocks = assemble_blocks(layout, x, vm);
    // repair each block to exact PSD with the smallest delta*I from a
    // doubling search, all within the shift budget
    for (QMatrix& m : blocks) {
        if (m.empty() || verify_psd(m)) continue;
        Rational delta = opts.shift_budget / 1048576;
        bool fixed = false;
        while (delta <= opts.shift_budget) {
            QMatrix shifted = m;
            for (size_t i = 0; i < m.size(); ++i) shifted[i][i] += delta;
            if (verify_psd(shifted)) {
                m = std::move(shifted);
                fixed = true;
                break;
            }
            delta *= 2;
        }
        if (!fixed) throw std::runtime_error("rounding: PSD repair budget exhausted");
    }
    Certificate cert = build_certificate(layout, std::move(blocks), y, opts);
    Verdict verdict = verify_certificate(cert);
    if (!verdict.valid)
        throw std::runtime_error("rounding: certificate failed verification: " +
                                 verdict.failure);
    return cert;
}

}  // namespace

Certificate round_solution(const SdpLayout& layout, const FloatSolution& sol,
                           const RoundOptions& opts) {
    if (sol.psd.size() != layout.bases.size())
        throw std::invalid_argument("round_solution: solution does not match layout");
    Rational y = 0;
    if (layout.kind == BoundKind::lower_c5plus) {
        if (layout.fix_y)
            y = *layout.fix_y;
        else if (opts.y_override)
            y = *opts.y_override;
        else
            y = approx_below(rational_from_double(sol.y), opts.den_cap);
        if (y < 0) y = 0;
    }
    return opts.tight ? round_tight(layout, sol, opts, y) : round_plain(layout, sol, opts, y);
}

}  // namespace c5
