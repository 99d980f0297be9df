// Command-line front end: census and extremal tables, the exact
// inequality range checks, certificate verification, and the SDP
// generate/round pipeline. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "c5/canon.hpp"
#include "c5/certificate.hpp"
#include "c5/densities.hpp"
#include "c5/enumerate.hpp"
#include "c5/flags.hpp"
#include "c5/graph6.hpp"
#include "c5/sdp.hpp"
#include "c5/version.hpp"

using namespace c5;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, dots));
        r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range");
    return r;
}

void header(const std::string& cmd, const std::string& columns) {
    std::cout << "# " << kToolName << " " << kToolVersion << " " << cmd << "\n";
    std::cout << "# columns: " << columns << "\n";
}

// run f(n) for each n in the range, possibly on several workers, and emit
// results in order (deterministic regardless of schedule)
template <typename F>
void ordered_map(const Range& r, int workers, F&& f) {
    if (workers <= 1) {
        for (int n = r.lo; n <= r.hi; ++n) f(n)();
        return;
    }
    std::vector<std::future<std::function<void()>>> futs;
    for (int n = r.lo; n <= r.hi; ++n)
        futs.push_back(std::async(std::launch::async, [&f, n] { return f(n); }));
    for (auto& fut : futs) fut.get()();
}

int cmd_census(const Range& r, const std::string& format, const std::string& emit, int workers) {
    if (r.hi > 12) throw CLI::ValidationError("range", "census supports n <= 12");
    if (format == "rows") header("census", "n classes cumulative");
    long cumulative = 0;
    ordered_map(r, workers, [&](int n) {
        std::vector<std::string> g6;
        long count = enumerate_triangle_free(n, [&](const Graph& g) {
            if (emit == "all") g6.push_back(canonical_form(g).bytes);
        });
        return std::function<void()>([&, n, count, g6 = std::move(g6)] {
            cumulative += count;
            if (format == "rows")
                std::cout << n << " " << count << " " << cumulative << "\n";
            else
                std::cout << "n=" << n << "  classes=" << count << "  cumulative=" << cumulative
                          << "\n";
            for (const std::string& s : g6) std::cout << s << "\n";
        });
    });
    return kExitOk;
}

int cmd_extremal(const Range& r, const std::string& format, const std::string& emit,
                 int workers) {
    if (r.lo < 1 || r.hi > 12) throw CLI::ValidationError("range", "extremal supports 1 <= n <= 12");
    if (format == "rows") header("extremal", "n classes max_c5 winners formula agree");
    bool all_agree = true;
    ordered_map(r, workers, [&](int n) {
        Census c = extremal_c5(n);
        return std::function<void()>([&, n, c = std::move(c)] {
            long formula = 1;
            for (int i = 0; i < 5; ++i) formula *= (n + i) / 5;
            bool agree = n < 5 ? c.max_c5 == 0 : c.max_c5 == formula;
            all_agree = all_agree && agree;
            if (format == "rows")
                std::cout << n << " " << c.total << " " << c.max_c5 << " " << c.winners.size()
                          << " " << formula << " " << (agree ? 1 : 0) << "\n";
            else
                std::cout << "n=" << n << "  classes=" << c.total << "  max_c5=" << c.max_c5
                          << "  winners=" << c.winners.size() << "  formula=" << formula
                          << (agree ? "" : "  MISMATCH") << "\n";
            if (emit == "winners")
                for (const std::string& w : c.winners) std::cout << w << "\n";
        });
    });
    return all_agree ? kExitOk : kExitMathFail;
}

int cmd_margins(const Range& r, const BoundLine& line, const std::string& format, int workers) {
    if (r.lo < 10 || r.hi > 99) throw CLI::ValidationError("range", "margins cover 10 <= n <= 99");
    if (format == "rows") header("margins", "n d_n margin holds");
    bool all_hold = true;
    ordered_map(r, workers, [&](int n) {
        SmallNCheck c = small_n_ratio_check(n, line);
        return std::function<void()>([&, c] {
            all_hold = all_hold && c.holds;
            if (format == "rows")
                std::cout << c.n << " " << rational_str(c.dn) << " " << rational_str(c.margin)
                          << " " << (c.holds ? 1 : 0) << "\n";
            else
                std::cout << "n=" << c.n << "  d_n=" << rational_str(c.dn) << " ("
                          << rational_decimal(c.dn, 8) << ")  margin=" << rational_decimal(c.margin, 8)
                          << (c.holds ? "" : "  FAIL") << "\n";
        });
    });
    return all_hold ? kExitOk : kExitMathFail;
}

int cmd_asym(int m0, long direct_to) {
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        bool pass = asymptotic_check(i, m0);
        ok = ok && pass;
        std::cout << "residue " << i << " (n = 5m+" << i << ", m >= " << m0
                  << "): " << (pass ? "proved" : "NOT PROVED") << "\n";
    }
    if (direct_to >= 100) {
        bool pass = true;
        int first_fail = 0;
        for (int n = 100; n <= direct_to; ++n)
            if (!asymptotic_direct(n)) {
                pass = false;
                first_fail = n;
                break;
            }
        ok = ok && pass;
        std::cout << "direct check on [100, " << direct_to << "]: "
                  << (pass ? "holds" : "fails at n=" + std::to_string(first_fail)) << "\n";
    }
    FinalChainCheck fc = final_chain_check(100);
    ok = ok && fc.holds && fc.last_margin == 0;
    std::cout << "closing display at n=100: " << (fc.holds ? "holds" : "FAILS")
              << ", last step margin " << rational_str(fc.last_margin) << " (want 0/1)\n";
    return ok ? kExitOk : kExitMathFail;
}

int cmd_verify(const std::string& path, bool quiet) {
    Certificate cert = load_certificate(path);
    Verdict v = verify_certificate(cert);
    if (!quiet) {
        std::cout << "kind: " << (cert.kind == BoundKind::lower_c5plus ? "lower_c5plus" : "upper_c5")
                  << "  level: " << cert.level << "  blocks: " << cert.blocks.size() << "\n";
        if (cert.kind == BoundKind::lower_c5plus) {
            std::cout << "proven: d(C5+) >= " << rational_str(v.proven_a) << " * (d(C5) - "
                      << rational_str(cert.lb) << ") + " << rational_str(v.proven_b)
                      << "  on d(C5) >= " << rational_str(cert.lb) << "\n";
            std::cout << "universal constant K = " << rational_str(v.k) << "\n";
        } else {
            std::cout << "proven: d(C5) <= " << rational_str(v.k) << "\n";
        }
        std::cout << "claimed line: " << rational_str(cert.claimed_a) << " * (x - "
                  << rational_str(cert.lb) << ") + " << rational_str(cert.claimed_b) << "\n";
        std::cout << "dominance margins: " << rational_str(v.margin_left) << ", "
                  << rational_str(v.margin_right) << "\n";
    }
    if (v.valid) {
        std::cout << "VALID\n";
        return kExitOk;
    }
    std::cout << "INVALID: " << v.failure << "\n";
    return kExitMathFail;
}

int cmd_chain(const std::string& lower_path, const std::string& tight_path,
              const std::string& upper_path, bool verbose) {
    Certificate lower = load_certificate(lower_path);
    Certificate tight = load_certificate(tight_path);
    Certificate upper = load_certificate(upper_path);
    ChainReport rep = verify_bound_chain(lower, tight, upper);
    for (const ChainStep& s : rep.steps)
        if (verbose || !s.ok)
            std::cout << (s.ok ? "ok   " : "FAIL ") << s.name
                      << (s.detail.empty() ? "" : "  [" + s.detail + "]") << "\n";
    std::cout << (rep.ok ? "CHAIN PASS" : "CHAIN FAIL") << " (" << rep.steps.size()
              << " steps)\n";
    return rep.ok ? kExitOk : kExitMathFail;
}

BoundKind parse_kind(const std::string& s) {
    if (s == "lower") return BoundKind::lower_c5plus;
    if (s == "upper") return BoundKind::upper_c5;
    throw CLI::ValidationError("kind", "must be lower or upper");
}

int cmd_sdp_gen(const std::string& kind, int level, const std::string& lb,
                const std::string& fix_y, const std::string& out) {
    std::optional<Rational> fy;
    if (!fix_y.empty()) fy = parse_rational(fix_y);
    SdpLayout layout = sdp_layout(parse_kind(kind), level, parse_rational(lb), fy);
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << write_sdpa(layout);
    std::cout << "wrote " << out << " (" << layout.universe.size() << " constraints, "
              << layout.bases.size() << " psd blocks)\n";
    return kExitOk;
}

int cmd_round(const std::string& kind, int level, const std::string& lb,
              const std::string& fix_y, const std::string& solution, const std::string& out,
              const std::string& claimed_a, const std::string& claimed_b,
              const std::string& den_cap, const std::string& shift_budget, bool tight,
              const std::string& y_override) {
    std::optional<Rational> fy;
    if (!fix_y.empty()) fy = parse_rational(fix_y);
    SdpLayout layout = sdp_layout(parse_kind(kind), level, parse_rational(lb), fy);
    FloatSolution sol = load_solution(layout, solution);
    RoundOptions opts;
    opts.den_cap = Integer(den_cap, 10);
    opts.shift_budget = parse_rational(shift_budget);
    opts.tight = tight;
    if (!y_override.empty()) opts.y_override = parse_rational(y_override);
    opts.claimed_a = parse_rational(claimed_a);
    opts.claimed_b = parse_rational(claimed_b);
    Certificate cert = round_solution(layout, sol, opts);
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << emit_certificate(cert);
    Verdict v = verify_certificate(cert);
    std::cout << "wrote " << out << "; proven "
              << (cert.kind == BoundKind::lower_c5plus
                      ? "d(C5+) >= " + rational_str(v.proven_a) + "*(d(C5)-" +
                            rational_str(cert.lb) + ") + " + rational_str(v.proven_b)
                      : "d(C5) <= " + rational_str(v.k))
              << "\n";
    return kExitOk;
}

int cmd_flags(int level) {
    header("flags", "type_id type_k type_g6 flag_index flag_g6 roots...");
    int type_id = 0;
    for (int k = level % 2; k <= level - 2; k += 2) {
        for (const Type& t : representative_types(k)) {
            std::vector<Flag> flags = enumerate_flags(t, (level + k) / 2);
            for (size_t i = 0; i < flags.size(); ++i) {
                std::cout << type_id << " " << k << " " << graph6_encode(t.sigma) << " " << i
                          << " " << graph6_encode(flags[i].graph);
                for (int r : flags[i].roots) std::cout << " " << r;
                std::cout << "\n";
            }
            ++type_id;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for extremal pentagon counts in triangle-free graphs"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    std::string range_s = "0..9", format = "text", emit = "none";
    int workers = 1;

    auto* census = app.add_subcommand("census", "triangle-free isomorphism classes per order");
    census->add_option("--range", range_s, "n range, e.g. 0..9");
    census->add_option("--format", format, "text | rows")->check(CLI::IsMember({"text", "rows"}));
    census->add_option("--emit", emit, "none | all (graph6 stream)")
        ->check(CLI::IsMember({"none", "all"}));
    census->add_option("--workers", workers, "parallel workers (default 1, deterministic)");

    std::string xrange_s = "5..9", xformat = "text", xemit = "none";
    int xworkers = 1;
    auto* extremal = app.add_subcommand("extremal", "maximum pentagon counts and maximizers");
    extremal->add_option("--range", xrange_s, "n range, e.g. 5..9");
    extremal->add_option("--format", xformat, "text | rows")
        ->check(CLI::IsMember({"text", "rows"}));
    extremal->add_option("--emit", xemit, "none | winners (graph6 of maximizers)")
        ->check(CLI::IsMember({"none", "winners"}));
    extremal->add_option("--workers", xworkers, "parallel workers");

    std::string mrange_s = "10..99", mformat = "text";
    std::string line_a = "4.57771", line_b = "0.095058", line_x0 = "0.034";
    int mworkers = 1;
    auto* margins = app.add_subcommand("margins", "exact small-n ratio margins");
    margins->add_option("--range", mrange_s, "n range within 10..99");
    margins->add_option("--format", mformat, "text | rows")
        ->check(CLI::IsMember({"text", "rows"}));
    margins->add_option("--line-a", line_a, "bound line slope");
    margins->add_option("--line-b", line_b, "bound line value at x0");
    margins->add_option("--line-x0", line_x0, "bound line anchor");
    margins->add_option("--workers", mworkers, "parallel workers");

    int m0 = 20;
    long direct_to = 10000;
    auto* asym = app.add_subcommand("asym", "residue-class polynomial checks for large n");
    asym->add_option("--m0", m0, "residue-class start (n = 5*m0 + i)");
    asym->add_option("--direct-to", direct_to, "also check directly on [100, N]; 0 disables");

    std::string cert_path;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "verify a certificate exactly");
    verify->add_option("certificate", cert_path, "certificate file")->required();
    verify->add_flag("--quiet", quiet, "print only the verdict");

    std::string lower_path, tight_path, upper_path;
    bool chain_verbose = false;
    auto* chain = app.add_subcommand("chain", "verify the full bound chain for all n >= 10");
    chain->add_option("--lower", lower_path, "lower_c5plus certificate (covers 10 <= n < 100)")
        ->required();
    chain->add_option("--tight", tight_path, "lower_c5plus certificate tight at 24/625")
        ->required();
    chain->add_option("--upper", upper_path, "upper_c5 certificate")->required();
    chain->add_flag("--verbose", chain_verbose, "print every step");

    std::string gkind = "lower", glb = "17/500", gfix_y, gout = "problem.sdpa";
    int glevel = 6;
    auto* sdp_gen = app.add_subcommand("sdp-gen", "emit the bound problem in sparse SDPA form");
    sdp_gen->add_option("--kind", gkind, "lower | upper");
    sdp_gen->add_option("--level", glevel, "expansion level (5..7)");
    sdp_gen->add_option("--lb", glb, "d(C5) lower bound hypothesis (rational)");
    sdp_gen->add_option("--fix-y", gfix_y, "pin the multiplier y to this rational");
    sdp_gen->add_option("--out", gout, "output path")->required();

    std::string rkind = "lower", rlb = "17/500", rfix_y, rsol, rout = "out.cert";
    std::string rca = "0", rcb = "0", rden = "10000", rbudget = "1/100", ry;
    int rlevel = 6;
    bool rtight = false;
    auto* round = app.add_subcommand("round", "round a solver output to an exact certificate");
    round->add_option("--kind", rkind, "lower | upper");
    round->add_option("--level", rlevel, "expansion level used at generation");
    round->add_option("--lb", rlb, "lb used at generation");
    round->add_option("--fix-y", rfix_y, "fix-y used at generation");
    round->add_option("--solution", rsol, "solver output file")->required();
    round->add_option("--out", rout, "certificate output path")->required();
    round->add_option("--claimed-a", rca, "claimed line slope");
    round->add_option("--claimed-b", rcb, "claimed line value at lb");
    round->add_option("--den-cap", rden, "denominator cap for entry rounding");
    round->add_option("--shift-budget", rbudget, "PSD repair budget (delta*I)");
    round->add_flag("--tight", rtight, "pin the bound to the exact extremal value");
    round->add_option("--y", ry, "rational override for y");

    int flevel = 6;
    auto* flags_cmd = app.add_subcommand("flags", "export the flag bases used at a level");
    flags_cmd->add_option("--level", flevel, "expansion level (5..7)");

    try {
        app.parse(argc, argv);
        if (census->parsed()) return cmd_census(parse_range(range_s), format, emit, workers);
        if (extremal->parsed()) return cmd_extremal(parse_range(xrange_s), xformat, xemit, xworkers);
        if (margins->parsed())
            return cmd_margins(parse_range(mrange_s),
                               {parse_rational(line_x0), parse_rational(line_a),
                                parse_rational(line_b)},
                               mformat, mworkers);
        if (asym->parsed()) return cmd_asym(m0, direct_to);
        if (verify->parsed()) return cmd_verify(cert_path, quiet);
        if (chain->parsed()) return cmd_chain(lower_path, tight_path, upper_path, chain_verbose);
        if (sdp_gen->parsed()) return cmd_sdp_gen(gkind, glevel, glb, gfix_y, gout);
        if (round->parsed())
            return cmd_round(rkind, rlevel, rlb, rfix_y, rsol, rout, rca, rcb, rden, rbudget,
                             rtight, ry);
        if (flags_cmd->parsed()) return cmd_flags(flevel);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
