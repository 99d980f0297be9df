#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c5/certificate.hpp"
#include "c5/flags.hpp"

namespace c5 {

// Shared description of an emitted problem; the writer, the solution
// parser and the rounder all derive the same deterministic block layout
// from (kind, level, lb, fix_y).
struct SdpLayout {
    BoundKind kind = BoundKind::lower_c5plus;
    int level = 6;
    Rational lb;
    std::optional<Rational> fix_y;
    std::vector<FlagBasis> bases;        // PSD blocks, ordered by (k, type bytes)
    std::vector<std::string> universe;   // constraint order: sorted canonical g6
    std::vector<Graph> universe_graphs;

    bool has_y_block() const {
        return kind == BoundKind::lower_c5plus && !fix_y.has_value();
    }
};

SdpLayout sdp_layout(BoundKind kind, int level, const Rational& lb,
                     std::optional<Rational> fix_y = std::nullopt);

// Sparse SDPA text; byte-identical for identical inputs. The header
// comments document the exact block layout so any compatible solver works.
std::string write_sdpa(const SdpLayout& layout);

struct FloatSolution {
    std::vector<std::vector<std::vector<double>>> psd;  // per PSD block
    double y = 0;
    double bound = 0;      // K (lower kind) or U (upper kind)
    double objective = 0;  // K + y*lb resp. -U
};

// Reads the solver output format written by tools/solve_sdpa.py (CSDP
// style): one line with the m primal values, then "1 blk i j v" slack and
// "2 blk i j v" solution-matrix entries.
FloatSolution parse_solution(const SdpLayout& layout, const std::string& text);
FloatSolution load_solution(const SdpLayout& layout, const std::string& path);

struct RoundOptions {
    Integer den_cap = 10000;
    Rational shift_budget = make_rational(1, 100);
    // Tight mode pins the proven bound to the exact extremal value
    // (24/625 upper, 72/625 at the corner for the lower kind) by solving
    // the support equalities and extremal-kernel conditions exactly
    // instead of shifting by delta*I.
    bool tight = false;
    std::optional<Rational> y_override;  // rational y for the lower kind
    Rational claimed_a, claimed_b;       // claimed line of the result
};

// Rounds a float solution to an exact certificate and verifies it before
// returning; throws if no valid certificate comes out.
Certificate round_solution(const SdpLayout& layout, const FloatSolution& sol,
                           const RoundOptions& opts);

}  // namespace c5
