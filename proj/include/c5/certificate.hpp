#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "c5/densities.hpp"
#include "c5/flags.hpp"
#include "c5/linalg.hpp"
#include "c5/rational.hpp"

namespace c5 {

// Two kinds of linear density bounds are certified:
//   lower_c5plus:  d(C5+) >= y*(d(C5) - lb) + b  given d(C5) >= lb
//   upper_c5:      d(C5)  <= b
enum class BoundKind { lower_c5plus, upper_c5 };

struct CertBlock {
    Type type;
    std::vector<Flag> flags;  // stated basis, referenced by index
    QMatrix matrix;           // symmetric PSD block
};

struct Certificate {
    BoundKind kind = BoundKind::lower_c5plus;
    int level = 6;
    Rational lb;  // left endpoint of the admissible d(C5) interval (lower kind)
    Rational y;   // nonnegative multiplier of (d(C5) - lb) (lower kind)
    Rational claimed_a, claimed_b;  // the bound line being claimed
    std::vector<CertBlock> blocks;
    std::vector<std::pair<std::string, Rational>> slacks;  // optional alpha_F, by F g6
};

struct Verdict {
    bool valid = false;
    // lower kind: K = min over F of net(F); the certificate proves
    // d(C5+) >= y*d(C5) + K for every triangle-free graphon.
    // upper kind: K = max over F of (c_F + sos_F), proving d(C5) <= K.
    Rational k;
    Rational proven_a, proven_b;          // proven line in the claimed form
    Rational margin_left, margin_right;   // dominance margins at the endpoints
    std::vector<std::pair<std::string, Rational>> per_f_slack;  // net(F) - K, by F g6
    std::string failure;                  // nonempty iff !valid
};

Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);
// Canonical bit-exact serialization; emit(parse(d)) == normalize(d).
std::string emit_certificate(const Certificate& c);

// Exact verification: PSD of every block by rational LDL^T, net
// coefficients for every F in the level's universe, and dominance of the
// proven line over the claimed line on [lb, 24/625] (both linear, so the
// two endpoints decide). No epsilon anywhere.
Verdict verify_certificate(const Certificate& c);

// One step of the end-to-end chain log.
struct ChainStep {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ChainReport {
    bool ok = false;
    std::vector<ChainStep> steps;
};

// End-to-end check that three verified certificates carry the full
// argument: the lower certificate covers every n in [10,99] via the exact
// d_n ratios, and the tight + upper certificates cover n >= 100 together
// with the residue-class polynomial checks.
ChainReport verify_bound_chain(const Certificate& lower, const Certificate& tight,
                               const Certificate& upper);

}  // namespace c5
