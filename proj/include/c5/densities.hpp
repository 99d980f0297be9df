#pragma once

#include <vector>

#include "c5/graph.hpp"
#include "c5/rational.hpp"

namespace c5 {

struct Flag;  // flags.hpp

// Step graphon of a finite graph: n equal parts, adjacency inherited from
// the source. With roots present it is the rooted graphon of a flag whose
// roots sit in the listed parts (distinct source vertices, in order).
struct Graphon {
    Graph source;
    std::vector<int> roots;
};

// Exact probability that |H| independent uniform points of B induce a
// graph isomorphic to H. B must be unrooted.
Rational graphon_density(const Graphon& b, const Graph& h);

// Exact rooted density of flag f in a rooted graphon. The roots of b must
// induce f's type, in order.
Rational flag_density(const Graphon& b, const Flag& f);

// Internal form used for extremal-kernel computations: root parts may
// repeat (two roots landing in the same part of the step function).
Rational flag_density_at(const Graph& source, const std::vector<int>& root_parts, const Flag& f);

// Density of C5 in the graphon of the balanced blow-up of C5 on n
// vertices: 5! * ceil(n/5)^i * floor(n/5)^(5-i) / n^5 with i = n mod 5.
Rational balanced_blowup_c5_density(int n);

// reference constants of the verified inequalities, as exact rationals
inline Rational c5_density_cap() { return make_rational(24, 625); }        // 0.0384
inline Rational c5plus_density_floor() { return make_rational(72, 625); }  // 0.1152

// A straight line a*(x - x0) + b in the density variable x = d(C5).
struct BoundLine {
    Rational x0;
    Rational a;
    Rational b;
    Rational at(const Rational& x) const { return a * (x - x0) + b; }
};

// 4.57771 * (x - 0.034) + 0.095058, the reference lower bound on d(C5+)
// used on the 10 <= n < 100 range.
BoundLine reference_low_line();

// 6 * (x - 0.0384) + 0.1152, the bound that is tight at the extremal point.
BoundLine reference_tight_line();

struct SmallNCheck {
    int n = 0;
    bool holds = false;
    Rational dn;
    Rational lhs;     // (a(d_n - x0) + b) / (3 d_n)
    Rational margin;  // lhs - (1 - 1/n)
};

// The 10 <= n < 100 branch: checks (a(d_n-x0)+b)/(3 d_n) > 1 - 1/n in
// exact rationals. Throws if d_n < x0 (the line's hypothesis would fail).
SmallNCheck small_n_ratio_check(int n, const BoundLine& line = reference_low_line());

// Sufficient positivity test for d_n > 0.0384(1 - 50/n^2) on the whole
// residue class n = 5m+i, m >= m0: substitute m = m0 + t and check the
// expanded integer polynomial in t has nonnegative coefficients and a
// positive constant term. A false return means "not proven by this test".
bool asymptotic_check(int residue, int m0);

// Direct exact evaluation of the same inequality at one n.
bool asymptotic_direct(int n);

struct FinalChainCheck {
    long n = 0;
    bool holds = false;
    Rational step2_margin;  // (6(d_n-0.0384)+0.1152)/0.1152 - (1 - 100/n^2)
    Rational last_margin;   // (1 - 100/n^2) - (1 - 1/n); zero exactly at n=100
};

// The closing display of the n >= 100 branch, every step exact.
FinalChainCheck final_chain_check(long n);

}  // namespace c5
