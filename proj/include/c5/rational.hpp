#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace c5 {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator. All density and certificate arithmetic runs on
// these; no floating point is used anywhere in a proof path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", and decimal strings like "-0.0384" or "4.57771".
Rational parse_rational(const std::string& text);

// Canonical form used in serialized files: "p/q" with q >= 1, reduced.
std::string rational_str(const Rational& r);

// Decimal expansion with `digits` places after the point, truncated toward
// zero. Deterministic; used for solver-facing files and human tables.
std::string rational_decimal(const Rational& r, int digits);

// Exact value of an IEEE double (every finite double is a rational).
Rational rational_from_double(double x);

// Best rational approximations with denominator <= cap, found by walking
// the Stern-Brocot tree, so the result is optimal for its denominator
// bound. `nearest` minimizes |x - p/q|; the directed variants return the
// best p/q <= x resp. >= x.
Rational approx_nearest(const Rational& x, const Integer& den_cap);
Rational approx_below(const Rational& x, const Integer& den_cap);
Rational approx_above(const Rational& x, const Integer& den_cap);

Rational rational_pow(const Rational& base, unsigned exp);

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer falling_factorial(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<long>(n - i);
    return r;
}

}  // namespace c5
