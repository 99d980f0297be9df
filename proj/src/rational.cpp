#include "c5/rational.hpp"

#include <cctype>
#include <cmath>

namespace c5 {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num(text.substr(0, slash), 10);
        Integer den(text.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r{Integer(text, 10)};
        return r;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits = digits.substr(1);
    }
    if (digits.empty()) throw std::invalid_argument("rational: bad decimal '" + text + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("rational: bad decimal '" + text + "'");
    Integer num(digits, 10);
    Integer den = 1;
    size_t places = text.size() - dot - 1;
    for (size_t i = 0; i < places; ++i) den *= 10;
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_decimal(const Rational& r, int digits) {
    Integer num = r.get_num();
    Integer den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer whole = num / den;
    Integer frac = ((num - whole * den) * scale) / den;
    std::string f = frac.get_str();
    while (static_cast<int>(f.size()) < digits) f = "0" + f;
    std::string out = whole.get_str();
    if (digits > 0) out += "." + f;
    return neg ? "-" + out : out;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
    Rational r(x);
    r.canonicalize();
    return r;
}

namespace {

// Stern-Brocot walk restricted to denominators <= cap. Runs on exact
// rationals, so there is no floating-point fuzz in the result. Returns the
// best candidates on both sides of x.
struct Bracket {
    Rational lo, hi;  // lo <= x <= hi, both with den <= cap
};

Bracket bracket(const Rational& x, const Integer& cap) {
    if (cap < 1) throw std::invalid_argument("approx: denominator cap < 1");
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Integer lo_n = fl, lo_d = 1, hi_n = fl + 1, hi_d = 1;
    if (Rational(lo_n, lo_d) == x) return {x, x};
    while (true) {
        // mediant step, accelerated: take as many steps toward x as fit
        Integer med_n = lo_n + hi_n, med_d = lo_d + hi_d;
        if (med_d > cap) break;
        Rational med(med_n, med_d);
        med.canonicalize();
        if (med == x) return {med, med};
        if (med < x) {
            // k maximal with (lo + k*hi) / .. still <= x and den <= cap
            // (lo_n + k hi_n) / (lo_d + k hi_d) <= x
            // k <= (x.den*lo_n - x.num*lo_d) / (x.num*hi_d - x.den*hi_n)
            Integer numer = x.get_num() * lo_d - x.get_den() * lo_n;
            Integer denom = x.get_den() * hi_n - x.get_num() * hi_d;
            Integer k = numer / denom;  // floor, all positive
            Integer kcap = (cap - lo_d) / hi_d;
            if (k > kcap) k = kcap;
            if (k < 1) k = 1;
            lo_n += k * hi_n;
            lo_d += k * hi_d;
            if (Rational(lo_n, lo_d) == x) break;
        } else {
            Integer numer = x.get_den() * hi_n - x.get_num() * hi_d;
            Integer denom = x.get_num() * lo_d - x.get_den() * lo_n;
            Integer k = numer / denom;
            Integer kcap = (cap - hi_d) / lo_d;
            if (k > kcap) k = kcap;
            if (k < 1) k = 1;
            hi_n += k * lo_n;
            hi_d += k * lo_d;
            if (Rational(hi_n, hi_d) == x) break;
        }
    }
    Rational lo(lo_n, lo_d), hi(hi_n, hi_d);
    lo.canonicalize();
    hi.canonicalize();
    if (lo == x || hi == x) return {x, x};
    return {lo, hi};
}

}  // namespace

Rational approx_nearest(const Rational& x, const Integer& cap) {
    Bracket b = bracket(x, cap);
    if (b.lo == b.hi) return b.lo;
    return (x - b.lo <= b.hi - x) ? b.lo : b.hi;
}

Rational approx_below(const Rational& x, const Integer& cap) { return bracket(x, cap).lo; }

Rational approx_above(const Rational& x, const Integer& cap) { return bracket(x, cap).hi; }

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace c5
