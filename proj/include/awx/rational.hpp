#pragma once

#include <gmpxx.h>

#include <string>

#include "awx/errors.hpp"

namespace awx {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain integer string, exactly.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw DomainError("cannot parse rational: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw DomainError("rational with zero denominator: '" + s + "'");
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("negative power of zero");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1 / base) : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Rational rat_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DomainError("division by zero");
    return Rational(a / b);
}

// Exact rational square root used for q^(1/2); fails if the value is not
// a square in Q.
inline bool rat_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    Integer num = x.get_num(), den = x.get_den();
    Integer sn, sd;
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

}  // namespace awx
