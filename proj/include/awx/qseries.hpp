#pragma once

#include <array>

#include "awx/laurent.hpp"
#include "awx/parameters.hpp"

namespace awx {

// (x;q)_n, extended to negative n by (x;q)_{-m} = 1 / prod_{l=1..m} (1 - x q^{-l}).
inline Rational qpochhammer(const Rational& x, long n, const Rational& q) {
    Rational acc(1);
    if (n >= 0) {
        Rational f(1);
        for (long l = 0; l < n; ++l) {
            acc *= Rational(1 - x * f);
            f *= q;
        }
    } else {
        Rational f(1);
        for (long l = 1; l <= -n; ++l) {
            f /= q;
            Rational factor(1 - x * f);
            if (factor == 0) throw DomainError("q-Pochhammer with vanishing factor at negative index");
            acc /= factor;
        }
    }
    return acc;
}

inline Rational qpochhammer(std::initializer_list<Rational> xs, long n, const Rational& q) {
    Rational acc(1);
    for (const Rational& x : xs) acc *= qpochhammer(x, n, q);
    return acc;
}

// prod_{l=0}^{m-1} (1 - c q^l X) as a polynomial in the tagged variable.
inline LaurentPoly qpoch_linear(Var v, const Rational& c, long m, const Rational& q) {
    LaurentPoly acc = LaurentPoly::constant(v, Rational(1));
    Rational f = c;
    for (long l = 0; l < m; ++l) {
        LaurentPoly factor = LaurentPoly::constant(v, Rational(1));
        factor.set_coeff(1, Rational(-f));
        acc = acc * factor;
        f *= q;
    }
    return acc;
}

// Terminating basic hypergeometric sum with four upper parameters (Laurent
// polynomials, usually monomials or constants), three constant lower
// parameters and a constant argument:
//
//   sum_{l=0}^{nterms} [prod_i (u_i;q)_l] / [(b_1,b_2,b_3,q;q)_l] * arg^l.
//
// Evaluated by the incremental term recurrence; a vanishing lower factor
// raises DomainError before it is divided by.
inline LaurentPoly phi43_terminating(const std::array<LaurentPoly, 4>& upper,
                                     const std::array<Rational, 3>& lower, const Rational& arg,
                                     long nterms, const Rational& q) {
    Var v = upper[0].var();
    LaurentPoly term = LaurentPoly::constant(v, Rational(1));
    LaurentPoly sum = term;
    Rational qpow(1);  // q^l
    for (long l = 0; l < nterms; ++l) {
        for (const LaurentPoly& u : upper) {
            LaurentPoly factor = LaurentPoly::constant(v, Rational(1)) - u * qpow;
            term = term * factor;
        }
        Rational denom = Rational(1 - q * qpow);  // (q;q) part, factor for l+1
        for (const Rational& b : lower) {
            Rational f(1 - b * qpow);
            if (f == 0) throw DomainError("vanishing lower parameter factor in 4phi3");
            denom *= f;
        }
        term *= Rational(arg / denom);
        sum += term;
        qpow *= q;
    }
    return sum;
}

}  // namespace awx
