#pragma once

#include "awx/diffop.hpp"
#include "awx/lambda.hpp"
#include "awx/qseries.hpp"

namespace awx {

inline bool is_z_symmetric(const LaurentPoly& h) {
    if (h.var() != Var::z) return false;
    for (const auto& [e, c] : h.terms())
        if (h.coeff(-e) != c) return false;
    return true;
}

// Laurent polynomial in z invariant under z <-> 1/z, i.e. a polynomial in
// x = (z + 1/z)/2. Symmetry is validated at construction.
class SymmetricLaurent {
public:
    SymmetricLaurent() : p_(Var::z) {}
    explicit SymmetricLaurent(const LaurentPoly& p) : p_(p) {
        if (!is_z_symmetric(p))
            throw InternalError("polynomial is not symmetric under z <-> 1/z: " + p.str());
    }

    const LaurentPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    long degree() const { return p_.degree(); }
    Rational coeff(long e) const { return p_.coeff(e); }

    friend SymmetricLaurent operator+(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return SymmetricLaurent(a.p_ + b.p_);
    }
    friend SymmetricLaurent operator-(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return SymmetricLaurent(a.p_ - b.p_);
    }
    friend SymmetricLaurent operator*(const SymmetricLaurent& a, const SymmetricLaurent& b) {
        return SymmetricLaurent(a.p_ * b.p_);
    }
    friend SymmetricLaurent operator*(const Rational& s, const SymmetricLaurent& a) {
        return SymmetricLaurent(s * a.p_);
    }
    friend SymmetricLaurent operator*(const SymmetricLaurent& a, const Rational& s) {
        return SymmetricLaurent(a.p_ * s);
    }
    bool operator==(const SymmetricLaurent& o) const { return p_ == o.p_; }
    bool operator!=(const SymmetricLaurent& o) const { return p_ != o.p_; }

private:
    LaurentPoly p_;
};

inline SymmetricLaurent two_x() {
    LaurentPoly p(Var::z);
    p.set_coeff(1, Rational(1));
    p.set_coeff(-1, Rational(1));
    return SymmetricLaurent(p);
}

// The Askey-Wilson polynomial p_n(x; a,b,c,d) as a symmetric Laurent
// polynomial of z, from its terminating 4phi3 form.
inline SymmetricLaurent aw_poly(long n, const Parameters& p) {
    if (n < 0) throw DomainError("aw_poly needs n >= 0");
    const Rational &a = p.a(), &b = p.b(), &c = p.c(), &d = p.d(), &q = p.q();
    Rational ab(a * b), ac(a * c), ad(a * d);
    std::array<LaurentPoly, 4> upper = {
        LaurentPoly::constant(Var::z, rat_pow(q, -n)),
        LaurentPoly::constant(Var::z, Rational(p.abcd() * rat_pow(q, n - 1))),
        LaurentPoly::monomial(Var::z, 1, a),
        LaurentPoly::monomial(Var::z, -1, a),
    };
    LaurentPoly series = phi43_terminating(upper, {ab, ac, ad}, q, n, q);
    Rational prefactor =
        Rational(qpochhammer({ab, ac, ad}, n, q) / rat_pow(a, n));
    return SymmetricLaurent(series * prefactor);
}

// xi^l_n, exactly. For n < 0 the meromorphic extension vanishes.
inline Rational xi_eval(ParamLabel l, long n, const Parameters& p) {
    if (n < 0) return Rational(0);
    auto e = p.cycle(l);
    const Rational& q = p.q();
    Rational num = Rational(rat_pow(q, n) * qpochhammer(Rational(e[0] * e[1] * e[2] * e[3] / q), n, q));
    Rational den = Rational(rat_pow(e[0], n) *
                            qpochhammer({Rational(e[1] * e[2]), Rational(e[1] * e[3]),
                                         Rational(e[2] * e[3]), q},
                                        n, q));
    return Rational(num / den);
}

// xi^l_{gamma+1} / xi^l_gamma as a rational function of t = q^gamma.
inline RatFunc xi_step(ParamLabel l, const Parameters& p) {
    auto e = p.cycle(l);
    const Rational& q = p.q();
    Rational E = p.abcd();
    LaurentPoly num = qpoch_linear(Var::t, Rational(E / q), 1, q) * q;
    LaurentPoly den = qpoch_linear(Var::t, Rational(e[1] * e[2]), 1, q) *
                      qpoch_linear(Var::t, Rational(e[1] * e[3]), 1, q) *
                      qpoch_linear(Var::t, Rational(e[2] * e[3]), 1, q) *
                      qpoch_linear(Var::t, q, 1, q) * e[0];
    return RatFunc(num, den);
}

// xi^l_{gamma+alpha} / xi^l_{gamma+beta} as a rational function of t.
inline RatFunc xi_ratio(ParamLabel l, long alpha, long beta, const Parameters& p) {
    RatFunc acc = RatFunc::constant(Var::t, Rational(1));
    if (alpha == beta) return acc;
    RatFunc step = xi_step(l, p);
    if (alpha > beta) {
        for (long i = beta; i < alpha; ++i) acc *= step.scale_arg(rat_pow(p.q(), i));
    } else {
        for (long i = alpha; i < beta; ++i) acc /= step.scale_arg(rat_pow(p.q(), i));
    }
    return acc;
}

// Three-term recurrence operator: coefficients A, B, C as rational functions
// of t = q^gamma, with s = a+b+c+d and s' the sum of reciprocals.
inline DiffOpN make_recurrence_op(const Parameters& p) {
    const Rational& q = p.q();
    Rational E = p.abcd(), s = p.s(), sp = p.s_prime();
    LaurentPoly one = LaurentPoly::constant(Var::t, Rational(1));
    auto lin = [&](const Rational& c) { return qpoch_linear(Var::t, c, 1, q); };  // 1 - c t

    // A_gamma = (1 - E t/q) / ((1 - E t^2/q)(1 - E t^2))
    RatFunc A(Var::t);
    {
        LaurentPoly d1 = one, d2 = one;
        d1.set_coeff(2, Rational(-E / q));
        d2.set_coeff(2, Rational(-E));
        A = RatFunc(lin(Rational(E / q)), d1 * d2);
    }

    // B_gamma = (t/q)[(1 + E t^2/q)(s q + s' E) - (t/q)(1+q) E (s + s' q)]
    //           / ((1 - E t^2/q^2)(1 - E t^2))
    RatFunc B(Var::t);
    {
        LaurentPoly inner = one;
        inner.set_coeff(2, Rational(E / q));
        inner *= Rational(s * q + sp * E);
        LaurentPoly corr = LaurentPoly::monomial(Var::t, 1, Rational((1 + q) * E * (s + sp * q) / q));
        inner -= corr;
        LaurentPoly num = inner.shifted(1) * Rational(1 / q);
        LaurentPoly d1 = one, d2 = one;
        d1.set_coeff(2, Rational(-E / (q * q)));
        d2.set_coeff(2, Rational(-E));
        B = RatFunc(num, d1 * d2);
    }

    // C_gamma = (1-ab t/q)(1-ac t/q)(1-ad t/q)(1-bc t/q)(1-bd t/q)(1-cd t/q)(1-t)
    //           / ((1 - E t^2/q^2)(1 - E t^2/q))
    RatFunc C(Var::t);
    {
        LaurentPoly num = one;
        const Rational &a = p.a(), &b = p.b(), &c = p.c(), &d = p.d();
        for (const Rational& pr :
             {Rational(a * b), Rational(a * c), Rational(a * d), Rational(b * c),
              Rational(b * d), Rational(c * d)})
            num = num * lin(Rational(pr / q));
        num = num * lin(Rational(1));
        LaurentPoly d1 = one, d2 = one;
        d1.set_coeff(2, Rational(-E / (q * q)));
        d2.set_coeff(2, Rational(-E / q));
        C = RatFunc(num, d1 * d2);
    }

    DiffOpN L(q);
    L.set_coeff(1, A);
    L.set_coeff(0, B);
    L.set_coeff(-1, C);
    return L;
}

namespace detail {

inline RatFunc aw_A_of_z(const Parameters& p) {
    const Rational& q = p.q();
    LaurentPoly num = qpoch_linear(Var::z, p.a(), 1, q) * qpoch_linear(Var::z, p.b(), 1, q) *
                      qpoch_linear(Var::z, p.c(), 1, q) * qpoch_linear(Var::z, p.d(), 1, q);
    LaurentPoly one = LaurentPoly::constant(Var::z, Rational(1));
    LaurentPoly d1 = one, d2 = one;
    d1.set_coeff(2, Rational(-1));
    d2.set_coeff(2, Rational(-q));
    return RatFunc(num, d1 * d2);
}

inline RatFunc contiguous_A_of_z(ParamLabel l, const Parameters& p) {
    auto e = p.cycle(l);
    const Rational& q = p.q();
    LaurentPoly first(Var::z);
    first.set_coeff(0, q);
    first.set_coeff(1, e[0]);  // q + e1 z
    LaurentPoly num = first * qpoch_linear(Var::z, e[1], 1, q) * qpoch_linear(Var::z, e[2], 1, q) *
                      qpoch_linear(Var::z, e[3], 1, q);
    LaurentPoly one = LaurentPoly::constant(Var::z, Rational(1));
    LaurentPoly d1 = one, d2 = one;
    d1.set_coeff(2, Rational(-1));
    d2.set_coeff(2, Rational(-q));
    return RatFunc(num, d1 * d2);
}

inline RatFunc invert_z(const RatFunc& f) {
    return RatFunc(f.num().invert_arg(), f.den().invert_arg());
}

}  // namespace detail

// Askey-Wilson q-difference operator B_z = A(z) D_z - [A(z)+A(1/z)] Id + A(1/z) D_z^{-1}.
inline QDiffOpZ make_aw_qdiff_op(const Parameters& p) {
    RatFunc A = detail::aw_A_of_z(p);
    RatFunc Ainv = detail::invert_z(A);
    QDiffOpZ B(p.q());
    B.set_coeff(1, A);
    B.set_coeff(0, -(A + Ainv));
    B.set_coeff(-1, Ainv);
    return B;
}

// Contiguous operator B^l_z with the (q - abcd/q) constant in the identity term.
inline QDiffOpZ make_contiguous_qdiff_op(ParamLabel l, const Parameters& p) {
    RatFunc A = detail::contiguous_A_of_z(l, p);
    RatFunc Ainv = detail::invert_z(A);
    RatFunc cst = RatFunc::constant(Var::z, Rational(p.q() - p.abcd() / p.q()));
    QDiffOpZ B(p.q());
    B.set_coeff(1, A);
    B.set_coeff(0, cst - A - Ainv);
    B.set_coeff(-1, Ainv);
    return B;
}

// The conjugated recurrence operator L^l = xi^l L (xi^l)^{-1}; its
// coefficients are rational in t because only same-label xi ratios enter.
inline DiffOpN make_conjugated_recurrence_op(ParamLabel l, const Parameters& p) {
    DiffOpN L = make_recurrence_op(p);
    return L.conjugate_by_ratio([&](long j) { return xi_ratio(l, 0, j, p); });
}

}  // namespace awx
