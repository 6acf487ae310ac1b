#pragma once

#include <optional>
#include <string>

#include "awx/laurent.hpp"

namespace awx {

// Reduced rational function in one tagged variable.
//
// Canonical form: den is an ordinary polynomial (valuation 0) with constant
// term 1, gcd(num, den) is a unit, and all remaining content sits in num.
// Equality of values is equality of representations.
class RatFunc {
public:
    explicit RatFunc(Var v = Var::t)
        : num_(LaurentPoly(v)), den_(LaurentPoly::constant(v, Rational(1))) {}

    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (num.var() != den.var()) throw InternalError("mixed-variable rational function");
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        normalize();
    }

    explicit RatFunc(const LaurentPoly& num)
        : num_(num), den_(LaurentPoly::constant(num.var(), Rational(1))) {}

    static RatFunc constant(Var v, const Rational& c) {
        return RatFunc(LaurentPoly::constant(v, c));
    }
    static RatFunc variable(Var v) { return RatFunc(LaurentPoly::variable(v)); }

    Var var() const { return num_.var(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    bool is_constant() const { return is_laurent() && num_.is_constant(); }

    // Exact Laurent-polynomial view; throws if the denominator is nontrivial.
    LaurentPoly as_laurent() const {
        if (!is_laurent()) throw InternalError("rational function is not a Laurent polynomial: " + str());
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // Cross-reduce before multiplying to keep degrees down.
        LaurentPoly g1 = (a.num_.is_zero() || b.den_.is_constant())
                             ? LaurentPoly::constant(a.var(), Rational(1))
                             : laurent_gcd(a.num_, b.den_);
        LaurentPoly g2 = (b.num_.is_zero() || a.den_.is_constant())
                             ? LaurentPoly::constant(a.var(), Rational(1))
                             : laurent_gcd(b.num_, a.den_);
        LaurentPoly n1 = g1.is_constant() ? a.num_ : *try_divide(a.num_, g1);
        LaurentPoly d2 = g1.is_constant() ? b.den_ : *try_divide(b.den_, g1);
        LaurentPoly n2 = g2.is_constant() ? b.num_ : *try_divide(b.num_, g2);
        LaurentPoly d1 = g2.is_constant() ? a.den_ : *try_divide(a.den_, g2);
        return RatFunc(n1 * n2, d1 * d2);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        return a * b.inverse();
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc& operator*=(const Rational& s) {
        num_ *= s;
        return *this;
    }
    friend RatFunc operator*(RatFunc a, const Rational& s) { return a *= s; }
    friend RatFunc operator*(const Rational& s, RatFunc a) { return a *= s; }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw EvaluationError("pole at " + rat_str(x));
        return Rational(num_.eval(x) / d);
    }

    bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0 && num_.eval(x) != 0; }

    // Value at x with poles resolved by cancelling common (X - x) factors.
    Rational eval_reduced(const Rational& x) const {
        if (x == 0) return eval(x);
        LaurentPoly n = num_, d = den_;
        while (d.eval(x) == 0) {
            LaurentPoly lin(n.var());
            lin.set_coeff(1, Rational(1));
            lin.set_coeff(0, Rational(-x));
            auto dn = try_divide(n, lin);
            if (!dn) throw EvaluationError("pole at " + rat_str(x));
            auto dd = try_divide(d, lin);
            n = *dn;
            d = *dd;
        }
        return Rational(n.eval(x) / d.eval(x));
    }

    RatFunc scale_arg(const Rational& s) const {
        RatFunc r(var());
        r.num_ = num_.scale_arg(s);
        r.den_ = den_.scale_arg(s);
        r.normalize();
        return r;
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc acc = constant(var(), Rational(1));
        RatFunc b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * b;
            if (k >>= 1) b = b * b;
        }
        return acc;
    }

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(var(), Rational(1));
            return;
        }
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *try_divide(num_, g);
            den_ = *try_divide(den_, g);
        }
        // Push the denominator's monomial factor and content into num.
        long v = den_.valuation();
        if (v != 0) {
            den_ = den_.shifted(-v);
            num_ = num_.shifted(-v);
        }
        Rational t = den_.trailing_coeff();
        if (t != 1) {
            den_ /= t;
            num_ /= t;
        }
    }

    LaurentPoly num_, den_;
};

// f with its variable replaced by `image`, reduced. The image must be nonzero.
inline RatFunc substitute(const RatFunc& f, const RatFunc& image) {
    if (image.is_zero()) throw DomainError("substitution image is zero");
    Var v = image.var();
    auto subst_poly = [&](const LaurentPoly& p) {
        RatFunc acc = RatFunc::constant(v, Rational(0));
        if (p.is_zero()) return acc;
        // Horner over exponent gaps, top down; negative tail via inverse image.
        long prev = 0;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            RatFunc term = RatFunc::constant(v, it->second);
            if (first) {
                acc = term;
                first = false;
            } else {
                acc = acc * image.pow(prev - it->first) + term;
            }
            prev = it->first;
        }
        return acc * image.pow(prev);
    };
    RatFunc dn = subst_poly(f.den());
    if (dn.is_zero()) throw DomainError("substitution image is a pole of f");
    return subst_poly(f.num()) / dn;
}

inline RatFunc substitute(const LaurentPoly& p, const RatFunc& image) {
    return substitute(RatFunc(p), image);
}

}  // namespace awx
