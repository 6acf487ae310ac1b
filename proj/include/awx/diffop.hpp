#pragma once

#include <functional>
#include <map>

#include "awx/ratfunc.hpp"

namespace awx {

// Finite-support shift operator acting on the degree index. Coefficients are
// rational functions of t = q^gamma; the shift E^j sends gamma to gamma + j.
// Applied to a sequence f: (L f)(n) = sum_j coeff_j(q^n) f(n + j).
class DiffOpN {
public:
    explicit DiffOpN(const Rational& q) : q_(q) {}

    static DiffOpN identity(const Rational& q) {
        DiffOpN l(q);
        l.set_coeff(0, RatFunc::constant(Var::t, Rational(1)));
        return l;
    }
    static DiffOpN shift(const Rational& q, long j) {
        DiffOpN l(q);
        l.set_coeff(j, RatFunc::constant(Var::t, Rational(1)));
        return l;
    }

    const Rational& q() const { return q_; }
    const std::map<long, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFunc coeff(long j) const {
        auto it = terms_.find(j);
        return it == terms_.end() ? RatFunc(Var::t) : it->second;
    }
    void set_coeff(long j, const RatFunc& c) {
        if (c.var() != Var::t) throw InternalError("DiffOpN coefficient must live in t");
        if (c.is_zero())
            terms_.erase(j);
        else
            terms_[j] = c;
    }

    long max_shift() const {
        if (is_zero()) throw DomainError("support of zero operator");
        return terms_.rbegin()->first;
    }
    long min_shift() const {
        if (is_zero()) throw DomainError("support of zero operator");
        return terms_.begin()->first;
    }

    DiffOpN& operator+=(const DiffOpN& o) {
        check_q(o);
        for (const auto& [j, c] : o.terms_) set_coeff(j, coeff(j) + c);
        return *this;
    }
    DiffOpN& operator-=(const DiffOpN& o) {
        check_q(o);
        for (const auto& [j, c] : o.terms_) set_coeff(j, coeff(j) - c);
        return *this;
    }
    friend DiffOpN operator+(DiffOpN a, const DiffOpN& b) { return a += b; }
    friend DiffOpN operator-(DiffOpN a, const DiffOpN& b) { return a -= b; }

    DiffOpN& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [j, c] : terms_) c *= s;
        return *this;
    }
    friend DiffOpN operator*(DiffOpN a, const Rational& s) { return a *= s; }
    friend DiffOpN operator*(const Rational& s, DiffOpN a) { return a *= s; }

    DiffOpN& scale_by(const RatFunc& g) {
        if (g.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [j, c] : terms_) c = c * g;
        return *this;
    }

    bool operator==(const DiffOpN& o) const { return q_ == o.q_ && terms_ == o.terms_; }
    bool operator!=(const DiffOpN& o) const { return !(*this == o); }

    // Operator product: apply `o` first, then this.
    DiffOpN compose(const DiffOpN& o) const {
        check_q(o);
        DiffOpN r(q_);
        for (const auto& [i, ci] : terms_) {
            Rational qi = rat_pow(q_, i);
            for (const auto& [j, cj] : o.terms_)
                r.set_coeff(i + j, r.coeff(i + j) + ci * cj.scale_arg(qi));
        }
        return r;
    }

    // Conjugation g L g^{-1} for a nonzero rational function g of t.
    DiffOpN conjugate(const RatFunc& g) const {
        if (g.is_zero()) throw DomainError("conjugation by zero");
        DiffOpN r(q_);
        for (const auto& [j, c] : terms_) r.set_coeff(j, c * g / g.scale_arg(rat_pow(q_, j)));
        return r;
    }

    // Conjugation where only the ratios g(gamma)/g(gamma+j) are rational,
    // supplied by the caller (ratio(j) = g_gamma / g_{gamma+j}).
    DiffOpN conjugate_by_ratio(const std::function<RatFunc(long)>& ratio) const {
        DiffOpN r(q_);
        for (const auto& [j, c] : terms_) r.set_coeff(j, c * ratio(j));
        return r;
    }

    // Exact application at integer n. Accessor values are only requested for
    // shifts whose coefficient is nonzero at t = q^n.
    template <class F>
    auto apply(const F& f, long n) const -> decltype(f(n)) {
        using T = decltype(f(n));
        T acc{};
        bool assigned = false;
        Rational tn = rat_pow(q_, n);
        for (const auto& [j, c] : terms_) {
            Rational v;
            try {
                v = c.eval(tn);
            } catch (const EvaluationError&) {
                throw EvaluationError("coefficient pole at n = " + std::to_string(n) +
                                      ", shift " + std::to_string(j));
            }
            if (v == 0) continue;
            T term = v * f(n + j);
            if (!assigned) {
                acc = term;
                assigned = true;
            } else {
                acc = acc + term;
            }
        }
        if (!assigned) acc = T(Rational(0) * f(n));
        return acc;
    }

private:
    void check_q(const DiffOpN& o) const {
        if (q_ != o.q_) throw InternalError("mixing operators with different q");
    }

    Rational q_;
    std::map<long, RatFunc> terms_;
};

// Finite-support q-dilation operator acting on the spectral variable:
// (B h)(z) = sum_i coeff_i(z) h(q^i z).
class QDiffOpZ {
public:
    explicit QDiffOpZ(const Rational& q) : q_(q) {}

    static QDiffOpZ identity(const Rational& q) {
        QDiffOpZ b(q);
        b.set_coeff(0, RatFunc::constant(Var::z, Rational(1)));
        return b;
    }
    static QDiffOpZ dilation(const Rational& q, long i) {
        QDiffOpZ b(q);
        b.set_coeff(i, RatFunc::constant(Var::z, Rational(1)));
        return b;
    }

    const Rational& q() const { return q_; }
    const std::map<long, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatFunc coeff(long i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? RatFunc(Var::z) : it->second;
    }
    void set_coeff(long i, const RatFunc& c) {
        if (c.var() != Var::z) throw InternalError("QDiffOpZ coefficient must live in z");
        if (c.is_zero())
            terms_.erase(i);
        else
            terms_[i] = c;
    }

    long order() const {
        if (is_zero()) return 0;
        return terms_.rbegin()->first - terms_.begin()->first;
    }

    QDiffOpZ& operator+=(const QDiffOpZ& o) {
        check_q(o);
        for (const auto& [i, c] : o.terms_) set_coeff(i, coeff(i) + c);
        return *this;
    }
    QDiffOpZ& operator-=(const QDiffOpZ& o) {
        check_q(o);
        for (const auto& [i, c] : o.terms_) set_coeff(i, coeff(i) - c);
        return *this;
    }
    friend QDiffOpZ operator+(QDiffOpZ a, const QDiffOpZ& b) { return a += b; }
    friend QDiffOpZ operator-(QDiffOpZ a, const QDiffOpZ& b) { return a -= b; }
    QDiffOpZ& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_) c *= s;
        return *this;
    }
    friend QDiffOpZ operator*(QDiffOpZ a, const Rational& s) { return a *= s; }
    friend QDiffOpZ operator*(const Rational& s, QDiffOpZ a) { return a *= s; }

    bool operator==(const QDiffOpZ& o) const { return q_ == o.q_ && terms_ == o.terms_; }
    bool operator!=(const QDiffOpZ& o) const { return !(*this == o); }

    // Operator product with the dilation twist D_z c(z) = c(qz) D_z.
    QDiffOpZ compose(const QDiffOpZ& o) const {
        check_q(o);
        QDiffOpZ r(q_);
        for (const auto& [i, ci] : terms_) {
            Rational qi = rat_pow(q_, i);
            for (const auto& [j, cj] : o.terms_)
                r.set_coeff(i + j, r.coeff(i + j) + ci * cj.scale_arg(qi));
        }
        return r;
    }

    QDiffOpZ pow(long e) const {
        if (e < 0) throw DomainError("negative operator power");
        QDiffOpZ acc = identity(q_);
        QDiffOpZ b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc.compose(b);
            if (k >>= 1) b = b.compose(b);
        }
        return acc;
    }

    RatFunc apply(const LaurentPoly& h) const {
        if (h.var() != Var::z) throw InternalError("QDiffOpZ acts on polynomials in z");
        RatFunc acc(Var::z);
        for (const auto& [i, c] : terms_) acc += c * RatFunc(h.scale_arg(rat_pow(q_, i)));
        return acc;
    }

    // Application whose contract promises a Laurent polynomial result; the
    // rational coefficients must cancel exactly.
    LaurentPoly apply_laurent(const LaurentPoly& h) const {
        RatFunc r = apply(h);
        if (!r.is_laurent())
            throw InternalError("operator application did not reduce to a Laurent polynomial");
        return r.as_laurent();
    }

private:
    void check_q(const QDiffOpZ& o) const {
        if (q_ != o.q_) throw InternalError("mixing operators with different q");
    }

    Rational q_;
    std::map<long, RatFunc> terms_;
};

}  // namespace awx
