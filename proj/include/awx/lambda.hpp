#pragma once

#include <optional>
#include <vector>

#include "awx/laurent.hpp"
#include "awx/parameters.hpp"

namespace awx {

// lambda_{gamma + h/2} as a Laurent polynomial of t = q^gamma:
//   (q^{-h/2}/t - 1)(1 - abcd q^{h/2 - 1} t).
inline LaurentPoly lambda_laurent(const Parameters& p, long half_shift = 0) {
    Rational qh = p.q_half_pow(half_shift);
    Rational abcd = p.abcd();
    LaurentPoly l(Var::t);
    l.set_coeff(-1, Rational(1 / qh));
    l.set_coeff(1, Rational(abcd * qh / p.q()));
    l.set_coeff(0, Rational(-1 - abcd / p.q()));
    return l;
}

// lambda_{n + h/2} evaluated exactly.
inline Rational lambda_value(const Parameters& p, long n, long half_shift = 0) {
    Rational qn = Rational(rat_pow(p.q(), n) * p.q_half_pow(half_shift));
    return Rational((1 / qn - 1) * (1 - p.abcd() * qn / p.q()));
}

// Polynomial in lambda with a fixed half-integer index offset: the value at n
// is sum_i coeffs[i] * lambda_{n + half_shift/2}^i.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(std::vector<Rational> coeffs, long half_shift)
        : c_(std::move(coeffs)), half_shift_(half_shift) {
        trim();
    }
    static LambdaPoly constant(const Rational& v, long half_shift = 0) {
        return LambdaPoly({v}, half_shift);
    }
    static LambdaPoly identity(long half_shift = 0) {
        return LambdaPoly({Rational(0), Rational(1)}, half_shift);
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    long half_shift() const { return half_shift_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    // The same polynomial read at a shifted index; only the offset changes.
    LambdaPoly with_half_shift(long hs) const { return LambdaPoly(c_, hs); }

    Rational eval(const Parameters& p, long n) const {
        Rational x = lambda_value(p, n, half_shift_);
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = Rational(acc * x + *it);
        return acc;
    }

    // As a Laurent polynomial of t = q^n, optionally with an extra integer
    // shift of the index (n -> n + extra).
    LaurentPoly to_laurent(const Parameters& p, long extra = 0) const {
        LaurentPoly x = lambda_laurent(p, half_shift_ + 2 * extra);
        LaurentPoly acc(Var::t);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + LaurentPoly::constant(Var::t, *it);
        return acc;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        check_shift(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        check_shift(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    LambdaPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& s) { return a *= s; }
    friend LambdaPoly operator*(const Rational& s, LambdaPoly a) { return a *= s; }

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        a.check_shift(b);
        if (a.is_zero() || b.is_zero()) return LambdaPoly({}, a.half_shift_);
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return LambdaPoly(std::move(r), a.half_shift_);
    }

    bool operator==(const LambdaPoly& o) const {
        return half_shift_ == o.half_shift_ && c_ == o.c_;
    }
    bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_shift(const LambdaPoly& o) const {
        if (half_shift_ != o.half_shift_)
            throw InternalError("lambda-polynomial arithmetic with mismatched index shifts");
    }

    std::vector<Rational> c_;
    long half_shift_ = 0;
};

// Writes a Laurent polynomial of t as a polynomial in lambda_{gamma + h/2},
// peeling the leading term degree by degree. Empty when no such
// representation exists.
inline std::optional<LambdaPoly> lambda_poly_from_laurent(const LaurentPoly& f,
                                                          const Parameters& p,
                                                          long half_shift = 0) {
    if (f.var() != Var::t) throw InternalError("expected a polynomial in t");
    if (f.is_zero()) return LambdaPoly({}, half_shift);
    LaurentPoly x = lambda_laurent(p, half_shift);
    Rational top = x.coeff(1);  // abcd q^{h/2-1}, nonzero
    LaurentPoly rem = f;
    long deg = std::max(rem.degree(), -rem.valuation());
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
    for (long d = deg; d >= 1; --d) {
        if (rem.is_zero()) break;
        if (std::max(rem.degree(), -rem.valuation()) > d) return std::nullopt;
        Rational cd = Rational(rem.coeff(d) / rat_pow(top, d));
        if (cd != 0) {
            coeffs[static_cast<size_t>(d)] = cd;
            rem -= x.pow(d) * cd;
        }
        if (!rem.is_zero() && std::max(rem.degree(), -rem.valuation()) >= d) return std::nullopt;
    }
    coeffs[0] = rem.coeff(0);
    rem.set_coeff(0, Rational(0));
    if (!rem.is_zero()) return std::nullopt;
    return LambdaPoly(std::move(coeffs), half_shift);
}

}  // namespace awx
