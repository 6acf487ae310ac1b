#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "awx/rational.hpp"

namespace awx {

// Variable tag: t stands for q^gamma (degree-index objects), z for the
// spectral variable.
enum class Var : unsigned char { t, z };

inline const char* var_name(Var v) { return v == Var::t ? "t" : "z"; }

// Laurent polynomial in one tagged variable. Canonical form: no stored zero
// coefficients, so equal values have identical term maps.
class LaurentPoly {
public:
    using Terms = std::map<long, Rational>;

    explicit LaurentPoly(Var v = Var::t) : var_(v) {}

    static LaurentPoly constant(Var v, const Rational& c) {
        LaurentPoly p(v);
        if (c != 0) p.terms_[0] = c;
        return p;
    }
    static LaurentPoly monomial(Var v, long exp, const Rational& c) {
        LaurentPoly p(v);
        if (c != 0) p.terms_[exp] = c;
        return p;
    }
    static LaurentPoly variable(Var v) { return monomial(v, 1, Rational(1)); }

    Var var() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set_coeff(long exp, const Rational& c) {
        if (c == 0)
            terms_.erase(exp);
        else
            terms_[exp] = c;
    }

    long degree() const {
        if (is_zero()) throw DomainError("degree of zero polynomial");
        return terms_.rbegin()->first;
    }
    long valuation() const {
        if (is_zero()) throw DomainError("valuation of zero polynomial");
        return terms_.begin()->first;
    }

    Rational leading_coeff() const { return coeff(degree()); }
    Rational trailing_coeff() const { return coeff(valuation()); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_var(o);
        for (const auto& [e, c] : o.terms_) {
            Rational s = coeff(e) + c;
            set_coeff(e, s);
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_var(o);
        for (const auto& [e, c] : o.terms_) {
            Rational s = coeff(e) - c;
            set_coeff(e, s);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_) r.terms_[e] = Rational(-c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_var(b);
        LaurentPoly r(a.var_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Rational s = r.coeff(ea + eb) + ca * cb;
                r.set_coeff(ea + eb, s);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    LaurentPoly& operator/=(const Rational& s) {
        if (s == 0) throw DomainError("division by zero scalar");
        for (auto& [e, c] : terms_) c /= s;
        return *this;
    }

    bool operator==(const LaurentPoly& o) const { return var_ == o.var_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiplies the argument: p(x) -> p(s*x), i.e. coeff_e *= s^e.
    LaurentPoly scale_arg(const Rational& s) const {
        if (s == 0) throw DomainError("scale_arg by zero");
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_) r.terms_[e] = Rational(c * rat_pow(s, e));
        return r;
    }

    // p(x) -> p(1/x).
    LaurentPoly invert_arg() const {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    LaurentPoly shifted(long dexp) const {
        LaurentPoly r(var_);
        for (const auto& [e, c] : terms_) r.terms_[e + dexp] = c;
        return r;
    }

    Rational eval(const Rational& x) const {
        if (is_zero()) return Rational(0);
        if (x == 0) {
            if (valuation() < 0) throw DomainError("evaluating negative powers at zero");
            return coeff(0);
        }
        // Horner over the exponent gaps, from the top term down.
        Rational acc(0);
        long prev = 0;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev = it->first;
                first = false;
            } else {
                acc *= rat_pow(x, prev - it->first);
                acc += it->second;
                prev = it->first;
            }
        }
        return Rational(acc * rat_pow(x, prev));
    }

    LaurentPoly pow(long e) const {
        if (e < 0) throw DomainError("negative power of Laurent polynomial");
        LaurentPoly acc = constant(var_, Rational(1));
        LaurentPoly b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * b;
            if (k >>= 1) b = b * b;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            os << rat_str(it->second);
            if (it->first != 0) os << "*" << var_name(var_) << "^" << it->first;
            first = false;
        }
        return os.str();
    }

private:
    void check_var(const LaurentPoly& o) const {
        if (var_ != o.var_) throw InternalError("mixed-variable Laurent arithmetic");
    }

    Var var_;
    Terms terms_;
};

// Exact division of Laurent polynomials; empty result when b does not divide a.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly(a.var());
    long share = a.valuation() - b.valuation();
    // Dense long division on the polynomial parts.
    std::vector<Rational> A(a.degree() - a.valuation() + 1), B(b.degree() - b.valuation() + 1);
    for (const auto& [e, c] : a.terms()) A[static_cast<size_t>(e - a.valuation())] = c;
    for (const auto& [e, c] : b.terms()) B[static_cast<size_t>(e - b.valuation())] = c;
    if (A.size() < B.size()) return std::nullopt;
    std::vector<Rational> Q(A.size() - B.size() + 1);
    for (long i = static_cast<long>(Q.size()) - 1; i >= 0; --i) {
        Rational qc = A[static_cast<size_t>(i) + B.size() - 1] / B.back();
        Q[static_cast<size_t>(i)] = qc;
        if (qc != 0)
            for (size_t j = 0; j < B.size(); ++j)
                A[static_cast<size_t>(i) + j] -= qc * B[j];
    }
    for (const Rational& r : A)
        if (r != 0) return std::nullopt;
    LaurentPoly q(a.var());
    for (size_t i = 0; i < Q.size(); ++i)
        q.set_coeff(static_cast<long>(i) + share, Q[static_cast<size_t>(i)]);
    return q;
}

namespace detail {

// Integer-polynomial primitive PRS gcd; input/output dense, trailing entry is
// the leading coefficient. Keeps intermediate growth under control.
inline std::vector<Integer> int_poly_trim(std::vector<Integer> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Integer int_poly_content(const std::vector<Integer>& p) {
    Integer g(0);
    for (const Integer& c : p) {
        Integer t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
    }
    return g;
}

inline std::vector<Integer> int_poly_primitive(std::vector<Integer> p) {
    Integer c = int_poly_content(p);
    if (c > 1)
        for (Integer& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return p;
}

// Pseudo-remainder of a by b (b nonzero, trimmed).
inline std::vector<Integer> int_poly_prem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer& lb = b.back();
    while (true) {
        a = int_poly_trim(std::move(a));
        if (a.size() < b.size()) return a;
        Integer top = a.back();
        size_t shift = a.size() - b.size();
        for (Integer& x : a) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    }
}

inline std::vector<Integer> int_poly_gcd(std::vector<Integer> a, std::vector<Integer> b) {
    a = int_poly_primitive(int_poly_trim(std::move(a)));
    b = int_poly_primitive(int_poly_trim(std::move(b)));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Integer> r = int_poly_primitive(int_poly_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0)
        for (Integer& c : a) c = -c;
    return a;
}

}  // namespace detail

// gcd of two Laurent polynomials, returned as an ordinary polynomial with
// valuation 0, positive leading coefficient, primitive integer coefficients.
// Monomial factors (units of the Laurent ring) are ignored.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0,0)");
    auto to_int = [](const LaurentPoly& p) {
        std::vector<Integer> v;
        if (p.is_zero()) return v;
        Integer den_lcm(1);
        for (const auto& [e, c] : p.terms()) {
            Integer t;
            mpz_lcm(t.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            den_lcm = t;
        }
        v.assign(static_cast<size_t>(p.degree() - p.valuation() + 1), Integer(0));
        for (const auto& [e, c] : p.terms()) {
            Rational scaled = c * Rational(den_lcm);
            v[static_cast<size_t>(e - p.valuation())] = scaled.get_num();
        }
        return v;
    };
    std::vector<Integer> g = detail::int_poly_gcd(to_int(a), to_int(b));
    LaurentPoly r(a.var());
    if (g.empty()) return r;
    for (size_t i = 0; i < g.size(); ++i) r.set_coeff(static_cast<long>(i), Rational(g[i]));
    return r;
}

}  // namespace awx
