#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>

#include "awx/rational.hpp"

namespace awx {

enum class ParamLabel : unsigned char { a, b, c, d };

inline const char* label_name(ParamLabel l) {
    switch (l) {
        case ParamLabel::a: return "a";
        case ParamLabel::b: return "b";
        case ParamLabel::c: return "c";
        default: return "d";
    }
}

inline ParamLabel label_parse(const std::string& s) {
    if (s == "a") return ParamLabel::a;
    if (s == "b") return ParamLabel::b;
    if (s == "c") return ParamLabel::c;
    if (s == "d") return ParamLabel::d;
    throw DomainError("unknown parameter label: '" + s + "'");
}

// The Askey-Wilson parameter set. All five values are exact rationals;
// sqrt_q is present exactly when q is a square in Q, and unlocks the
// half-integer index shifts.
class Parameters {
public:
    Parameters(const Rational& q, const Rational& a, const Rational& b, const Rational& c,
               const Rational& d, long m_max = 64)
        : q_(q), v_{a, b, c, d} {
        if (!(q > 0 && q < 1)) throw DomainError("q must lie in (0,1)");
        for (const Rational& x : v_)
            if (x == 0) throw DomainError("parameters a,b,c,d must be nonzero");
        Rational abcd = this->abcd();
        Rational p(1);
        for (long m = 0; m <= m_max; ++m) {
            if (Rational(abcd * p) == 1 || Rational(abcd / p) == 1)
                throw DomainError("abcd q^m = 1 at |m| = " + std::to_string(m));
            p *= q_;
        }
        Rational sq;
        if (rat_sqrt(q_, sq)) sqrt_q_ = sq;
    }

    const Rational& q() const { return q_; }
    const Rational& a() const { return v_[0]; }
    const Rational& b() const { return v_[1]; }
    const Rational& c() const { return v_[2]; }
    const Rational& d() const { return v_[3]; }

    const Rational& param(ParamLabel l) const { return v_[static_cast<size_t>(l)]; }

    // Cyclic view (e1,e2,e3,e4) with e1 the chosen parameter, matching the
    // substitution rule for the xi factors and the contiguous operators.
    std::array<Rational, 4> cycle(ParamLabel l) const {
        size_t k = static_cast<size_t>(l);
        return {v_[k], v_[(k + 1) % 4], v_[(k + 2) % 4], v_[(k + 3) % 4]};
    }

    Rational abcd() const { return Rational(v_[0] * v_[1] * v_[2] * v_[3]); }
    Rational s() const { return Rational(v_[0] + v_[1] + v_[2] + v_[3]); }
    Rational s_prime() const {
        return Rational(1 / v_[0] + 1 / v_[1] + 1 / v_[2] + 1 / v_[3]);
    }

    bool has_sqrt_q() const { return sqrt_q_.has_value(); }
    const Rational& sqrt_q() const {
        if (!sqrt_q_) throw DomainError("q is not a square in Q; half-integer shifts unavailable");
        return *sqrt_q_;
    }

    // q^(h/2) for an integer h (h may be odd only when sqrt_q exists).
    Rational q_half_pow(long h) const {
        if (h % 2 == 0) return rat_pow(q_, h / 2);
        return rat_pow(sqrt_q(), h);
    }

    Parameters permuted(const std::array<int, 4>& perm) const {
        return Parameters(q_, v_[static_cast<size_t>(perm[0])], v_[static_cast<size_t>(perm[1])],
                          v_[static_cast<size_t>(perm[2])], v_[static_cast<size_t>(perm[3])]);
    }

    bool operator==(const Parameters& o) const { return q_ == o.q_ && v_ == o.v_; }

private:
    Rational q_;
    std::array<Rational, 4> v_;
    std::optional<Rational> sqrt_q_;
};

// Random generic parameters: q from a fixed set of rational squares, a,b,c,d
// small-denominator rationals in (-1,1)\{0}, redrawn until the genericity
// requirements hold.
inline Parameters random_parameters(std::mt19937_64& gen) {
    static const Rational qs[3] = {make_rational(1, 4), make_rational(4, 9),
                                   make_rational(9, 16)};
    std::uniform_int_distribution<int> qpick(0, 2);
    std::uniform_int_distribution<long> num(-8, 8), den(2, 9);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rational q = qs[qpick(gen)];
        std::array<Rational, 4> v;
        bool ok = true;
        for (auto& x : v) {
            long n = num(gen), d = den(gen);
            if (n == 0 || std::abs(n) >= d) {
                ok = false;
                break;
            }
            x = make_rational(n, d);
        }
        if (!ok) continue;
        // Distinct values keep the four conjugated operators genuinely
        // different and the eigenvalue checks sharp.
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)]) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        try {
            return Parameters(q, v[0], v[1], v[2], v[3]);
        } catch (const DomainError&) {
            continue;
        }
    }
    throw InternalError("random parameter generation failed repeatedly");
}

}  // namespace awx
