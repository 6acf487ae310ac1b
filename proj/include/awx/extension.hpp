#pragma once

#include <vector>

#include "awx/aw.hpp"
#include "awx/linalg.hpp"

namespace awx {

// The substitution t -> q^{j+1} / (abcd t). Laurent polynomials stay Laurent
// because the image is a monomial.
inline LaurentPoly laurent_involution(const LaurentPoly& f, long j, const Parameters& p) {
    Rational c = Rational(rat_pow(p.q(), j + 1) / p.abcd());
    LaurentPoly r(Var::t);
    for (const auto& [e, coeff] : f.terms()) r.set_coeff(-e, Rational(coeff * rat_pow(c, e)));
    return r;
}

inline RatFunc involution(const RatFunc& f, long j, const Parameters& p) {
    return RatFunc(laurent_involution(f.num(), j, p), laurent_involution(f.den(), j, p));
}

// xi^a_m / xi^delta_m for any integer m; finite and nonzero for generic
// parameters even where the two factors vanish individually.
inline Rational xi_a_over_delta(ParamLabel delta, long m, const Parameters& p) {
    if (delta == ParamLabel::a) return Rational(1);
    const Rational& q = p.q();
    Rational dv = p.param(delta), a = p.a();
    Rational acc = rat_pow(Rational(dv / a), m);
    for (ParamLabel o : {ParamLabel::b, ParamLabel::c, ParamLabel::d}) {
        if (o == delta) continue;
        Rational ov = p.param(o);
        Rational den = qpochhammer(Rational(dv * ov), m, q);
        if (den == 0) throw DomainError("vanishing q-Pochhammer in xi ratio");
        acc *= Rational(qpochhammer(Rational(a * ov), m, q) / den);
    }
    return acc;
}

// One choice (delta_j, phi^(j)) of the extension data.
struct ExtensionChoice {
    ParamLabel delta;
    LambdaPoly phi;  // half_shift 0: a polynomial of lambda_gamma
};

// Column-normalizing factor eta^{l,j} as a Laurent polynomial of t (l != a).
inline LaurentPoly eta_laurent(ParamLabel l, long j, long k, const Parameters& p) {
    if (l == ParamLabel::a) throw DomainError("eta is defined for l in {b,c,d}");
    const Rational& q = p.q();
    Rational lv = p.param(l), a = p.a();
    LaurentPoly acc = LaurentPoly::constant(Var::t, Rational(1));
    for (ParamLabel o : {ParamLabel::b, ParamLabel::c, ParamLabel::d}) {
        if (o == l) continue;
        Rational ov = p.param(o);
        acc = acc * qpoch_linear(Var::t, Rational(lv * ov * rat_pow(q, 1 - j)), j - 1, q);
        acc = acc * qpoch_linear(Var::t, Rational(a * ov * rat_pow(q, 1 - k)), k - j, q);
    }
    return acc.shifted(-(k - 1));
}

inline Rational eta_eval(ParamLabel l, long j, long k, long n, const Parameters& p) {
    return eta_laurent(l, j, k, p).eval(rat_pow(p.q(), n));
}

// kappa^{l;i,j} in closed form, as a Laurent polynomial of t.
inline LaurentPoly kappa_laurent(ParamLabel l, long i, long j, long k, const Parameters& p) {
    if (l == ParamLabel::a) throw DomainError("kappa is defined for l in {b,c,d}");
    const Rational& q = p.q();
    Rational lv = p.param(l), a = p.a();
    LaurentPoly acc =
        LaurentPoly::constant(Var::t, rat_pow(Rational(lv / a), j - i));
    for (ParamLabel o : {ParamLabel::b, ParamLabel::c, ParamLabel::d}) {
        if (o == l) continue;
        Rational ov = p.param(o);
        acc = acc * qpoch_linear(Var::t, Rational(a * ov * rat_pow(q, 1 - k)), k - i, q);
        acc = acc * qpoch_linear(Var::t, Rational(lv * ov * rat_pow(q, 1 - i)), i - 1, q);
    }
    return acc.shifted(-(k - 1));
}

// The same kappa from its defining ratio of eta and xi factors.
inline RatFunc kappa_from_ratio(ParamLabel l, long i, long j, long k, const Parameters& p) {
    RatFunc acc(eta_laurent(l, j, k, p));
    acc *= xi_ratio(l, -j + 1, -i + 1, p);
    acc *= xi_ratio(ParamLabel::a, -i + 1, -j + 1, p);
    return acc;
}

// tau_n factored per index parity: tau = eps * tau_bar(lambda_{n-(k-1)/2}).
struct TauData {
    LaurentPoly tau{Var::t};
    LambdaPoly tau_bar;
    bool eps_trivial = true;
    LaurentPoly eps{Var::t};  // lambda_{n-k/2+1} - lambda_{n-k/2} when nontrivial
};

// The data (k; delta_j; phi^(j)) of one Wronskian extension, with the
// nonvanishing certificates checked on construction.
class ExtensionSpec {
public:
    ExtensionSpec(const Parameters& params, std::vector<ExtensionChoice> choices,
                  long cert_n_max = 32)
        : p_(params), choices_(std::move(choices)), cert_n_max_(cert_n_max) {
        for (const auto& ch : choices_)
            if (ch.phi.is_zero()) throw GenericityError("zero phi polynomial");
        compute_tau();
        certify();
    }

    const Parameters& params() const { return p_; }
    long k() const { return static_cast<long>(choices_.size()); }
    const std::vector<ExtensionChoice>& choices() const { return choices_; }
    long cert_n_max() const { return cert_n_max_; }
    const TauData& tau() const { return tau_; }

    // Normalizing factor with all same-index xi ratios folded in; finite and
    // evaluable for every n, unlike the raw product of xi factors.
    Rational chi_tilde(long n) const {
        Rational acc(1);
        for (long j = 1; j <= k(); ++j) {
            const auto& ch = choices_[static_cast<size_t>(j - 1)];
            acc /= xi_a_over_delta(ch.delta, n - j + 1, p_);
            if (ch.delta != ParamLabel::a) acc *= eta_eval(ch.delta, j, k(), n, p_);
        }
        return acc;
    }

    // Raw chi_n: product of xi factors and eta factors. Vanishes for n < k.
    Rational chi(long n) const {
        Rational acc(1);
        for (long j = 1; j <= k() + 1; ++j) {
            ParamLabel dj = j <= k() ? choices_[static_cast<size_t>(j - 1)].delta : ParamLabel::a;
            acc *= xi_eval(dj, n - j + 1, p_);
        }
        for (long j = 1; j <= k(); ++j) {
            const auto& ch = choices_[static_cast<size_t>(j - 1)];
            if (ch.delta != ParamLabel::a) acc *= eta_eval(ch.delta, j, k(), n, p_);
        }
        return acc;
    }

    // Product of the eta factors as a function of t.
    LaurentPoly eta_product() const {
        LaurentPoly acc = LaurentPoly::constant(Var::t, Rational(1));
        for (long j = 1; j <= k(); ++j) {
            const auto& ch = choices_[static_cast<size_t>(j - 1)];
            if (ch.delta != ParamLabel::a) acc = acc * eta_laurent(ch.delta, j, k(), p_);
        }
        return acc;
    }

    // psi^(j) normalized by xi^a: value of xi^a_m psi^(j)_m, finite for all m.
    Rational psi_normalized(long j, long m) const {
        const auto& ch = choices_[static_cast<size_t>(j - 1)];
        return Rational(ch.phi.eval(p_, m) * xi_a_over_delta(ch.delta, m, p_));
    }

    // The genericity ratio chi_n xi^a_{n-k-1} / chi_{n-1} rewritten in
    // finite terms as (chi~_n / chi~_{n-1}) xi^a_n.
    Rational genericity_ratio(long n) const {
        Rational den = chi_tilde(n - 1);
        if (den == 0) throw GenericityError("3.6b fails at n = " + std::to_string(n));
        return Rational(chi_tilde(n) * xi_eval(ParamLabel::a, n, p_) / den);
    }

private:
    void compute_tau() {
        const long kk = k();
        if (kk == 0) {
            tau_.tau = LaurentPoly::constant(Var::t, Rational(1));
            tau_.tau_bar = LambdaPoly::constant(Rational(1), -(kk - 1));
            tau_.eps_trivial = true;
            return;
        }
        // tau(t) = eta_product(t) * det E, where
        //   E[r][c] = phi^(c)(lambda_{gamma-r+1})
        //             * (xi^a ratio shifts -r+1 <- -c+1) * (xi^dc ratio -c+1 <- -r+1).
        Matrix<RatFunc> m(static_cast<size_t>(kk), static_cast<size_t>(kk), RatFunc(Var::t));
        for (long r = 1; r <= kk; ++r)
            for (long c = 1; c <= kk; ++c) {
                const auto& ch = choices_[static_cast<size_t>(c - 1)];
                RatFunc e(ch.phi.to_laurent(p_, -r + 1));
                if (ch.delta != ParamLabel::a) {
                    e *= xi_ratio(ParamLabel::a, -r + 1, -c + 1, p_);
                    e *= xi_ratio(ch.delta, -c + 1, -r + 1, p_);
                }
                m.at(static_cast<size_t>(r - 1), static_cast<size_t>(c - 1)) = e;
            }
        RatFunc dt = det(m) * RatFunc(eta_product());
        if (!dt.is_laurent())
            throw InternalError("tau did not reduce to a Laurent polynomial of q^n");
        tau_.tau = dt.as_laurent();

        long kmod = kk % 4;
        tau_.eps_trivial = (kmod == 0 || kmod == 1);
        LaurentPoly quotient = tau_.tau;
        if (!tau_.eps_trivial) {
            tau_.eps = lambda_laurent(p_, -kk + 2) - lambda_laurent(p_, -kk);
            auto div = try_divide(tau_.tau, tau_.eps);
            if (!div) throw InternalError("tau is not divisible by the lambda difference");
            quotient = *div;
        }
        auto bar = lambda_poly_from_laurent(quotient, p_, -(kk - 1));
        if (!bar)
            throw InternalError("tau quotient is not a polynomial of the shifted lambda");
        tau_.tau_bar = *bar;
    }

    void certify() {
        for (long n = -1; n <= cert_n_max_; ++n)
            if (tau_.tau.eval(rat_pow(p_.q(), n)) == 0)
                throw GenericityError("3.6a fails at n = " + std::to_string(n));
        for (long n = 0; n <= cert_n_max_; ++n)
            if (genericity_ratio(n) == 0)
                throw GenericityError("3.6b fails at n = " + std::to_string(n));
    }

    Parameters p_;
    std::vector<ExtensionChoice> choices_;
    long cert_n_max_;
    TauData tau_;
};

// Extension polynomial via the normalized Casoratian, cofactor-expanded along
// the column holding p. Entries at negative index vanish with xi^a.
inline SymmetricLaurent p_hat(long n, const ExtensionSpec& spec) {
    if (n < 0) throw DomainError("p_hat needs n >= 0");
    const Parameters& p = spec.params();
    const long k = spec.k();
    if (k == 0) return aw_poly(n, p);

    // Minor with row r removed, over the k psi columns at shifts n-r'+1.
    auto minor = [&](long r) {
        Matrix<Rational> m(static_cast<size_t>(k), static_cast<size_t>(k), Rational(0));
        size_t ri = 0;
        for (long rp = 1; rp <= k + 1; ++rp) {
            if (rp == r) continue;
            for (long c = 1; c <= k; ++c)
                m.at(ri, static_cast<size_t>(c - 1)) = spec.psi_normalized(c, n - rp + 1);
            ++ri;
        }
        return det(m);
    };

    LaurentPoly acc(Var::z);
    for (long r = 1; r <= k + 1; ++r) {
        long m = n - r + 1;
        Rational xa = xi_eval(ParamLabel::a, m, p);
        if (xa == 0) continue;
        Rational cof = minor(r);
        if (cof == 0) continue;
        int sgn = ((k + 1 + r) % 2 == 0) ? 1 : -1;
        acc += aw_poly(m, p).poly() * Rational(cof * xa * sgn);
    }
    return SymmetricLaurent(acc * spec.chi_tilde(n));
}

}  // namespace awx
