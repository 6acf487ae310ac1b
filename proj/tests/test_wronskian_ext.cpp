#include <catch2/catch_amalgamated.hpp>

#include "awx/extension.hpp"
#include "test_helpers.hpp"

using namespace awx;

namespace {

Parameters sample_params() {
    return Parameters(make_rational(1, 4), make_rational(2, 3), make_rational(1, 3),
                      make_rational(1, 5), make_rational(1, 2));
}

Parameters example66_params() {
    // a = q^{3/2}, d = q^{1/2} with q = 1/4; b, c free.
    return Parameters(make_rational(1, 4), make_rational(1, 8), make_rational(1, 3),
                      make_rational(1, 5), make_rational(1, 2));
}

LambdaPoly example66_phi(const Parameters& p, const Rational& nu) {
    // 1 + nu * (lambda + (1-q)(1-bc)); the second solution written in lambda.
    Rational c0 = Rational(1 + nu * (1 - p.q()) * (1 - p.b() * p.c()));
    return LambdaPoly({c0, nu}, 0);
}

ExtensionSpec example66_spec(const Rational& nu = Rational(1)) {
    Parameters p = example66_params();
    return ExtensionSpec(p, {{ParamLabel::a, example66_phi(p, nu)}});
}

// Small deterministic phi polynomials that stay generic for the sample
// parameters.
ExtensionSpec mixed_spec_k2() {
    Parameters p = sample_params();
    LambdaPoly phi1({Rational(2), Rational(1)}, 0);
    LambdaPoly phi2({Rational(1), make_rational(-1, 3), make_rational(1, 7)}, 0);
    return ExtensionSpec(p, {{ParamLabel::a, phi1}, {ParamLabel::b, phi2}});
}

ExtensionSpec spec_k3() {
    Parameters p = sample_params();
    LambdaPoly phi1({Rational(1)}, 0);
    LambdaPoly phi2({Rational(2), Rational(1)}, 0);
    LambdaPoly phi3({make_rational(1, 2), make_rational(1, 5), make_rational(1, 11)}, 0);
    return ExtensionSpec(
        p, {{ParamLabel::a, phi1}, {ParamLabel::b, phi2}, {ParamLabel::c, phi3}});
}

}  // namespace

TEST_CASE("involution basics") {
    Parameters p = sample_params();
    for (long j : {0L, 1L, 2L, 5L}) {
        for (int i = 0; i < 50; ++i) {
            LaurentPoly f = testutil::rand_laurent(Var::t);
            CHECK(laurent_involution(laurent_involution(f, j, p), j, p) == f);
        }
        // lambda_{n-l} maps to lambda_{n+l-j}.
        for (long l : {0L, 1L, 3L}) {
            LaurentPoly lhs = laurent_involution(lambda_laurent(p, -2 * l), j, p);
            CHECK(lhs == lambda_laurent(p, 2 * (l - j)));
        }
    }
}

TEST_CASE("involution invariance characterizes lambda polynomials") {
    Parameters p = sample_params();
    for (long j : {0L, 1L, 2L, 3L}) {
        // Polynomials of lambda_{n-j/2} are invariant and recognized.
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> cs;
            long deg = testutil::rand_int(0, 3);
            for (long i = 0; i <= deg; ++i) cs.push_back(testutil::rand_rational());
            LambdaPoly h(cs, -j);
            LaurentPoly f = h.to_laurent(p);
            CHECK(laurent_involution(f, j, p) == f);
            auto back = lambda_poly_from_laurent(f, p, -j);
            REQUIRE(back);
            CHECK(*back == h);
        }
        // Non-invariant Laurent polynomials are rejected.
        int rejected = 0;
        for (int trial = 0; trial < 20; ++trial) {
            LaurentPoly f = testutil::rand_nonzero_laurent(Var::t);
            if (laurent_involution(f, j, p) == f) continue;
            CHECK_FALSE(lambda_poly_from_laurent(f, p, -j));
            ++rejected;
        }
        CHECK(rejected > 0);
    }
}

TEST_CASE("eta factors") {
    Parameters p = sample_params();
    SECTION("k = 1 collapses to 1") {
        CHECK(eta_laurent(ParamLabel::b, 1, 1, p) ==
              LaurentPoly::constant(Var::t, Rational(1)));
    }
    SECTION("k = 2, j = 1 hand product") {
        // eta^{b,1}_n = q^{-n} (ac q^{n-1}, ad q^{n-1}; q)_1.
        const Rational q = p.q(), a = p.a(), b = p.b(), c = p.c(), d = p.d();
        for (long n = 0; n <= 4; ++n) {
            Rational qn = rat_pow(q, n);
            Rational expect = Rational((1 - a * c * qn / q) * (1 - a * d * qn / q) / qn);
            CHECK(eta_eval(ParamLabel::b, 1, 2, n, p) == expect);
        }
    }
    SECTION("k = 2, j = 2 hand product") {
        // eta^{b,2}_n = q^{-n} (bc q^{n-1}, bd q^{n-1}; q)_1.
        const Rational q = p.q(), b = p.b(), c = p.c(), d = p.d();
        for (long n = 1; n <= 4; ++n) {
            Rational qn = rat_pow(q, n);
            Rational expect = Rational((1 - b * c * qn / q) * (1 - b * d * qn / q) / qn);
            CHECK(eta_eval(ParamLabel::b, 2, 2, n, p) == expect);
        }
    }
}

TEST_CASE("chi products") {
    Parameters p = sample_params();
    SECTION("k = 1, delta = a") {
        ExtensionSpec spec(p, {{ParamLabel::a, LambdaPoly({Rational(1), Rational(1)}, 0)}});
        for (long n = 1; n <= 5; ++n)
            CHECK(spec.chi(n) ==
                  Rational(xi_eval(ParamLabel::a, n, p) * xi_eval(ParamLabel::a, n - 1, p)));
    }
    SECTION("k = 1, delta = b has trivial eta") {
        ExtensionSpec spec(p, {{ParamLabel::b, LambdaPoly({Rational(1), Rational(1)}, 0)}});
        for (long n = 1; n <= 5; ++n)
            CHECK(spec.chi(n) ==
                  Rational(xi_eval(ParamLabel::b, n, p) * xi_eval(ParamLabel::a, n - 1, p)));
    }
    SECTION("k = 2 mixed labels at n = 3") {
        ExtensionSpec spec = mixed_spec_k2();
        Rational expect = Rational(xi_eval(ParamLabel::a, 3, p) * xi_eval(ParamLabel::b, 2, p) *
                                   xi_eval(ParamLabel::a, 1, p) *
                                   eta_eval(ParamLabel::b, 2, 2, 3, p));
        CHECK(spec.chi(3) == expect);
    }
}

TEST_CASE("extension polynomials") {
    Parameters p = sample_params();

    SECTION("k = 1 matches the 2x2 determinant") {
        for (ParamLabel dl : {ParamLabel::a, ParamLabel::b}) {
            LambdaPoly phi({Rational(3), Rational(1)}, 0);
            ExtensionSpec spec(p, {{dl, phi}});
            for (long n = 1; n <= 6; ++n) {
                auto psi = [&](long m) {
                    return rat_div(phi.eval(p, m), xi_eval(dl, m, p));
                };
                LaurentPoly direct = (aw_poly(n - 1, p).poly() * psi(n) -
                                      aw_poly(n, p).poly() * psi(n - 1)) *
                                     spec.chi(n);
                CHECK(p_hat(n, spec).poly() == direct);
            }
        }
    }

    SECTION("degree and symmetry") {
        ExtensionSpec spec = mixed_spec_k2();
        for (long n = 0; n <= 8; ++n) {
            SymmetricLaurent ph = p_hat(n, spec);
            REQUIRE_FALSE(ph.is_zero());
            CHECK(ph.poly().degree() == n);
            CHECK(ph.poly().valuation() == -n);
        }
    }

    SECTION("normalized and raw Casoratian forms agree for n >= k") {
        for (const ExtensionSpec& spec : {mixed_spec_k2(), spec_k3()}) {
            const long k = spec.k();
            for (long n = k; n <= 8; ++n) {
                // Raw form: chi_n times the Casoratian of psi's and p.
                Matrix<LaurentPoly> m(static_cast<size_t>(k + 1), static_cast<size_t>(k + 1),
                                      LaurentPoly(Var::z));
                for (long r = 1; r <= k + 1; ++r) {
                    for (long c = 1; c <= k; ++c) {
                        const auto& ch = spec.choices()[static_cast<size_t>(c - 1)];
                        Rational psi = rat_div(ch.phi.eval(p, n - r + 1),
                                               xi_eval(ch.delta, n - r + 1, p));
                        m.at(static_cast<size_t>(r - 1), static_cast<size_t>(c - 1)) =
                            LaurentPoly::constant(Var::z, psi);
                    }
                    m.at(static_cast<size_t>(r - 1), static_cast<size_t>(k)) =
                        aw_poly(n - r + 1, p).poly();
                }
                LaurentPoly raw = det(m) * spec.chi(n);
                CHECK(p_hat(n, spec).poly() == raw);
            }
        }
    }
}

TEST_CASE("tau structure") {
    Parameters p = sample_params();

    SECTION("k = 1, delta = a, phi = 1 gives tau = 1") {
        // A constant phi is a degenerate but legal extension: p_hat = scalar * p shifted.
        ExtensionSpec spec(p, {{ParamLabel::a, LambdaPoly({Rational(1)}, 0)}});
        CHECK(spec.tau().tau == LaurentPoly::constant(Var::t, Rational(1)));
    }

    SECTION("tau of the rank-one extension is phi itself") {
        ExtensionSpec spec = example66_spec();
        const TauData& td = spec.tau();
        CHECK(td.eps_trivial);
        CHECK(td.tau_bar.degree() == 1);
        // tau_n = phi(lambda_n) as Laurent polynomials of q^n.
        LambdaPoly phi = example66_phi(example66_params(), Rational(1));
        CHECK(td.tau == phi.to_laurent(example66_params()));
    }

    SECTION("factorization and sign rule, k = 2") {
        ExtensionSpec spec = mixed_spec_k2();
        const TauData& td = spec.tau();
        CHECK_FALSE(td.eps_trivial);
        // I^(k-1) flips tau by (-1)^{k(k-1)/2}.
        CHECK(laurent_involution(td.tau, 1, p) == -td.tau);
        // eps equals the stated closed form (1-q) q^{k/2-1} (1/t - abcd t / q^k).
        LaurentPoly closed(Var::t);
        Rational pref = Rational((1 - p.q()) * p.q_half_pow(2 - 2));  // q^{k/2-1}, k=2
        closed.set_coeff(-1, pref);
        closed.set_coeff(1, Rational(-pref * p.abcd() / rat_pow(p.q(), 2)));
        CHECK(td.eps == closed);
        // Reconstruction.
        CHECK(td.eps * td.tau_bar.to_laurent(p) == td.tau);
    }

    SECTION("factorization and sign rule, k = 3") {
        ExtensionSpec spec = spec_k3();
        const TauData& td = spec.tau();
        CHECK_FALSE(td.eps_trivial);
        CHECK(laurent_involution(td.tau, 2, p) == -td.tau);
        LaurentPoly closed(Var::t);
        Rational pref = Rational((1 - p.q()) * p.q_half_pow(3 - 2));  // q^{k/2-1}, k=3
        closed.set_coeff(-1, pref);
        closed.set_coeff(1, Rational(-pref * p.abcd() / rat_pow(p.q(), 3)));
        CHECK(td.eps == closed);
        CHECK(td.eps * td.tau_bar.to_laurent(p) == td.tau);
    }

    SECTION("symbolic tau matches pointwise Casoratian values") {
        for (const ExtensionSpec& spec : {mixed_spec_k2(), spec_k3()}) {
            const long k = spec.k();
            for (long n = 0; n <= 6; ++n) {
                Matrix<Rational> m(static_cast<size_t>(k), static_cast<size_t>(k), Rational(0));
                for (long r = 1; r <= k; ++r)
                    for (long c = 1; c <= k; ++c)
                        m.at(static_cast<size_t>(r - 1), static_cast<size_t>(c - 1)) =
                            spec.psi_normalized(c, n - r + 1);
                Rational direct = Rational(det(m) * spec.chi_tilde(n));
                CHECK(spec.tau().tau.eval(rat_pow(p.q(), n)) == direct);
            }
        }
    }
}

TEST_CASE("kappa factors") {
    Parameters p = sample_params();
    const long k = 2;
    for (ParamLabel l : {ParamLabel::b, ParamLabel::c, ParamLabel::d}) {
        for (long i = 1; i <= k; ++i)
            for (long j = 1; j <= k; ++j) {
                LaurentPoly closed = kappa_laurent(l, i, j, k, p);
                CHECK(RatFunc(closed) == kappa_from_ratio(l, i, j, k, p));
                // Involution I^{(k-1)} swaps the row index i -> k-i+1.
                CHECK(laurent_involution(closed, k - 1, p) ==
                      kappa_laurent(l, k - i + 1, j, k, p));
            }
        // i = j reduces to eta.
        for (long j = 1; j <= k; ++j)
            CHECK(kappa_laurent(l, j, j, k, p) == eta_laurent(l, j, k, p));
    }
    SECTION("k = 2 concrete evaluation") {
        const Rational q = p.q(), a = p.a(), b = p.b(), c = p.c(), d = p.d();
        long n = 3;
        Rational qn = rat_pow(q, n);
        // kappa^{b;1,2} = q^{-n} (b/a) (ac q^{n-1}, ad q^{n-1}; q)_1.
        Rational expect =
            Rational((b / a) * (1 - a * c * qn / q) * (1 - a * d * qn / q) / qn);
        CHECK(kappa_laurent(ParamLabel::b, 1, 2, 2, p).eval(qn) == expect);
    }
}

TEST_CASE("genericity rejection") {
    Parameters p = example66_params();
    // Pick nu so that tau_0 = phi(lambda_0) = phi(0) = 0: nu = -1/((1-q)(1-bc)).
    Rational bad = Rational(Rational(-1) / ((1 - p.q()) * (1 - p.b() * p.c())));
    CHECK_THROWS_AS(example66_spec(bad), GenericityError);
    CHECK_THROWS_MATCHES(example66_spec(bad), GenericityError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("3.6a")));
}
