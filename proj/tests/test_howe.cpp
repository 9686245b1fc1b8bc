#include <catch_amalgamated.hpp>

#include <random>

#include "qdual/howe.hpp"

using namespace qdual;

namespace {

CommPoly mono(int nvars, const CommPoly::Exps& e) {
    return CommPoly::monomial(nvars, e, RatFunc::one());
}

// [m + 1/2] in base q^2, written as a generalized quantum number
RatFunc qhalf2(int m) { return qnum_gen(0, 2 * m + 1, 2); }

CommPoly random_poly(std::mt19937_64& rng, const DualityContext& ctx, int deg) {
    CommPoly f(ctx.nvars, 0);
    for (int d = 0; d <= deg; ++d) {
        std::vector<CommPoly::Exps> ms;
        monomials_of_degree(ctx.nvars, d, ms);
        for (const auto& e : ms)
            f.add_term(e, RatFunc::from_int(static_cast<long>(rng() % 7) - 3));
    }
    return f;
}

} // namespace

TEST_CASE("duality contexts build and verify their relations") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    CHECK(c2.nvars == 3);
    CHECK(c2.pi.d == 2);
    for (int n : {2, 3, 4}) {
        DualityContext cn = build_context(Duality::sln, n);
        CHECK(cn.nvars == 2 * n);
        CHECK(cn.pi.d == 1);
    }
    CHECK_THROWS_AS(build_context(Duality::sln, 1), DomainError);
    // a corrupted action is caught by the relation check
    RepAssignment bad = c2.sigma;
    bad.images[{GenKind::E, 0}] = bad.images[{GenKind::E, 0}].scaled(RatFunc::q_power(1));
    CHECK_FALSE(check_relations(bad, c2.sigma_pres).passed);
}

TEST_CASE("three-variable action matches the closed form on monomials") {
    DualityContext ctx = build_context(Duality::sl2_triple);
    const WeylOp& E = ctx.sigma.image({GenKind::E, 0});
    const WeylOp& F = ctx.sigma.image({GenKind::F, 0});
    const WeylOp& K = ctx.sigma.image({GenKind::K, 0});
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                CommPoly m = mono(3, {a, b, c});
                // E: [2] q^{2b-2a+2} [a]_{q^2} x^{a-1} y^b z^{c+1}
                //    - q^{2b-c+1} [c] x^a y^{b+1} z^{c-1}
                CommPoly eexp(3, 0);
                if (a > 0)
                    eexp += mono(3, {a - 1, b, c + 1})
                                .scaled(qint(2) * RatFunc::q_power(2 * b - 2 * a + 2) *
                                        qint(a, 2));
                if (c > 0)
                    eexp -= mono(3, {a, b + 1, c - 1})
                                .scaled(RatFunc::q_power(2 * b - c + 1) * qint(c));
                CHECK(apply(E, m) == eexp);
                // F: -[2] q^{2a-2b+2} [b]_{q^2} x^a y^{b-1} z^{c+1}
                //    + q^{2a-c+1} [c] x^{a+1} y^b z^{c-1}
                CommPoly fexp(3, 0);
                if (b > 0)
                    fexp -= mono(3, {a, b - 1, c + 1})
                                .scaled(qint(2) * RatFunc::q_power(2 * a - 2 * b + 2) *
                                        qint(b, 2));
                if (c > 0)
                    fexp += mono(3, {a + 1, b, c - 1})
                                .scaled(RatFunc::q_power(2 * a - c + 1) * qint(c));
                CHECK(apply(F, m) == fexp);
                CHECK(apply(K, m) == m.scaled(RatFunc::q_power(-2 * a + 2 * b)));
            }
}

TEST_CASE("harmonic spaces have the predicted dimensions") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    for (int a = 0; a <= 5; ++a) {
        HarmonicSpace h = harmonic_basis(c2, {a, 0});
        CHECK(static_cast<int>(h.basis.size()) == 2 * a + 1);
        // every basis vector is killed by Q
        for (const CommPoly& f : h.basis) CHECK(apply(c2.Q, f).is_zero());
    }
    DualityContext cn = build_context(Duality::sln, 2);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            HarmonicSpace h = harmonic_basis(cn, {a, b});
            CHECK(static_cast<int>(h.basis.size()) == a + b + 1);
        }
    DualityContext c3 = build_context(Duality::sln, 3);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            HarmonicSpace h = harmonic_basis(c3, {a, b});
            CHECK(static_cast<long>(h.basis.size()) == harmonic_dim_formula(c3, {a, b}));
            for (const CommPoly& f : h.basis) CHECK(apply(c3.Q, f).is_zero());
        }
}

TEST_CASE("fischer decomposition reassembles the input exactly") {
    std::mt19937_64 rng(424242);
    DualityContext c2 = build_context(Duality::sl2_triple);
    for (int trial = 0; trial < 5; ++trial) {
        CommPoly f = random_poly(rng, c2, 4);
        FischerExpansion e = fischer_decompose(c2, f);
        for (const auto& [j, h] : e.components) CHECK(apply(c2.Q, h).is_zero());
        CHECK(fischer_recompose(c2, e) == f);
    }
    DualityContext cn = build_context(Duality::sln, 2);
    for (int trial = 0; trial < 3; ++trial) {
        CommPoly f = random_poly(rng, cn, 3);
        FischerExpansion e = fischer_decompose(cn, f);
        for (const auto& [j, h] : e.components) CHECK(apply(cn.Q, h).is_zero());
        CHECK(fischer_recompose(cn, e) == f);
    }
    // a pure power of the quadric decomposes as a single component
    CommPoly p2 = c2.p_comm();
    FischerExpansion e = fischer_decompose(c2, apply(c2.P, apply(c2.P, mono(3, {0, 0, 0}))));
    REQUIRE(e.components.size() == 1);
    CHECK(e.components[0].first == 2);
}

TEST_CASE("transport turns the raising operator into left multiplication") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    NCPoly p = p_nc(c2);
    std::vector<CommPoly::Exps> ms;
    for (int d = 0; d <= 6; ++d) monomials_of_degree(3, d, ms);
    for (const auto& e : ms) {
        CommPoly m = mono(3, e);
        NCPoly lhs = phi_transport(c2, apply(c2.P, m));
        CHECK(lhs == mul(c2.ring, p, phi_transport(c2, m)));
        // the quadric is central, so the side does not matter here
        CHECK(lhs == mul(c2.ring, phi_transport(c2, m), p));
        CHECK(phi_transport_inv(c2, phi_transport(c2, m)) == m);
    }
    DualityContext cn = build_context(Duality::sln, 2);
    NCPoly pn = p_nc(cn);
    ms.clear();
    for (int d = 0; d <= 4; ++d) monomials_of_degree(4, d, ms);
    for (const auto& e : ms) {
        CommPoly m = mono(4, e);
        CHECK(phi_transport(cn, apply(cn.P, m)) == mul(cn.ring, pn, phi_transport(cn, m)));
    }
}

TEST_CASE("transported laplacian matches its closed form") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    // Delta(x^a z^c y^b) = [a]_{q^2} [b]_{q^2} x^{a-1} z^c y^{b-1}
    //                      + 1/[2]^2 [c][c-1] q^{2a+2b} x^a z^{c-2} y^b
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                NCPoly m = NCPoly::monomial(3, {a, c, b}, RatFunc::one());
                NCPoly expect(3, 0);
                if (a > 0 && b > 0)
                    expect += NCPoly::monomial(3, {a - 1, c, b - 1}, qint(a, 2) * qint(b, 2));
                if (c > 1)
                    expect += NCPoly::monomial(
                        3, {a, c - 2, b},
                        qint(2).pow(-2) * qint(c) * qint(c - 1) *
                            RatFunc::q_power(2 * a + 2 * b));
                CHECK(delta_q(c2, m) == expect);
            }
    // sl_n side: Delta(x^a y^b) = sum_k q^{-n+k} q^{sum_{i<k} a_i - sum_{i>k} b_i}
    //                             [a_k][b_k] x^{a-1_k} y^{b-1_k}
    DualityContext cn = build_context(Duality::sln, 2);
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 2; ++a2)
            for (int b1 = 0; b1 <= 2; ++b1)
                for (int b2 = 0; b2 <= 2; ++b2) {
                    NCPoly m = NCPoly::monomial(4, {a1, a2, b1, b2}, RatFunc::one());
                    NCPoly expect(4, 0);
                    if (a1 > 0 && b1 > 0)
                        expect += NCPoly::monomial(
                            4, {a1 - 1, a2, b1 - 1, b2},
                            RatFunc::q_power(-1 - b2) * qint(a1) * qint(b1));
                    if (a2 > 0 && b2 > 0)
                        expect += NCPoly::monomial(
                            4, {a1, a2 - 1, b1, b2 - 1},
                            RatFunc::q_power(a1) * qint(a2) * qint(b2));
                    CHECK(delta_q(cn, m) == expect);
                }
}

TEST_CASE("bernstein identities") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    for (int s = 0; s <= 4; ++s) {
        // b(s) = [s+1]_{q^2} [s + 3/2]_{q^2}
        CHECK(bernstein_check(c2, s) == qint(s + 1, 2) * qhalf2(s + 1));
    }
    for (int n : {2, 3}) {
        DualityContext cn = build_context(Duality::sln, n);
        for (int s = 0; s <= 3; ++s) {
            // b(s) = [s+1][s+n]
            CHECK(bernstein_check(cn, s) == qint(s + 1) * qint(s + n));
        }
    }
}

TEST_CASE("lowering operator acts on the quadric filtration by scalars") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    const WeylOp& F2 = c2.pi.image({GenKind::F, 0});
    const WeylOp& K2 = c2.pi.image({GenKind::K, 0});
    for (int a = 0; a <= 2; ++a) {
        HarmonicSpace hs = harmonic_basis(c2, {a, 0});
        for (const CommPoly& h : hs.basis) {
            CommPoly pj = h;
            for (int j = 1; j <= 3; ++j) {
                CommPoly pj1 = apply(c2.P, pj);
                // K acts by q^{3+2a+4j}, F drops one power of the quadric
                CHECK(apply(K2, pj1) == pj1.scaled(RatFunc::q_power(3 + 2 * a + 4 * j)));
                CHECK(apply(F2, pj1) == pj.scaled(-qint(j, 2) * qhalf2(a + j)));
                pj = pj1;
            }
        }
    }
    DualityContext cn = build_context(Duality::sln, 2);
    const WeylOp& Fn = cn.pi.image({GenKind::F, 0});
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            HarmonicSpace hs = harmonic_basis(cn, {a, b});
            for (const CommPoly& h : hs.basis) {
                CommPoly pj = h;
                for (int j = 1; j <= 3; ++j) {
                    CommPoly pj1 = apply(cn.P, pj);
                    CHECK(apply(Fn, pj1) ==
                          pj.scaled(-qint(j) * qint(cn.n + a + b + j - 1)));
                    pj = pj1;
                }
            }
        }
}

TEST_CASE("invariants are exactly the powers of the quadric") {
    for (Duality w : {Duality::sl2_triple, Duality::sln}) {
        DualityContext ctx = build_context(w, 2);
        std::vector<NCPoly> inv = invariants_basis(ctx, 4);
        REQUIRE(inv.size() == 3);
        NCPoly p = p_nc(ctx);
        NCPoly pj = NCPoly::constant(ctx.nvars, RatFunc::one());
        for (int j = 0; j <= 2; ++j) {
            // the degree-2j invariant is a scalar multiple of p^j
            const NCPoly& f = inv[static_cast<std::size_t>(j)];
            const auto& [m0, c0] = *pj.terms().begin();
            auto it = f.terms().find(m0);
            REQUIRE(it != f.terms().end());
            CHECK(f == pj.scaled(it->second / c0));
            pj = mul(ctx.ring, pj, p);
        }
    }
}

TEST_CASE("highest weight vectors of the harmonic slices") {
    DualityContext c2 = build_context(Duality::sl2_triple);
    for (int a = 0; a <= 4; ++a) CHECK(highest_weight_check(c2, {a, 0}));
    for (int n : {2, 3}) {
        DualityContext cn = build_context(Duality::sln, n);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) CHECK(highest_weight_check(cn, {a, b}));
    }
}
