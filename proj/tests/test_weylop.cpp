#include <catch_amalgamated.hpp>

#include <random>

#include "qdual/weylop.hpp"

using namespace qdual;

namespace {

WeylOp qgam(int e) { return WeylOp::gamma(1, 0, e); }

RatFunc qden() { return RatFunc::q_power(1) - RatFunc::q_power(-1); }

CommPoly xk(int k) {
    return CommPoly::monomial(1, {k}, RatFunc::one());
}

// uniformly random generator of the one-variable algebra
WeylOp random_gen(std::mt19937_64& rng, int base = 1) {
    switch (rng() % 4) {
    case 0: return WeylOp::x(1, 0);
    case 1: return WeylOp::gamma(1, 0, 1);
    case 2: return WeylOp::gamma(1, 0, -1);
    default: return WeylOp::d(1, 0, base);
    }
}

CommPoly random_poly(std::mt19937_64& rng, int deg) {
    CommPoly f(1, 0);
    for (int k = 0; k <= deg; ++k)
        f.add_term({k}, RatFunc::from_int(static_cast<long>(rng() % 7) - 3));
    return f;
}

} // namespace

TEST_CASE("mixed products reduce to the canonical shape") {
    WeylOp x = WeylOp::x(1, 0), del = WeylOp::d(1, 0);
    // x d = (g - g^{-1})/(q - q^{-1})
    WeylOp xd = op_mul(x, del);
    WeylOp expect = (qgam(1) - qgam(-1)).scaled(qden().inverse());
    CHECK(xd == expect);
    // d x = (q g - q^{-1} g^{-1})/(q - q^{-1})
    WeylOp dx = op_mul(del, x);
    WeylOp expect2 = (qgam(1).scaled(RatFunc::q_power(1)) -
                      qgam(-1).scaled(RatFunc::q_power(-1)))
                         .scaled(qden().inverse());
    CHECK(dx == expect2);
    // g x = q x g
    CHECK(op_mul(qgam(1), x) == op_mul(x, qgam(1)).scaled(RatFunc::q_power(1)));
    // action oracle for both mixed products
    for (int k = 0; k <= 8; ++k) {
        CHECK(apply(xd, xk(k)) == xk(k).scaled(qint(k)));
        CHECK(apply(dx, xk(k)) == xk(k).scaled(qint(k + 1)));
    }
}

TEST_CASE("defining relations hold in normal form") {
    WeylOp x = WeylOp::x(1, 0), del = WeylOp::d(1, 0);
    WeylOp g = qgam(1), gi = qgam(-1);
    CHECK(op_mul(g, gi) == WeylOp::identity(1));
    CHECK(op_mul(g, x) - op_mul(x, g).scaled(RatFunc::q_power(1)) == WeylOp(1));
    CHECK(op_mul(g, del) - op_mul(del, g).scaled(RatFunc::q_power(-1)) == WeylOp(1));
    // d x - q x d = g^{-1} and d x - q^{-1} x d = g
    CHECK(op_mul(del, x) - op_mul(x, del).scaled(RatFunc::q_power(1)) == gi);
    CHECK(op_mul(del, x) - op_mul(x, del).scaled(RatFunc::q_power(-1)) == g);
}

TEST_CASE("commutators") {
    CHECK(commutator(qgam(1), qgam(-1)).is_zero());
    WeylOp x = WeylOp::x(1, 0), del = WeylOp::d(1, 0);
    WeylOp c = commutator(del, x);
    for (int k = 0; k <= 8; ++k)
        CHECK(apply(c, xk(k)) == xk(k).scaled(qint(k + 1) - qint(k)));
    // distinct variables commute
    WeylOp x1 = WeylOp::x(2, 0), d2 = WeylOp::d(2, 1);
    CHECK(commutator(x1, d2).is_zero());
}

TEST_CASE("apply matches the displayed actions") {
    WeylOp del = WeylOp::d(1, 0);
    CHECK(apply(del, xk(3)) == xk(2).scaled(qint(3)));
    // gamma of the first variable on x^2 y
    WeylOp g = WeylOp::gamma(2, 0, 1);
    CommPoly x2y = CommPoly::monomial(2, {2, 1}, RatFunc::one());
    CHECK(apply(g, x2y) == x2y.scaled(RatFunc::q_power(2)));
    // x^2 d sends x^k to [k] x^{k+1}
    WeylOp x2d = op_mul(WeylOp::x(1, 0), op_mul(WeylOp::x(1, 0), del));
    for (int k = 0; k <= 6; ++k)
        CHECK(apply(x2d, xk(k)) == xk(k + 1).scaled(qint(k)));
}

TEST_CASE("base q^2 derivations") {
    WeylOp d2 = WeylOp::d(1, 0, 2);
    for (int k = 0; k <= 6; ++k)
        CHECK(apply(d2, xk(k)) == (k == 0 ? CommPoly(1) : xk(k - 1).scaled(qint(k, 2))));
    // d_{q^2} x = q^2 x d_{q^2} + g^{-2}
    WeylOp x = WeylOp::x(1, 0);
    CHECK(op_mul(d2, x) - op_mul(x, d2).scaled(RatFunc::q_power(2)) == qgam(-2));
    // x d_{q^2} = (g^2 - g^{-2})/(q^2 - q^{-2})
    WeylOp expect = (qgam(2) - qgam(-2))
                        .scaled((RatFunc::q_power(2) - RatFunc::q_power(-2)).inverse());
    CHECK(op_mul(x, d2) == expect);
    // mixing derivation bases in one variable is rejected
    CHECK_THROWS_AS(op_mul(d2, WeylOp::d(1, 0, 1)), StructureError);
}

TEST_CASE("normal form is canonical across bracketings") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<WeylOp> word;
        int len = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) word.push_back(random_gen(rng));
        // left fold
        WeylOp l = WeylOp::identity(1);
        for (const WeylOp& w : word) l = op_mul(l, w);
        // right fold
        WeylOp r = WeylOp::identity(1);
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = op_mul(*it, r);
        CHECK(l == r);
        // action oracle: the normal form acts exactly as the sequential word
        for (int k = 0; k <= 8; ++k) {
            CommPoly seq = xk(k);
            for (auto it = word.rbegin(); it != word.rend(); ++it) seq = apply(*it, seq);
            CHECK(apply(l, xk(k)) == seq);
        }
    }
}

TEST_CASE("twisted derivation law") {
    std::mt19937_64 rng(77);
    WeylOp del = WeylOp::d(1, 0), g = qgam(1), gi = qgam(-1);
    for (int trial = 0; trial < 40; ++trial) {
        CommPoly f = random_poly(rng, 5), h = random_poly(rng, 5);
        CommPoly lhs = apply(del, f * h);
        CommPoly rhs = apply(del, f) * apply(g, h) + apply(gi, f) * apply(del, h);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fourier transform of generators") {
    CHECK(fourier(WeylOp::x(1, 0)) == -WeylOp::d(1, 0));
    CHECK(fourier(WeylOp::d(1, 0)) == WeylOp::x(1, 0));
    CHECK(fourier(qgam(1)) == qgam(-1).scaled(RatFunc::q_power(-1)));
    CHECK(fourier(qgam(-1)) == qgam(1).scaled(RatFunc::q_power(1)));
}

TEST_CASE("fourier is an algebra map preserving the relations") {
    WeylOp x = WeylOp::x(1, 0), del = WeylOp::d(1, 0);
    // substitute-then-normalize equals normalize-then-substitute
    WeylOp dx = op_mul(del, x);
    CHECK(fourier(dx) == op_mul(fourier(del), fourier(x)));
    // relations: F(d x - q x d) = F(g^{-1}) and F(d x - q^{-1} x d) = F(g)
    CHECK(fourier(dx - op_mul(x, del).scaled(RatFunc::q_power(1))) == fourier(qgam(-1)));
    CHECK(fourier(dx - op_mul(x, del).scaled(RatFunc::q_power(-1))) == fourier(qgam(1)));
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        WeylOp a = random_gen(rng), b = random_gen(rng), c = random_gen(rng);
        WeylOp ab = op_mul(a, op_mul(b, c));
        CHECK(fourier(ab) == op_mul(fourier(a), op_mul(fourier(b), fourier(c))));
    }
    // base q^2 derivations have no Fourier image
    CHECK_THROWS_AS(fourier(WeylOp::d(1, 0, 2)), StructureError);
}

TEST_CASE("multi-variable products factor across variables") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        // operators acting on separate variables of a 2-variable context
        WeylOp a1 = random_gen(rng).embedded(2, {0});
        WeylOp b2 = random_gen(rng).embedded(2, {1});
        CHECK(op_mul(a1, b2) == op_mul(b2, a1));
    }
}
