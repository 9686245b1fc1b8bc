#pragma once

// Independent oracles for the test suite.  These deliberately avoid the
// library's own polynomial arithmetic: dense integer-indexed maps with naive
// convolution, so that agreement with LaurentPoly/RatFunc is meaningful.

#include <gmpxx.h>

#include <map>
#include <random>

#include "qdual/ratfunc.hpp"

namespace oracle {

// Dense-by-exponent univariate Laurent polynomial in q.
using QP = std::map<int, mpq_class>;

inline QP qp_add(const QP& a, const QP& b) {
    QP r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

inline QP qp_mul(const QP& a, const QP& b) {
    QP r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            r[ea + eb] += ca * cb;
            if (r[ea + eb] == 0) r.erase(ea + eb);
        }
    return r;
}

inline QP qp_scale(const QP& a, const mpq_class& s) {
    QP r;
    if (s == 0) return r;
    for (const auto& [e, c] : a) r[e] = c * s;
    return r;
}

// [a]_{q^d} as a dense polynomial: q^{d(a-1)} + q^{d(a-3)} + ... + q^{-d(a-1)}
// for a > 0, antisymmetric for a < 0.
inline QP qp_qint(int a, int d = 1) {
    QP r;
    int s = a < 0 ? -1 : 1;
    int n = a * s;
    for (int e = -(n - 1); e <= n - 1; e += 2) r[e * d] = s;
    return r;
}

inline qdual::LaurentPoly qp_to_poly(const QP& p, int nsym = 0) {
    qdual::LaurentPoly r(nsym);
    qdual::ExpVec e(nsym + 1, 0);
    for (const auto& [exp, c] : p) {
        e[0] = exp;
        r.add_term(e, c);
    }
    return r;
}

inline bool matches(const qdual::RatFunc& f, const QP& p) {
    return f == qdual::RatFunc(qp_to_poly(p, f.nsym()).lifted(f.nsym()));
}

// Small random rational-function sampler for property tests.
struct RatSampler {
    std::mt19937_64 rng;
    int nsym;

    explicit RatSampler(unsigned long seed, int nsym = 1) : rng(seed), nsym(nsym) {}

    qdual::LaurentPoly poly(bool nonzero = false) {
        std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 3);
        std::uniform_int_distribution<int> expd(-3, 3);
        std::uniform_int_distribution<int> coefd(-5, 5);
        for (;;) {
            qdual::LaurentPoly p(nsym);
            int n = nterms(rng);
            for (int i = 0; i < n; ++i) {
                qdual::ExpVec e(nsym + 1);
                for (int& x : e) x = expd(rng);
                int c = coefd(rng);
                if (c == 0) c = 1;
                p.add_term(e, c);
            }
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    qdual::RatFunc ratfunc(bool nonzero = false) {
        return qdual::RatFunc(poly(nonzero), poly(true));
    }
};

} // namespace oracle
