#pragma once

#include <optional>

#include "qdual/ratfunc.hpp"

namespace qdual {

// Argument of a generalized q-number in base q^d:
//
//   [w]  =  (t^{t_exp} q^{q_exp} - t^{-t_exp} q^{-q_exp}) / (q^d - q^{-d})
//
// where t is the weight symbol `sym` (ignored when t_exp == 0).  A plain
// integer a in base q^d is t_exp = 0, q_exp = a*d.  Half-integer shifts use
// d = 2 with doubled q_exp; exponents stay integral throughout.
struct WeightExpr {
    int t_exp = 0;   // exponent of the weight symbol in the numerator
    int q_exp = 0;   // exponent of q in the numerator
    int d = 1;       // base: the q-number lives over q^d
    int sym = -1;    // weight symbol index, -1 when t_exp == 0
    int nsym = 0;    // symbol arity of the ambient coefficient field

    // [w + j]: adding an integer shifts the q exponent by j*d.
    WeightExpr plus(int j) const {
        WeightExpr w = *this;
        w.q_exp += j * d;
        return w;
    }
};

// (t^{t_exp} q^{q_exp} - t^{-t_exp} q^{-q_exp}) / (q^d - q^{-d})
inline RatFunc qnum_gen(int t_exp, int q_exp, int d, std::optional<int> symbol = std::nullopt,
                        int nsym = 0) {
    if (d <= 0) throw DomainError("qnum_gen: base exponent must be positive");
    if (t_exp != 0 && !symbol) throw DomainError("qnum_gen: symbolic part needs a symbol index");
    LaurentPoly num(nsym), den(nsym);
    ExpVec e(nsym + 1, 0);
    e[0] = q_exp;
    if (t_exp != 0) e[1 + *symbol] = t_exp;
    num.add_term(e, 1);
    for (int& x : e) x = -x;
    num.add_term(e, -1);
    den = LaurentPoly::q_power(d, nsym) - LaurentPoly::q_power(-d, nsym);
    return RatFunc(std::move(num), std::move(den));
}

inline RatFunc qnum_gen(const WeightExpr& w) {
    std::optional<int> sym;
    if (w.t_exp != 0) sym = w.sym;
    return qnum_gen(w.t_exp, w.q_exp, w.d, sym, w.nsym);
}

// Plain q-number [a] in base q^d: (q^{ad} - q^{-ad})/(q^d - q^{-d}).
inline RatFunc qint(long a, int d = 1, int nsym = 0) {
    return qnum_gen(0, static_cast<int>(a) * d, d, std::nullopt, nsym);
}

inline WeightExpr plain_weight(int a, int d = 1, int nsym = 0) {
    return WeightExpr{0, a * d, d, -1, nsym};
}

// [n]! in base q^d.
inline RatFunc qfact(long n, int d = 1, int nsym = 0) {
    if (n < 0) throw DomainError("qfact: negative argument");
    RatFunc r = RatFunc::one(nsym);
    for (long k = 1; k <= n; ++k) r *= qint(k, d, nsym);
    return r;
}

// [n]! / ([k]! [n-k]!) in base q^d; a Laurent polynomial in q.
inline RatFunc qbinom(long n, long k, int d = 1, int nsym = 0) {
    if (k < 0 || k > n) throw DomainError("qbinom: need 0 <= k <= n");
    return qfact(n, d, nsym) / (qfact(k, d, nsym) * qfact(n - k, d, nsym));
}

// Ascending Pochhammer ([w]_q)_m = [w][w+1]...[w+m-1] in the base of w.
inline RatFunc qpoch(const WeightExpr& w, long length) {
    if (length < 0) throw DomainError("qpoch: negative length");
    RatFunc r = RatFunc::one(w.nsym);
    for (long i = 0; i < length; ++i) r *= qnum_gen(w.plus(static_cast<int>(i)));
    return r;
}

// Generalized binomial with symbolic top entry:
//   [w choose m] = [w][w-1]...[w-m+1] / [m]!  =  qpoch(w-m+1, m)/[m]!
inline RatFunc sym_qbinom(const WeightExpr& w, long m) {
    if (m < 0) throw DomainError("sym_qbinom: negative length");
    return qpoch(w.plus(static_cast<int>(-(m - 1))), m) / qfact(m, w.d, w.nsym);
}

} // namespace qdual
