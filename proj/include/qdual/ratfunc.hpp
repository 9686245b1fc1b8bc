#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdual/laurent.hpp"

namespace qdual {

namespace detail {

// Key: the weight-symbol part of an exponent vector.  Grouping a polynomial
// by this key writes it as sum of (symbol monomial) * (poly in q alone).
inline std::vector<int> sym_part(const ExpVec& e) {
    return std::vector<int>(e.begin() + 1, e.end());
}

inline std::map<std::vector<int>, LaurentPoly> group_by_symbols(const LaurentPoly& p) {
    std::map<std::vector<int>, LaurentPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        auto key = sym_part(e);
        auto it = groups.find(key);
        if (it == groups.end())
            it = groups.emplace(key, LaurentPoly(p.nsym())).first;
        ExpVec qe(e.size(), 0);
        qe[0] = e[0];
        it->second.add_term(qe, c);
    }
    return groups;
}

// Exact dense division by a divisor with offset 0; divisibility is the
// caller's guarantee (divisor came from a gcd of the dividend's groups).
inline LaurentPoly::DenseQ divide_dense(const LaurentPoly::DenseQ& a, const std::vector<Rat>& g) {
    LaurentPoly::DenseQ q;
    if (a.c.empty()) return q;
    if (a.c.size() < g.size()) throw DomainError("divide_dense: inexact division");
    q.offset = a.offset;
    std::vector<Rat> r = a.c;
    q.c.assign(r.size() - g.size() + 1, Rat(0));
    for (std::size_t i = r.size(); i-- >= g.size();) {
        if (r[i] == 0) { if (i + 1 == g.size()) break; continue; }
        Rat f = r[i] / g.back();
        std::size_t shift = i - (g.size() - 1);
        q.c[shift] = f;
        for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] -= f * g[j];
        if (i + 1 == g.size()) break;
    }
    for (const Rat& x : r)
        if (x != 0) throw DomainError("divide_dense: inexact division");
    return q;
}

} // namespace detail

// Rational function num/den over the Laurent ring in q and the weight
// symbols.  Canonical form: any common factor that is univariate in q (after
// grouping by symbol monomials) is removed, then numerator and denominator
// are divided by the denominator's leading term, so the denominator has
// leading coefficient 1 and leading exponent 0.  Equality is decided by
// cross-multiplication and never relies on full multivariate gcd.
class RatFunc {
public:
    explicit RatFunc(int nsym = 0)
        : num_(nsym), den_(LaurentPoly::constant(1, nsym)) {}

    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.nsym() != den_.nsym()) throw DomainError("RatFunc: arity mismatch");
        if (den_.is_zero()) throw DomainError("RatFunc: zero denominator");
        normalize();
    }
    explicit RatFunc(const LaurentPoly& num)
        : num_(num), den_(LaurentPoly::constant(1, num.nsym())) {
        normalize();
    }
    RatFunc(const Rat& c, int nsym)
        : num_(LaurentPoly::constant(c, nsym)), den_(LaurentPoly::constant(1, nsym)) {}

    static RatFunc zero(int nsym = 0) { return RatFunc(nsym); }
    static RatFunc one(int nsym = 0) { return RatFunc(Rat(1), nsym); }
    static RatFunc from_int(long v, int nsym = 0) { return RatFunc(Rat(v), nsym); }
    static RatFunc q_power(int e, int nsym = 0) {
        return RatFunc(LaurentPoly::q_power(e, nsym));
    }
    static RatFunc sym_power(int sym, int e, int nsym) {
        return RatFunc(LaurentPoly::sym_power(sym, e, nsym));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int nsym() const { return num_.nsym(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.nsym());
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("RatFunc: division by zero");
        if (a.is_zero()) return zero(a.nsym());
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }
    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r = one(nsym());
        RatFunc b = *this;
        unsigned long n = e;
        while (n) {
            if (n & 1ul) r *= b;
            b = (n >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const RatFunc& o) const {
        if (den_ == o.den_) return num_ == o.num_;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Substitute t_s -> q^{m_s} for each assigned symbol; remaining symbols
    // are reindexed.  Throws SpecializationPole when the denominator dies.
    RatFunc specialize(const std::map<int, int>& assignments) const {
        LaurentPoly n = num_.specialize_syms(assignments);
        LaurentPoly d = den_.specialize_syms(assignments);
        if (d.is_zero())
            throw SpecializationPole("specialize: denominator vanished");
        return RatFunc(std::move(n), std::move(d));
    }

    // Exact evaluation with q = qv and t_s = qv^{m_s}.
    Rat eval_numeric(const Rat& qv, const std::map<int, int>& assignments = {}) const {
        if (qv == 0 || qv == 1 || qv == -1)
            throw DomainError("eval_numeric: q must avoid {0, 1, -1}");
        Rat d = den_.eval(qv, assignments);
        if (d == 0) throw EvaluationPole("eval_numeric: pole at the given point");
        return num_.eval(qv, assignments) / d;
    }

    RatFunc lifted(int new_nsym) const {
        if (new_nsym == nsym()) return *this;
        RatFunc r(new_nsym);
        r.num_ = num_.lifted(new_nsym);
        r.den_ = den_.lifted(new_nsym);
        return r;
    }

    // True when the value is a Laurent polynomial (denominator reduced to a
    // monomial would be absorbed; after normalization that means den == 1).
    bool is_polynomial() const { return den_.is_one(); }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (den_.is_one()) return num_.to_string(names);
        return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(1, nsym());
            return;
        }
        reduce_common();
        auto [e, c] = den_.leading();
        ExpVec neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        Rat inv = Rat(1) / c;
        num_ = num_.shifted(neg).scaled(inv);
        den_ = den_.shifted(neg).scaled(inv);
    }

    // Strip any common factor supported in powers of q alone.  Such a factor
    // divides every symbol-group of both numerator and denominator, so the
    // gcd of all those groups is a safe (and for our formulas, sufficient)
    // reduction: denominators produced by q-numbers live in q alone.
    void reduce_common() {
        if (den_.term_count() == 1) return;
        LaurentPoly g(0);
        bool have = false;
        auto feed = [&](const LaurentPoly& p) {
            for (const auto& [key, grp] : detail::group_by_symbols(p)) {
                LaurentPoly flat = flatten_to_q(grp);
                g = have ? gcd_univariate_q(g, flat) : primitive_q(flat);
                have = true;
                if (g.is_one()) return false;
            }
            return true;
        };
        if (!feed(den_)) return;
        if (!feed(num_)) return;
        if (g.is_one() || g.term_count() < 2) return;
        num_ = divide_groups(num_, g);
        den_ = divide_groups(den_, g);
    }

    static LaurentPoly flatten_to_q(const LaurentPoly& p) {
        // p is supported on monomials q^a (symbol part already split off)
        LaurentPoly r(0);
        for (const auto& [e, c] : p.terms()) r.add_term(ExpVec{e[0]}, c);
        return r;
    }
    static LaurentPoly primitive_q(const LaurentPoly& p) {
        LaurentPoly r = p;
        ExpVec m = r.min_exponents();
        ExpVec neg(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
        r = r.shifted(neg);
        if (!r.is_zero()) r = r.scaled(Rat(1) / r.content());
        return r;
    }

    LaurentPoly divide_groups(const LaurentPoly& p, const LaurentPoly& g) const {
        std::vector<Rat> gv = g.to_dense_q().c;
        LaurentPoly r(p.nsym());
        for (const auto& [key, grp] : detail::group_by_symbols(p)) {
            auto q = detail::divide_dense(grp.to_dense_q(), gv);
            ExpVec e(p.nsym() + 1, 0);
            for (std::size_t i = 0; i < q.c.size(); ++i) {
                if (q.c[i] == 0) continue;
                e[0] = q.offset + static_cast<int>(i);
                for (std::size_t s = 0; s < key.size(); ++s) e[1 + s] = key[s];
                r.add_term(e, q.c[i]);
            }
        }
        return r;
    }

    LaurentPoly num_, den_;
};

} // namespace qdual
