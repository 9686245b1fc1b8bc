#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qdual/errors.hpp"

namespace qdual {

using Rat = mpq_class;

// Exponent vector of a monomial.  Slot 0 is the exponent of q; slots 1..k are
// the formal weight symbols (t = q^lambda, u = q^mu, ...).  All slots are
// Laurent exponents and may be negative.
using ExpVec = std::vector<int>;

inline long total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

// Graded-lexicographic order: compare total degree first, then exponents
// left to right.  Leading term of a polynomial = maximal under this order.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse Laurent polynomial in q and a fixed number of weight symbols, with
// exact rational coefficients.  The symbol arity is fixed per value; mixing
// arities in arithmetic is a caller bug and throws.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GrlexLess>;

    explicit LaurentPoly(int nsym = 0) : nsym_(nsym) {}

    static LaurentPoly constant(const Rat& c, int nsym = 0) {
        LaurentPoly p(nsym);
        p.add_term(ExpVec(nsym + 1, 0), c);
        return p;
    }
    static LaurentPoly monomial(const ExpVec& e, const Rat& c) {
        if (e.empty()) throw DomainError("LaurentPoly: empty exponent vector");
        LaurentPoly p(static_cast<int>(e.size()) - 1);
        p.add_term(e, c);
        return p;
    }
    // q^e as a polynomial of the given arity.
    static LaurentPoly q_power(int e, int nsym = 0) {
        ExpVec v(nsym + 1, 0);
        v[0] = e;
        return monomial(v, 1);
    }
    // t_sym^e (sym is 0-based among the weight symbols).
    static LaurentPoly sym_power(int sym, int e, int nsym) {
        if (sym < 0 || sym >= nsym) throw DomainError("LaurentPoly: symbol index out of range");
        ExpVec v(nsym + 1, 0);
        v[1 + sym] = e;
        return monomial(v, 1);
    }

    int nsym() const { return nsym_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
               *std::max_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) == 0 &&
               *std::min_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) == 0;
    }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

    // True when no weight symbol occurs, i.e. the support lies in powers of q.
    bool univariate_in_q() const {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 1; i < e.size(); ++i)
                if (e[i] != 0) return false;
        return true;
    }

    void add_term(const ExpVec& e, const Rat& c) {
        if (static_cast<int>(e.size()) != nsym_ + 1)
            throw DomainError("LaurentPoly: exponent arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Leading term under grlex; polynomial must be nonzero.
    std::pair<ExpVec, Rat> leading() const {
        if (terms_.empty()) throw DomainError("LaurentPoly: leading term of zero");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    LaurentPoly operator-() const {
        LaurentPoly r(nsym_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_arity(b);
        LaurentPoly r(a.nsym_);
        ExpVec e(a.nsym_ + 1);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r(nsym_);
        if (c == 0) return r;
        for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
        return r;
    }
    // Multiply by the monomial q^... t^... given by shift (unit of the ring).
    LaurentPoly shifted(const ExpVec& shift) const {
        if (static_cast<int>(shift.size()) != nsym_ + 1)
            throw DomainError("LaurentPoly: shift arity mismatch");
        LaurentPoly r(nsym_);
        ExpVec e(nsym_ + 1);
        for (const auto& [ee, c] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ee[i] + shift[i];
            r.terms_.emplace(e, c);
        }
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r = constant(1, nsym_);
        LaurentPoly base = *this;
        while (n) {
            if (n & 1u) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return nsym_ == o.nsym_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Content: rational c with sign of the leading coefficient such that
    // (*this)/c has coprime integer coefficients and positive leading one.
    Rat content() const {
        if (terms_.empty()) return 1;
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        if (leading().second < 0) c = -c;
        return c;
    }

    // Componentwise minimum exponent over the support; zero poly gives zeros.
    ExpVec min_exponents() const {
        ExpVec m(nsym_ + 1, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) { m = e; first = false; continue; }
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    // Dense view of a polynomial with support only in q: coefficient vector
    // plus the exponent offset of its first entry.
    struct DenseQ {
        int offset = 0;
        std::vector<Rat> c; // c[i] is the coefficient of q^{offset+i}
    };
    DenseQ to_dense_q() const {
        if (!univariate_in_q()) throw DomainError("LaurentPoly: not univariate in q");
        DenseQ d;
        if (terms_.empty()) return d;
        int lo = terms_.begin()->first[0], hi = lo;
        for (const auto& [e, c] : terms_) { lo = std::min(lo, e[0]); hi = std::max(hi, e[0]); }
        d.offset = lo;
        d.c.assign(hi - lo + 1, Rat(0));
        for (const auto& [e, c] : terms_) d.c[e[0] - lo] = c;
        return d;
    }
    static LaurentPoly from_dense_q(const DenseQ& d, int nsym) {
        LaurentPoly p(nsym);
        ExpVec e(nsym + 1, 0);
        for (std::size_t i = 0; i < d.c.size(); ++i) {
            e[0] = d.offset + static_cast<int>(i);
            p.add_term(e, d.c[i]);
        }
        return p;
    }

    // Substitute each assigned weight symbol t_s by q^{m_s}; remaining symbols
    // are reindexed in increasing order.  assignments maps symbol index -> m.
    LaurentPoly specialize_syms(const std::map<int, int>& assignments) const {
        std::vector<int> keep;
        for (int s = 0; s < nsym_; ++s)
            if (!assignments.count(s)) keep.push_back(s);
        LaurentPoly r(static_cast<int>(keep.size()));
        ExpVec e(keep.size() + 1);
        for (const auto& [ee, c] : terms_) {
            int qe = ee[0];
            for (const auto& [s, m] : assignments) qe += ee[1 + s] * m;
            e[0] = qe;
            for (std::size_t i = 0; i < keep.size(); ++i) e[1 + i] = ee[1 + keep[i]];
            r.add_term(e, c);
        }
        return r;
    }

    // Exact evaluation at q = qv with every symbol t_s set to qv^{ms}.
    Rat eval(const Rat& qv, const std::map<int, int>& sym_qexp) const {
        if (qv == 0) throw DomainError("LaurentPoly: cannot evaluate at q = 0");
        Rat acc = 0;
        for (const auto& [e, c] : terms_) {
            long qe = e[0];
            for (int s = 0; s < nsym_; ++s) {
                if (e[1 + s] != 0) {
                    auto it = sym_qexp.find(s);
                    if (it == sym_qexp.end())
                        throw DomainError("LaurentPoly: unassigned symbol in evaluation");
                    qe += static_cast<long>(e[1 + s]) * it->second;
                }
            }
            acc += c * rat_pow(qv, qe);
        }
        return acc;
    }

    // Widen to a larger symbol arity; new symbols get exponent zero.
    LaurentPoly lifted(int new_nsym) const {
        if (new_nsym < nsym_) throw DomainError("LaurentPoly: cannot shrink arity");
        if (new_nsym == nsym_) return *this;
        LaurentPoly r(new_nsym);
        ExpVec e(new_nsym + 1, 0);
        for (const auto& [ee, c] : terms_) {
            std::copy(ee.begin(), ee.end(), e.begin());
            r.terms_.emplace(e, c);
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            Rat ac = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::string mono = mono_string(it->first, names);
            if (mono.empty()) {
                os << ac;
            } else {
                if (ac != 1) os << ac << "*";
                os << mono;
            }
        }
        return os.str();
    }

    static Rat rat_pow(const Rat& base, long e) {
        if (e == 0) return 1;
        Rat b = e > 0 ? base : Rat(1) / base;
        unsigned long n = e > 0 ? e : -e;
        Rat r = 1;
        while (n) {
            if (n & 1ul) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }

private:
    void check_arity(const LaurentPoly& o) const {
        if (nsym_ != o.nsym_) throw DomainError("LaurentPoly: arity mismatch");
    }

    std::string mono_string(const ExpVec& e, const std::vector<std::string>& names) const {
        static const char* default_names[] = {"t", "u", "v", "w"};
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string nm;
            if (i == 0) nm = "q";
            else if (i - 1 < names.size()) nm = names[i - 1];
            else if (i - 1 < 4) nm = default_names[i - 1];
            else nm = "s" + std::to_string(i - 1);
            if (any) os << "*";
            os << nm;
            if (e[i] != 1) os << "^" << e[i];
            any = true;
        }
        return os.str();
    }

    int nsym_;
    TermMap terms_;
};

// Primitive gcd of two polynomials supported in powers of q alone, returned
// with minimum exponent 0, integer coprime coefficients and positive leading
// coefficient.  Monomials are units here, so the result is defined up to that
// normalization.
inline LaurentPoly gcd_univariate_q(const LaurentPoly& a, const LaurentPoly& b) {
    int nsym = a.nsym();
    if (a.is_zero() && b.is_zero()) return LaurentPoly(nsym);
    auto normalize = [nsym](std::vector<Rat> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        v.erase(v.begin(), v.begin() + lead);
        LaurentPoly::DenseQ d;
        d.offset = 0;
        d.c = std::move(v);
        LaurentPoly p = LaurentPoly::from_dense_q(d, nsym);
        if (!p.is_zero()) p = p.scaled(Rat(1) / p.content());
        return p;
    };
    std::vector<Rat> x = a.to_dense_q().c, y = b.to_dense_q().c;
    // Euclidean remainders over the rationals; primitivity restored at the end.
    auto deg = [](const std::vector<Rat>& v) { return static_cast<long>(v.size()) - 1; };
    auto strip = [](std::vector<Rat>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    strip(x);
    strip(y);
    while (!y.empty()) {
        // x mod y
        while (deg(x) >= deg(y) && !x.empty()) {
            Rat f = x.back() / y.back();
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= f * y[i];
            strip(x);
        }
        std::swap(x, y);
    }
    return normalize(x);
}

// Exact multivariate division after stripping monomial units from both sides.
// Returns nothing when b does not divide a in the Laurent ring.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("try_divide: division by zero");
    int nsym = a.nsym();
    if (a.is_zero()) return LaurentPoly(nsym);
    ExpVec ma = a.min_exponents(), mb = b.min_exponents();
    ExpVec neg_ma(ma.size()), neg_mb(mb.size()), unit(ma.size());
    for (std::size_t i = 0; i < ma.size(); ++i) {
        neg_ma[i] = -ma[i];
        neg_mb[i] = -mb[i];
        unit[i] = ma[i] - mb[i];
    }
    LaurentPoly A = a.shifted(neg_ma), B = b.shifted(neg_mb);
    LaurentPoly q(nsym), r = A;
    auto [eb, cb] = B.leading();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading();
        ExpVec e(er.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            e[i] = er[i] - eb[i];
        }
        Rat c = cr / cb;
        LaurentPoly term = LaurentPoly::monomial(e, c);
        q += term;
        r -= term * B;
    }
    return q.shifted(unit);
}

} // namespace qdual
