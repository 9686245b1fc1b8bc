#pragma once

#include <string>
#include <vector>

#include "qdual/qnum.hpp"
#include "qdual/ratfunc.hpp"

namespace qdual {

// Commutative polynomial in n variables over the rational-function field.
// The module that Weyl operators act on.
class CommPoly {
public:
    using Exps = std::vector<int>; // entries >= 0
    using TermMap = std::map<Exps, RatFunc>;

    explicit CommPoly(int nvars = 0, int nsym = 0) : nvars_(nvars), nsym_(nsym) {}

    static CommPoly monomial(int nvars, const Exps& e, const RatFunc& c) {
        CommPoly p(nvars, c.nsym());
        p.add_term(e, c);
        return p;
    }
    static CommPoly variable(int nvars, int v, int nsym = 0) {
        Exps e(nvars, 0);
        e[v] = 1;
        return monomial(nvars, e, RatFunc::one(nsym));
    }
    static CommPoly constant(int nvars, const RatFunc& c) {
        return monomial(nvars, Exps(nvars, 0), c);
    }

    int nvars() const { return nvars_; }
    int nsym() const { return nsym_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const RatFunc& c) {
        if (static_cast<int>(e.size()) != nvars_) throw DomainError("CommPoly: arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CommPoly operator-() const {
        CommPoly r(nvars_, nsym_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    CommPoly& operator+=(const CommPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        int nsym = std::max(a.nsym_, b.nsym_);
        CommPoly r(a.nvars_, nsym);
        Exps e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca.lifted(nsym) * cb.lifted(nsym));
            }
        return r;
    }

    CommPoly scaled(const RatFunc& c) const {
        CommPoly r(nvars_, std::max(nsym_, c.nsym()));
        for (const auto& [e, coef] : terms_)
            r.add_term(e, coef.lifted(r.nsym_) * c.lifted(r.nsym_));
        return r;
    }

    bool operator==(const CommPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const CommPoly& o) const { return !(*this == o); }

    long degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    std::string to_string(const std::vector<std::string>& var_names = {},
                          const std::vector<std::string>& sym_names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string(sym_names) + ")";
            for (int v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                std::string nm = v < static_cast<int>(var_names.size())
                                     ? var_names[v]
                                     : "x" + std::to_string(v + 1);
                out += "*" + nm;
                if (e[v] != 1) out += "^" + std::to_string(e[v]);
            }
        }
        return out;
    }

private:
    int nvars_, nsym_;
    TermMap terms_;
};

// One variable's worth of a normal-form Weyl algebra term: either x^a γ^c or
// γ^c ∂^b (never both x and ∂; the mixed relations eliminate such words).
// dbase is the base of the derivation: ∂ sends x^k to [k]_{q^dbase} x^{k-1}.
// γ is always the plain base-q grading operator.
struct VarFactor {
    int xpow = 0;
    int gexp = 0;
    int dpow = 0;
    int dbase = 1;

    bool neutral() const { return xpow == 0 && gexp == 0 && dpow == 0; }
    auto key() const { return std::tie(xpow, gexp, dpow, dbase); }
    bool operator<(const VarFactor& o) const { return key() < o.key(); }
    bool operator==(const VarFactor& o) const { return key() == o.key(); }
};

// Element of the quantum Weyl algebra in canonical normal form: a finite sum
// of terms coefficient * prod_v VarFactor(v).  Distinct variables commute.
class WeylOp {
public:
    using Key = std::vector<VarFactor>;
    using TermMap = std::map<Key, RatFunc>;

    explicit WeylOp(int nvars = 0, int nsym = 0) : nvars_(nvars), nsym_(nsym) {}

    static WeylOp identity(int nvars, int nsym = 0) {
        WeylOp a(nvars, nsym);
        a.add_term(Key(nvars), RatFunc::one(nsym));
        return a;
    }
    static WeylOp scalar(int nvars, const RatFunc& c) {
        WeylOp a(nvars, c.nsym());
        a.add_term(Key(nvars), c);
        return a;
    }
    static WeylOp x(int nvars, int var, int nsym = 0, int power = 1) {
        WeylOp a(nvars, nsym);
        Key k(nvars);
        k[var].xpow = power;
        a.add_term(k, RatFunc::one(nsym));
        return a;
    }
    static WeylOp gamma(int nvars, int var, int exp, int nsym = 0) {
        WeylOp a(nvars, nsym);
        Key k(nvars);
        k[var].gexp = exp;
        a.add_term(k, RatFunc::one(nsym));
        return a;
    }
    static WeylOp d(int nvars, int var, int base = 1, int nsym = 0, int power = 1) {
        if (base <= 0) throw DomainError("WeylOp: derivation base must be positive");
        WeylOp a(nvars, nsym);
        Key k(nvars);
        k[var].dpow = power;
        k[var].dbase = base;
        a.add_term(k, RatFunc::one(nsym));
        return a;
    }

    int nvars() const { return nvars_; }
    int nsym() const { return nsym_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const RatFunc& c) {
        if (static_cast<int>(k.size()) != nvars_) throw DomainError("WeylOp: arity mismatch");
        for (const VarFactor& f : k) {
            if (f.xpow < 0 || f.dpow < 0) throw DomainError("WeylOp: negative power");
            if (f.xpow > 0 && f.dpow > 0)
                throw StructureError("WeylOp: non-canonical factor with x and del");
            if (f.dpow == 0 && f.dbase != 1)
                throw StructureError("WeylOp: stray derivation base");
        }
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    WeylOp operator-() const {
        WeylOp r(nvars_, nsym_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    WeylOp& operator+=(const WeylOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c.lifted(nsym_));
        return *this;
    }
    WeylOp& operator-=(const WeylOp& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c.lifted(nsym_));
        return *this;
    }
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }

    WeylOp scaled(const RatFunc& c) const {
        WeylOp r(nvars_, std::max(nsym_, c.nsym()));
        for (const auto& [k, coef] : terms_)
            r.add_term(k, coef.lifted(r.nsym_) * c.lifted(r.nsym_));
        return r;
    }

    bool operator==(const WeylOp& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const WeylOp& o) const { return !(*this == o); }

    // Re-embed into a wider variable context; variable v maps to var_map[v].
    WeylOp embedded(int new_nvars, const std::vector<int>& var_map) const {
        if (static_cast<int>(var_map.size()) != nvars_) throw DomainError("embedded: bad map");
        WeylOp r(new_nvars, nsym_);
        for (const auto& [k, c] : terms_) {
            Key nk(new_nvars);
            for (int v = 0; v < nvars_; ++v) nk[var_map[v]] = k[v];
            r.add_term(nk, c);
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& var_names = {},
                          const std::vector<std::string>& sym_names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string(sym_names) + ")";
            for (int v = 0; v < nvars_; ++v) {
                const VarFactor& f = k[v];
                std::string nm = v < static_cast<int>(var_names.size())
                                     ? var_names[v]
                                     : "x" + std::to_string(v + 1);
                if (f.xpow > 0) {
                    out += "*" + nm;
                    if (f.xpow != 1) out += "^" + std::to_string(f.xpow);
                }
                if (f.gexp != 0) out += "*g_" + nm + "^" + std::to_string(f.gexp);
                if (f.dpow > 0) {
                    out += "*d_";
                    if (f.dbase != 1) out += "{q^" + std::to_string(f.dbase) + ",";
                    out += nm;
                    if (f.dbase != 1) out += "}";
                    if (f.dpow != 1) out += "^" + std::to_string(f.dpow);
                }
            }
        }
        return out;
    }

private:
    int nvars_, nsym_;
    TermMap terms_;
};

namespace weyl_detail {

using Local = std::vector<std::pair<VarFactor, RatFunc>>;

inline VarFactor canon(VarFactor f) {
    if (f.dpow == 0) f.dbase = 1;
    return f;
}

inline Local right_mul_d(const VarFactor& f, int base, int nsym);

// f * x
inline Local right_mul_x(const VarFactor& f, int nsym) {
    if (f.dpow == 0) {
        // x^a g^c x = q^c x^{a+1} g^c
        VarFactor r = f;
        r.xpow += 1;
        return {{canon(r), RatFunc::q_power(f.gexp, nsym)}};
    }
    // g^c d^b x = q^d (g^c d^{b-1} x) d + q^{-d(b-1)} g^{c-d} d^{b-1}
    VarFactor peel = f;
    peel.dpow -= 1;
    peel = canon(peel);
    int d = f.dbase;
    Local out;
    for (const auto& [g, c] : right_mul_x(peel, nsym)) {
        for (const auto& [h, c2] : right_mul_d(g, d, nsym))
            out.emplace_back(h, c * c2 * RatFunc::q_power(d, nsym));
    }
    VarFactor low = peel;
    low.gexp -= d;
    out.emplace_back(canon(low), RatFunc::q_power(-d * (f.dpow - 1), nsym));
    return out;
}

// f * d_base
inline Local right_mul_d(const VarFactor& f, int base, int nsym) {
    if (f.dpow > 0) {
        if (f.dbase != base)
            throw StructureError("WeylOp: mixed derivation bases in one variable");
        VarFactor r = f;
        r.dpow += 1;
        return {{canon(r), RatFunc::one(nsym)}};
    }
    if (f.xpow == 0) {
        VarFactor r = f;
        r.dpow = 1;
        r.dbase = base;
        return {{canon(r), RatFunc::one(nsym)}};
    }
    // x^a g^c d = q^{-c}/(q^d - q^{-d}) (x^{a-1} g^{c+d} - x^{a-1} g^{c-d})
    RatFunc pre = RatFunc::q_power(-f.gexp, nsym) /
                  (RatFunc::q_power(base, nsym) - RatFunc::q_power(-base, nsym));
    VarFactor hi = f, lo = f;
    hi.xpow -= 1;
    hi.gexp += base;
    lo.xpow -= 1;
    lo.gexp -= base;
    return {{canon(hi), pre}, {canon(lo), -pre}};
}

// f * g^{sign}
inline Local right_mul_g(const VarFactor& f, int sign, int nsym) {
    VarFactor r = f;
    r.gexp += sign;
    return {{canon(r), RatFunc::q_power(sign * f.dpow, nsym)}};
}

// Product of two one-variable factors as a sum of canonical factors.
inline Local factor_mul(const VarFactor& a, const VarFactor& b, int nsym) {
    Local cur{{a, RatFunc::one(nsym)}};
    auto fold = [&cur, nsym](auto&& step) {
        Local next;
        for (const auto& [f, c] : cur)
            for (const auto& [g, c2] : step(f)) next.emplace_back(g, c * c2);
        // merge duplicates
        std::map<VarFactor, RatFunc> merged;
        for (auto& [g, c] : next) {
            auto it = merged.find(g);
            if (it == merged.end())
                merged.emplace(g, c);
            else
                it->second += c;
        }
        cur.clear();
        for (auto& [g, c] : merged)
            if (!c.is_zero()) cur.emplace_back(g, c);
    };
    for (int i = 0; i < b.xpow; ++i)
        fold([nsym](const VarFactor& f) { return right_mul_x(f, nsym); });
    int sign = b.gexp >= 0 ? 1 : -1;
    for (int i = 0; i < b.gexp * sign; ++i)
        fold([sign, nsym](const VarFactor& f) { return right_mul_g(f, sign, nsym); });
    for (int i = 0; i < b.dpow; ++i)
        fold([&b, nsym](const VarFactor& f) { return right_mul_d(f, b.dbase, nsym); });
    return cur;
}

} // namespace weyl_detail

inline WeylOp op_mul(const WeylOp& A, const WeylOp& B) {
    if (A.nvars() != B.nvars()) throw DomainError("op_mul: variable context mismatch");
    int nsym = std::max(A.nsym(), B.nsym());
    WeylOp r(A.nvars(), nsym);
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            // per-variable local products, then the cartesian combination
            std::vector<weyl_detail::Local> locals;
            locals.reserve(A.nvars());
            for (int v = 0; v < A.nvars(); ++v)
                locals.push_back(weyl_detail::factor_mul(ka[v], kb[v], nsym));
            std::vector<std::pair<WeylOp::Key, RatFunc>> acc{
                {WeylOp::Key(A.nvars()), ca.lifted(nsym) * cb.lifted(nsym)}};
            for (int v = 0; v < A.nvars(); ++v) {
                std::vector<std::pair<WeylOp::Key, RatFunc>> next;
                for (const auto& [key, c] : acc)
                    for (const auto& [f, fc] : locals[v]) {
                        WeylOp::Key nk = key;
                        nk[v] = f;
                        next.emplace_back(std::move(nk), c * fc);
                    }
                acc = std::move(next);
            }
            for (const auto& [key, c] : acc) r.add_term(key, c);
        }
    }
    return r;
}

inline WeylOp commutator(const WeylOp& A, const WeylOp& B) {
    return op_mul(A, B) - op_mul(B, A);
}

inline WeylOp op_pow(const WeylOp& A, int n) {
    if (n < 0) throw DomainError("op_pow: negative power");
    WeylOp r = WeylOp::identity(A.nvars(), A.nsym());
    for (int i = 0; i < n; ++i) r = op_mul(r, A);
    return r;
}

inline CommPoly apply(const WeylOp& A, const CommPoly& f) {
    if (A.nvars() != f.nvars()) throw DomainError("apply: variable context mismatch");
    int nsym = std::max(A.nsym(), f.nsym());
    CommPoly out(f.nvars(), nsym);
    for (const auto& [k, c] : A.terms()) {
        for (const auto& [e, fc] : f.terms()) {
            RatFunc coeff = c.lifted(nsym) * fc.lifted(nsym);
            CommPoly::Exps ne = e;
            bool dead = false;
            for (int v = 0; v < f.nvars() && !dead; ++v) {
                const VarFactor& fac = k[v];
                int deg = ne[v];
                // rightmost operator acts first: d^b, then g^c, then x^a
                for (int i = 0; i < fac.dpow; ++i) {
                    if (deg == 0) {
                        dead = true;
                        break;
                    }
                    coeff *= qint(deg, fac.dbase, nsym);
                    deg -= 1;
                }
                if (dead) break;
                if (fac.gexp != 0) coeff *= RatFunc::q_power(fac.gexp * deg, nsym);
                deg += fac.xpow;
                ne[v] = deg;
            }
            if (!dead && !coeff.is_zero()) out.add_term(ne, coeff);
        }
    }
    return out;
}

// Quantum Fourier transform: x_v -> -d_{y_v}, d_{x_v} -> y_v,
// g_{x_v} -> q^{-1} g_{y_v}^{-1}, extended as an algebra map.  Only defined
// on operators whose derivations are plain base-q.
inline WeylOp fourier(const WeylOp& A) {
    int nsym = A.nsym();
    WeylOp r(A.nvars(), nsym);
    for (const auto& [k, c] : A.terms()) {
        std::vector<std::pair<WeylOp::Key, RatFunc>> acc{{WeylOp::Key(A.nvars()), c}};
        for (int v = 0; v < A.nvars(); ++v) {
            const VarFactor& f = k[v];
            if (f.dpow > 0 && f.dbase != 1)
                throw StructureError("fourier: defined only for base-q derivations");
            // image of x^a g^c d^b is (-1)^a q^{-c} d^a g^{-c} x^b, normalized
            VarFactor img;
            weyl_detail::Local cur{{img, RatFunc::q_power(-f.gexp, nsym) *
                                             RatFunc(Rat(f.xpow % 2 ? -1 : 1), nsym)}};
            auto fold = [&cur, nsym](auto&& step) {
                weyl_detail::Local next;
                for (const auto& [g, cc] : cur)
                    for (const auto& [h, c2] : step(g)) next.emplace_back(h, cc * c2);
                cur = std::move(next);
            };
            for (int i = 0; i < f.xpow; ++i)
                fold([nsym](const VarFactor& g) { return weyl_detail::right_mul_d(g, 1, nsym); });
            int sign = f.gexp >= 0 ? -1 : 1; // g^c maps to g^{-c}
            for (int i = 0; i < f.gexp * (f.gexp >= 0 ? 1 : -1); ++i)
                fold([sign, nsym](const VarFactor& g) {
                    return weyl_detail::right_mul_g(g, sign, nsym);
                });
            for (int i = 0; i < f.dpow; ++i)
                fold([nsym](const VarFactor& g) { return weyl_detail::right_mul_x(g, nsym); });
            std::vector<std::pair<WeylOp::Key, RatFunc>> next;
            for (const auto& [key, cc] : acc)
                for (const auto& [g, c2] : cur) {
                    WeylOp::Key nk = key;
                    nk[v] = g;
                    next.emplace_back(std::move(nk), cc * c2);
                }
            acc = std::move(next);
        }
        for (const auto& [key, cc] : acc) r.add_term(key, cc);
    }
    return r;
}

} // namespace qdual
