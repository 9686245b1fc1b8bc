#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qdual/linalg.hpp"
#include "qdual/ratfunc.hpp"

namespace qdual {

// Exponent vector of a PBW-ordered monomial; entry i is the power of the
// i-th variable in the ring's fixed order.
using NCMono = std::vector<int>;

enum class RingKind { xyz_sl2, x_n, y_n, xy_n };

// A quantum coordinate ring presented as a rewriting system.  For every
// out-of-order adjacent pair (hi, lo) with hi after lo in PBW order there is
// a rule  v_hi * v_lo -> q^swap_exp * v_lo * v_hi + extra,  where extra is a
// (possibly empty) sum of PBW monomials with scalar coefficients.  All four
// ring families rewrite with rules of exactly this shape.
class RingSpec {
public:
    struct Rule {
        int swap_exp = 0; // coefficient q^{swap_exp} on the swapped product
        std::vector<std::pair<RatFunc, NCMono>> extra;
    };

    RingKind kind;
    int n = 0;     // rank parameter for the sl_n families
    int nvars = 0; // number of generators = length of exponent vectors

    Rule rule(int hi, int lo) const {
        if (hi <= lo) throw StructureError("RingSpec: rule wants hi > lo");
        Rule r;
        switch (kind) {
        case RingKind::xyz_sl2:
            // variables 0,1,2 = x,z,y; basis x^a z^c y^b
            if (hi == 1 && lo == 0) {
                r.swap_exp = -2; // z x = q^{-2} x z
            } else if (hi == 2 && lo == 1) {
                r.swap_exp = -2; // y z = q^{-2} z y
            } else {
                // y x = x y + q (q^2 - q^{-2}) z^2
                r.swap_exp = 0;
                LaurentPoly c = LaurentPoly::q_power(3) - LaurentPoly::q_power(-1);
                r.extra.emplace_back(RatFunc(c), NCMono{0, 2, 0});
            }
            break;
        case RingKind::x_n:
            r.swap_exp = -1; // x_j x_i = q^{-1} x_i x_j, i < j
            break;
        case RingKind::y_n:
            r.swap_exp = 1; // y_j y_i = q y_i y_j, i < j
            break;
        case RingKind::xy_n: {
            // variables 0..n-1 = x_1..x_n, n..2n-1 = y_1..y_n
            bool hi_y = hi >= n, lo_y = lo >= n;
            int hi_i = hi_y ? hi - n : hi, lo_i = lo_y ? lo - n : lo;
            if (!hi_y && !lo_y) {
                r.swap_exp = -1; // x_j x_i = q^{-1} x_i x_j
            } else if (hi_y && lo_y) {
                r.swap_exp = 1; // y_j y_i = q y_i y_j
            } else {
                // hi is some y_j, lo is some x_i (x's precede y's in order)
                if (hi_i == lo_i) r.swap_exp = 0;       // same index: commute
                else if (hi_i > lo_i) r.swap_exp = 1;   // y_j x_i = q x_i y_j
                else r.swap_exp = -1;                   // y_i x_j = q^{-1} x_j y_i
            }
            break;
        }
        }
        return r;
    }

    std::string var_name(int v) const {
        switch (kind) {
        case RingKind::xyz_sl2:
            return v == 0 ? "x" : (v == 1 ? "z" : "y");
        case RingKind::x_n:
            return "x" + std::to_string(v + 1);
        case RingKind::y_n:
            return "y" + std::to_string(v + 1);
        case RingKind::xy_n:
            return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
        }
        return "?";
    }
};

inline RingSpec make_ring(RingKind kind, int n = 0) {
    RingSpec r;
    r.kind = kind;
    r.n = n;
    switch (kind) {
    case RingKind::xyz_sl2:
        r.nvars = 3;
        break;
    case RingKind::x_n:
    case RingKind::y_n:
        if (n < 2) throw DomainError("make_ring: need n >= 2");
        r.nvars = n;
        break;
    case RingKind::xy_n:
        if (n < 2) throw DomainError("make_ring: need n >= 2");
        r.nvars = 2 * n;
        break;
    }
    return r;
}

// Element of a quantum coordinate ring in PBW normal form.
class NCPoly {
public:
    using TermMap = std::map<NCMono, RatFunc>;

    explicit NCPoly(int nvars = 0, int nsym = 0) : nvars_(nvars), nsym_(nsym) {}

    static NCPoly monomial(int nvars, const NCMono& m, const RatFunc& c) {
        NCPoly p(nvars, c.nsym());
        p.add_term(m, c);
        return p;
    }
    static NCPoly variable(int nvars, int v, int nsym = 0) {
        NCMono m(nvars, 0);
        m[v] = 1;
        return monomial(nvars, m, RatFunc::one(nsym));
    }
    static NCPoly constant(int nvars, const RatFunc& c) {
        return monomial(nvars, NCMono(nvars, 0), c);
    }

    int nvars() const { return nvars_; }
    int nsym() const { return nsym_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const NCMono& m, const RatFunc& c) {
        if (static_cast<int>(m.size()) != nvars_) throw DomainError("NCPoly: arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator-() const {
        NCPoly r(nvars_, nsym_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    NCPoly scaled(const RatFunc& c) const {
        NCPoly r(nvars_, nsym_);
        if (c.is_zero()) return r;
        for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
        return r;
    }

    bool operator==(const NCPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    long degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) {
            long s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    std::string to_string(const RingSpec& ring,
                          const std::vector<std::string>& sym_names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string(sym_names) + ")";
            for (int v = 0; v < nvars_; ++v) {
                if (m[v] == 0) continue;
                out += "*" + ring.var_name(v);
                if (m[v] != 1) out += "^" + std::to_string(m[v]);
            }
        }
        return out;
    }

private:
    int nvars_, nsym_;
    TermMap terms_;
};

namespace detail {

// Right-multiply the PBW monomial m by a single generator v, returning the
// normal form.  Strategy: peel the rightmost generator of m that must pass
// v, apply the adjacent swap rule, recurse.  The z^2 correction of the
// xyz_sl2 ring lowers the number of (y,x) inversions, so this terminates.
inline NCPoly right_mul_var(const RingSpec& ring, const NCMono& m, int v, int nsym);

inline NCPoly right_mul_mono(const RingSpec& ring, const NCPoly& p, const NCMono& mono,
                             int nsym) {
    NCPoly r = p;
    for (int v = 0; v < static_cast<int>(mono.size()); ++v) {
        for (int k = 0; k < mono[v]; ++k) {
            NCPoly next(ring.nvars, nsym);
            for (const auto& [mm, c] : r.terms())
                next += right_mul_var(ring, mm, v, nsym).scaled(c);
            r = std::move(next);
        }
    }
    return r;
}

inline NCPoly right_mul_var(const RingSpec& ring, const NCMono& m, int v, int nsym) {
    int k = -1;
    for (int i = ring.nvars - 1; i > v; --i) {
        if (m[i] > 0) {
            k = i;
            break;
        }
    }
    if (k < 0) {
        NCMono r = m;
        r[v] += 1;
        return NCPoly::monomial(ring.nvars, r, RatFunc::one(nsym));
    }
    NCMono mp = m;
    mp[k] -= 1; // m = mp * v_k
    RingSpec::Rule rule = ring.rule(k, v);
    // m * v = mp * (v_k v) = q^{swap} (mp * v) * v_k + sum extra: mp * extra
    NCPoly swapped = right_mul_var(ring, mp, v, nsym);
    NCPoly res(ring.nvars, nsym);
    NCPoly tail(ring.nvars, nsym);
    for (const auto& [mm, c] : swapped.terms())
        tail += right_mul_var(ring, mm, k, nsym).scaled(c);
    res += tail.scaled(RatFunc::q_power(rule.swap_exp, nsym));
    for (const auto& [coeff, extra] : rule.extra)
        res += right_mul_mono(ring, NCPoly::monomial(ring.nvars, mp, coeff.lifted(nsym)),
                              extra, nsym);
    return res;
}

} // namespace detail

inline NCPoly mul(const RingSpec& ring, const NCPoly& f, const NCPoly& g) {
    if (f.nvars() != ring.nvars || g.nvars() != ring.nvars)
        throw DomainError("mul: ring arity mismatch");
    int nsym = std::max(f.nsym(), g.nsym());
    NCPoly r(ring.nvars, nsym);
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            r += detail::right_mul_mono(ring, NCPoly::monomial(ring.nvars, mf,
                                                               cf.lifted(nsym)),
                                        mg, nsym)
                     .scaled(cg.lifted(nsym));
    return r;
}

// Normal form of an arbitrary word, given as (variable, power) letters.
inline NCPoly normal_form(const RingSpec& ring,
                          const std::vector<std::pair<int, int>>& word, int nsym = 0) {
    NCPoly r = NCPoly::constant(ring.nvars, RatFunc::one(nsym));
    for (const auto& [v, pow] : word) {
        if (v < 0 || v >= ring.nvars) throw DomainError("normal_form: unknown variable");
        if (pow < 0) throw DomainError("normal_form: negative power");
        NCMono step(ring.nvars, 0);
        step[v] = pow;
        NCPoly next(ring.nvars, nsym);
        for (const auto& [m, c] : r.terms())
            next += detail::right_mul_mono(ring, NCPoly::monomial(ring.nvars, m, c), step, nsym);
        r = std::move(next);
    }
    return r;
}

inline bool is_central(const RingSpec& ring, const NCPoly& f) {
    for (int v = 0; v < ring.nvars; ++v) {
        NCPoly gen = NCPoly::variable(ring.nvars, v, f.nsym());
        if (mul(ring, gen, f) != mul(ring, f, gen)) return false;
    }
    return true;
}

// Enumerate PBW monomials of exact total degree d.
inline void monomials_of_degree(int nvars, int d, std::vector<NCMono>& out) {
    NCMono m(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(m);
        return;
    }
    rec(0, d);
}

// Basis of the centre up to total degree D.  The commutator map with each
// generator is degree-homogeneous for all four ring families, so the centre
// splits over degree slices and each slice is an exact kernel computation.
inline std::vector<NCPoly> center_basis(const RingSpec& ring, int max_total_degree) {
    std::vector<NCPoly> basis;
    for (int d = 0; d <= max_total_degree; ++d) {
        std::vector<NCMono> cols;
        monomials_of_degree(ring.nvars, d, cols);
        std::vector<NCMono> rows;
        monomials_of_degree(ring.nvars, d + 1, rows);
        std::map<NCMono, int> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);
        Matrix A(static_cast<int>(rows.size()) * ring.nvars, static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            NCPoly f = NCPoly::monomial(ring.nvars, cols[j], RatFunc::one());
            for (int v = 0; v < ring.nvars; ++v) {
                NCPoly gen = NCPoly::variable(ring.nvars, v);
                NCPoly comm = mul(ring, gen, f) - mul(ring, f, gen);
                for (const auto& [m, c] : comm.terms())
                    A.at(v * static_cast<int>(rows.size()) + row_of.at(m),
                         static_cast<int>(j)) = c;
            }
        }
        for (const auto& vec : A.kernel()) {
            NCPoly f(ring.nvars, 0);
            for (std::size_t j = 0; j < cols.size(); ++j) f.add_term(cols[j], vec[j]);
            basis.push_back(std::move(f));
        }
    }
    return basis;
}

} // namespace qdual
