#pragma once

#include <vector>

#include "qdual/ncpoly.hpp"
#include "qdual/quantumgroup.hpp"
#include "qdual/weylop.hpp"

namespace qdual {

enum class Duality { sl2_triple, sln };

// Degree label of a graded slice: total degree a for the three-variable
// duality, bidegree (a, b) for the sl_n one (b ignored otherwise).
struct HarmonicLabel {
    int a = 0;
    int b = 0;
};

struct HarmonicSpace {
    HarmonicLabel label;
    std::vector<CommPoly> basis;
};

struct FischerExpansion {
    // f = sum_j P^j h_j with h_j harmonic
    std::vector<std::pair<int, CommPoly>> components;
};

// Everything needed to work inside one of the two dualities: the variable
// context, the invariant operators, both commuting actions, and the
// noncommutative ring the polynomial model is transported to.
struct DualityContext {
    Duality which;
    int n = 0;      // rank parameter of the sl_n duality
    int nvars = 0;  // 3, or 2n
    WeylOp P, Q, Eg;
    WeylOp Ex, Ey;  // sl_n only
    RepAssignment sigma;
    RepAssignment pi;
    Presentation sigma_pres;
    Presentation pi_pres;
    RingSpec ring;

    // the invariant quadric on the commutative side
    CommPoly p_comm() const {
        CommPoly p(nvars, 0);
        if (which == Duality::sl2_triple) {
            // p = q^{-1} x y + q^2 z^2
            p.add_term({1, 1, 0}, RatFunc::q_power(-1));
            p.add_term({0, 0, 2}, RatFunc::q_power(2));
        } else {
            // p = sum_k q^{k-1} x_k y_k
            for (int k = 0; k < n; ++k) {
                CommPoly::Exps e(nvars, 0);
                e[k] = 1;
                e[n + k] = 1;
                p.add_term(e, RatFunc::q_power(k));
            }
        }
        return p;
    }
};

namespace howe_detail {

// assemble a single WeylOp term from per-variable factors
inline void put(WeylOp& op, std::vector<VarFactor> key, const RatFunc& c) {
    op.add_term(key, c);
}

inline VarFactor fx(int pow) { return VarFactor{pow, 0, 0, 1}; }
inline VarFactor fg(int exp) { return VarFactor{0, exp, 0, 1}; }
inline VarFactor fd(int base, int pow = 1) { return VarFactor{0, 0, pow, base}; }
inline VarFactor fgd(int gexp, int base, int pow = 1) { return VarFactor{0, gexp, pow, base}; }
inline VarFactor fxg(int xpow, int gexp) { return VarFactor{xpow, gexp, 0, 1}; }

inline DualityContext build_sl2_triple() {
    DualityContext ctx;
    ctx.which = Duality::sl2_triple;
    ctx.nvars = 3; // x = 0, y = 1, z = 2 on the commutative side
    ctx.ring = make_ring(RingKind::xyz_sl2);
    const int X = 0, Y = 1, Z = 2;
    RatFunc two = qint(2);

    auto key = []() { return std::vector<VarFactor>(3); };

    // sigma(E) = [2] z g_x^-2 g_y^2 d_{q^2,x} - y g_y^2 g_z^-1 d_{q,z}
    WeylOp sE(3, 0);
    {
        auto k = key();
        k[X] = fgd(-2, 2);
        k[Y] = fg(2);
        k[Z] = fx(1);
        put(sE, k, two);
        k = key();
        k[Y] = fxg(1, 2);
        k[Z] = fgd(-1, 1);
        put(sE, k, -RatFunc::one());
    }
    // sigma(K) = g_x^-2 g_y^2
    WeylOp sK(3, 0), sKi(3, 0);
    {
        auto k = key();
        k[X] = fg(-2);
        k[Y] = fg(2);
        put(sK, k, RatFunc::one());
        k = key();
        k[X] = fg(2);
        k[Y] = fg(-2);
        put(sKi, k, RatFunc::one());
    }
    // sigma(F) = -[2] z g_x^2 g_y^-2 d_{q^2,y} + x g_x^2 g_z^-1 d_{q,z}
    WeylOp sF(3, 0);
    {
        auto k = key();
        k[X] = fg(2);
        k[Y] = fgd(-2, 2);
        k[Z] = fx(1);
        put(sF, k, -two);
        k = key();
        k[X] = fxg(1, 2);
        k[Z] = fgd(-1, 1);
        put(sF, k, RatFunc::one());
    }
    ctx.sigma.d = 1;
    ctx.sigma.images = {{{GenKind::E, 0}, sE},
                        {{GenKind::F, 0}, sF},
                        {{GenKind::K, 0}, sK},
                        {{GenKind::Kinv, 0}, sKi}};
    ctx.sigma_pres = present_sl2(1);

    // P = q^-1 x y g_z^-2 + q^2 z^2
    WeylOp P(3, 0);
    {
        auto k = key();
        k[X] = fx(1);
        k[Y] = fx(1);
        k[Z] = fg(-2);
        put(P, k, RatFunc::q_power(-1));
        k = key();
        k[Z] = fx(2);
        put(P, k, RatFunc::q_power(2));
    }
    // Q = d_{q^2,x} d_{q^2,y} + 1/[2]^2 d_{q,z}^2 g_x^2 g_y^2
    WeylOp Q(3, 0);
    {
        auto k = key();
        k[X] = fd(2);
        k[Y] = fd(2);
        put(Q, k, RatFunc::one());
        k = key();
        k[X] = fg(2);
        k[Y] = fg(2);
        k[Z] = fd(1, 2);
        put(Q, k, two.pow(-2));
    }
    // E = g_x g_y g_z
    WeylOp Eg(3, 0);
    {
        auto k = key();
        k[X] = fg(1);
        k[Y] = fg(1);
        k[Z] = fg(1);
        put(Eg, k, RatFunc::one());
    }
    ctx.P = P;
    ctx.Q = Q;
    ctx.Eg = Eg;

    // pi(E) = P, pi(K) = q^3 E^2, pi(F) = -Q; a U_{q^2}(sl2) action
    WeylOp pK(3, 0), pKi(3, 0);
    {
        auto k = key();
        k[X] = fg(2);
        k[Y] = fg(2);
        k[Z] = fg(2);
        put(pK, k, RatFunc::q_power(3));
        k = key();
        k[X] = fg(-2);
        k[Y] = fg(-2);
        k[Z] = fg(-2);
        put(pKi, k, RatFunc::q_power(-3));
    }
    ctx.pi.d = 2;
    ctx.pi.images = {{{GenKind::E, 0}, P},
                     {{GenKind::F, 0}, -Q},
                     {{GenKind::K, 0}, pK},
                     {{GenKind::Kinv, 0}, pKi}};
    ctx.pi_pres = present_sl2(2);
    return ctx;
}

inline DualityContext build_sln(int n) {
    if (n < 2) throw DomainError("build_context: need n >= 2");
    DualityContext ctx;
    ctx.which = Duality::sln;
    ctx.n = n;
    ctx.nvars = 2 * n; // x_1..x_n = 0..n-1, y_1..y_n = n..2n-1
    ctx.ring = make_ring(RingKind::xy_n, n);
    auto key = [n]() { return std::vector<VarFactor>(2 * n); };
    auto xv = [](int k) { return k; };
    auto yv = [n](int k) { return n + k; };

    ctx.sigma.d = 1;
    for (int i = 0; i + 1 < n; ++i) {
        // sigma(E_i) = -x_{i+1} g_{x_i}^-1 g_{x_{i+1}} d_{x_i} g_{y_i} g_{y_{i+1}}^-1
        //              + y_i d_{y_{i+1}}
        WeylOp E(2 * n, 0);
        {
            auto k = key();
            k[xv(i)] = fgd(-1, 1);
            k[xv(i + 1)] = fxg(1, 1);
            k[yv(i)] = fg(1);
            k[yv(i + 1)] = fg(-1);
            put(E, k, -RatFunc::one());
            k = key();
            k[yv(i)] = fx(1);
            k[yv(i + 1)] = fd(1);
            put(E, k, RatFunc::one());
        }
        // sigma(K_i) = g_{x_i}^-1 g_{x_{i+1}} g_{y_i} g_{y_{i+1}}^-1
        WeylOp K(2 * n, 0), Ki(2 * n, 0);
        {
            auto k = key();
            k[xv(i)] = fg(-1);
            k[xv(i + 1)] = fg(1);
            k[yv(i)] = fg(1);
            k[yv(i + 1)] = fg(-1);
            put(K, k, RatFunc::one());
            k = key();
            k[xv(i)] = fg(1);
            k[xv(i + 1)] = fg(-1);
            k[yv(i)] = fg(-1);
            k[yv(i + 1)] = fg(1);
            put(Ki, k, RatFunc::one());
        }
        // sigma(F_i) = -x_i g_{x_i} g_{x_{i+1}}^-1 d_{x_{i+1}}
        //              + g_{x_i} g_{x_{i+1}}^-1 y_{i+1} d_{y_i}
        WeylOp F(2 * n, 0);
        {
            auto k = key();
            k[xv(i)] = fxg(1, 1);
            k[xv(i + 1)] = fgd(-1, 1);
            put(F, k, -RatFunc::one());
            k = key();
            k[xv(i)] = fg(1);
            k[xv(i + 1)] = fg(-1);
            k[yv(i)] = fd(1);
            k[yv(i + 1)] = fx(1);
            put(F, k, RatFunc::one());
        }
        ctx.sigma.images[{GenKind::E, i}] = E;
        ctx.sigma.images[{GenKind::F, i}] = F;
        ctx.sigma.images[{GenKind::K, i}] = K;
        ctx.sigma.images[{GenKind::Kinv, i}] = Ki;
    }
    ctx.sigma_pres = present_sln(n);

    // P = sum_k q^{k-1} x_k y_k prod_{i<k} g_{y_i} prod_{i>k} g_{x_i}^-1
    WeylOp P(2 * n, 0), Q(2 * n, 0);
    for (int k = 0; k < n; ++k) {
        auto kk = key();
        kk[xv(k)] = fx(1);
        kk[yv(k)] = fx(1);
        for (int i = 0; i < k; ++i) kk[yv(i)] = fg(1);
        for (int i = k + 1; i < n; ++i) kk[xv(i)] = fg(-1);
        put(P, kk, RatFunc::q_power(k));
        // Q = sum_k q^{-n+k} d_{x_k} d_{y_k} prod_{i<k} g_{x_i} prod_{i>k} g_{y_i}^-1
        kk = key();
        kk[xv(k)] = fd(1);
        kk[yv(k)] = fd(1);
        for (int i = 0; i < k; ++i) kk[xv(i)] = fg(1);
        for (int i = k + 1; i < n; ++i) kk[yv(i)] = fg(-1);
        put(Q, kk, RatFunc::q_power(k + 1 - n));
    }
    WeylOp Ex(2 * n, 0), Ey(2 * n, 0), Eg(2 * n, 0), pK(2 * n, 0), pKi(2 * n, 0);
    {
        auto kk = key();
        for (int k = 0; k < n; ++k) kk[xv(k)] = fg(1);
        put(Ex, kk, RatFunc::one());
        kk = key();
        for (int k = 0; k < n; ++k) kk[yv(k)] = fg(1);
        put(Ey, kk, RatFunc::one());
        kk = key();
        for (int k = 0; k < 2 * n; ++k) kk[k] = fg(1);
        put(Eg, kk, RatFunc::one());
        put(pK, kk, RatFunc::q_power(n));
        kk = key();
        for (int k = 0; k < 2 * n; ++k) kk[k] = fg(-1);
        put(pKi, kk, RatFunc::q_power(-n));
    }
    ctx.P = P;
    ctx.Q = Q;
    ctx.Ex = Ex;
    ctx.Ey = Ey;
    ctx.Eg = Eg;
    ctx.pi.d = 1;
    ctx.pi.images = {{{GenKind::E, 0}, P},
                     {{GenKind::F, 0}, -Q},
                     {{GenKind::K, 0}, pK},
                     {{GenKind::Kinv, 0}, pKi}};
    ctx.pi_pres = present_sl2(1);
    return ctx;
}

} // namespace howe_detail

// Construct a duality context and verify it: both actions satisfy their
// presentations and the two images commute elementwise.
inline DualityContext build_context(Duality which, int n = 0) {
    DualityContext ctx = which == Duality::sl2_triple ? howe_detail::build_sl2_triple()
                                                      : howe_detail::build_sln(n);
    RelationReport r1 = check_relations(ctx.sigma, ctx.sigma_pres);
    if (!r1.passed)
        throw StructureError("build_context: sigma fails " + r1.failures.front().relation);
    RelationReport r2 = check_relations(ctx.pi, ctx.pi_pres);
    if (!r2.passed)
        throw StructureError("build_context: pi fails " + r2.failures.front().relation);
    RelationReport r3 = check_commutant(ctx.sigma, ctx.pi);
    if (!r3.passed)
        throw StructureError("build_context: commutant fails " + r3.failures.front().relation);
    return ctx;
}

// monomial bases of the graded slices
inline std::vector<CommPoly::Exps> slice_monomials(const DualityContext& ctx,
                                                   const HarmonicLabel& l) {
    std::vector<CommPoly::Exps> out;
    if (l.a < 0 || l.b < 0) return out;
    if (ctx.which == Duality::sl2_triple) {
        monomials_of_degree(3, l.a, out);
    } else {
        std::vector<CommPoly::Exps> xs, ys;
        monomials_of_degree(ctx.n, l.a, xs);
        monomials_of_degree(ctx.n, l.b, ys);
        for (const auto& ex : xs)
            for (const auto& ey : ys) {
                CommPoly::Exps e = ex;
                e.insert(e.end(), ey.begin(), ey.end());
                out.push_back(std::move(e));
            }
    }
    return out;
}

inline HarmonicLabel label_of_exps(const DualityContext& ctx, const CommPoly::Exps& e) {
    HarmonicLabel l;
    if (ctx.which == Duality::sl2_triple) {
        for (int v : e) l.a += v;
    } else {
        for (int k = 0; k < ctx.n; ++k) l.a += e[k];
        for (int k = 0; k < ctx.n; ++k) l.b += e[ctx.n + k];
    }
    return l;
}

inline long harmonic_dim_formula(const DualityContext& ctx, const HarmonicLabel& l) {
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return 0L;
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    if (ctx.which == Duality::sl2_triple) return 2L * l.a + 1;
    long n = ctx.n, a = l.a, b = l.b;
    return (a + b + n - 1) * (n - 1) * binom(a + n - 1, n - 1) * binom(b + n - 1, n - 1) /
           ((a + n - 1) * (b + n - 1));
}

// Kernel of Q on the graded slice; the dimension must match the closed
// formula, otherwise the stated decomposition is broken.
inline HarmonicSpace harmonic_basis(const DualityContext& ctx, const HarmonicLabel& l) {
    if (l.a < 0 || (ctx.which == Duality::sln && l.b < 0))
        throw DomainError("harmonic_basis: negative degree");
    std::vector<CommPoly::Exps> cols = slice_monomials(ctx, l);
    HarmonicLabel lower = ctx.which == Duality::sl2_triple ? HarmonicLabel{l.a - 2, 0}
                                                           : HarmonicLabel{l.a - 1, l.b - 1};
    std::vector<CommPoly::Exps> rows = slice_monomials(ctx, lower);
    std::map<CommPoly::Exps, int> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);
    Matrix A(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        CommPoly qm = apply(ctx.Q, CommPoly::monomial(ctx.nvars, cols[j], RatFunc::one()));
        for (const auto& [e, c] : qm.terms()) A.at(row_of.at(e), static_cast<int>(j)) = c;
    }
    HarmonicSpace h;
    h.label = l;
    for (const auto& v : A.kernel()) {
        CommPoly f(ctx.nvars, 0);
        for (std::size_t j = 0; j < cols.size(); ++j) f.add_term(cols[j], v[j]);
        h.basis.push_back(std::move(f));
    }
    if (static_cast<long>(h.basis.size()) != harmonic_dim_formula(ctx, l))
        throw StructureError("harmonic_basis: dimension does not match the closed formula");
    return h;
}

// f = sum_j P^j h_j, solved slice by slice in the explicit spanning set.
inline FischerExpansion fischer_decompose(const DualityContext& ctx, const CommPoly& f) {
    FischerExpansion out;
    if (f.is_zero()) return out;
    // split into graded slices
    std::map<std::pair<int, int>, CommPoly> slices;
    for (const auto& [e, c] : f.terms()) {
        HarmonicLabel l = label_of_exps(ctx, e);
        auto it = slices.find({l.a, l.b});
        if (it == slices.end())
            it = slices.emplace(std::make_pair(l.a, l.b), CommPoly(ctx.nvars, f.nsym())).first;
        it->second.add_term(e, c);
    }
    std::map<int, CommPoly> acc; // j -> harmonic component
    for (const auto& [lab, part] : slices) {
        HarmonicLabel l{lab.first, lab.second};
        int jmax = ctx.which == Duality::sl2_triple ? l.a / 2 : std::min(l.a, l.b);
        std::vector<CommPoly::Exps> rows = slice_monomials(ctx, l);
        std::map<CommPoly::Exps, int> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);
        // columns: P^j h for each harmonic basis vector of the right label
        std::vector<HarmonicSpace> spaces;
        for (int j = 0; j <= jmax; ++j) {
            HarmonicLabel hl = ctx.which == Duality::sl2_triple
                                   ? HarmonicLabel{l.a - 2 * j, 0}
                                   : HarmonicLabel{l.a - j, l.b - j};
            spaces.push_back(harmonic_basis(ctx, hl));
        }
        std::vector<std::pair<int, int>> col_index; // (j, index in space)
        int ncols = 0;
        for (int j = 0; j <= jmax; ++j) ncols += static_cast<int>(spaces[j].basis.size());
        Matrix A(static_cast<int>(rows.size()), ncols);
        std::vector<RatFunc> rhs(rows.size(), RatFunc(0));
        int cidx = 0;
        for (int j = 0; j <= jmax; ++j) {
            for (const CommPoly& h : spaces[j].basis) {
                CommPoly ph = h;
                for (int i = 0; i < j; ++i) ph = apply(ctx.P, ph);
                for (const auto& [e, c] : ph.terms()) A.at(row_of.at(e), cidx) = c;
                col_index.push_back({j, static_cast<int>(&h - spaces[j].basis.data())});
                ++cidx;
            }
        }
        for (const auto& [e, c] : part.terms()) rhs[row_of.at(e)] = c;
        auto sol = A.solve(rhs);
        if (!sol)
            throw StructureError("fischer_decompose: slice not in the span of P^j harmonics");
        for (int c = 0; c < ncols; ++c) {
            if ((*sol)[c].is_zero()) continue;
            auto [j, hi] = col_index[c];
            auto it = acc.find(j);
            if (it == acc.end()) it = acc.emplace(j, CommPoly(ctx.nvars, 0)).first;
            it->second += spaces[j].basis[hi].scaled((*sol)[c]);
        }
    }
    for (auto& [j, h] : acc)
        if (!h.is_zero()) out.components.push_back({j, std::move(h)});
    return out;
}

inline CommPoly fischer_recompose(const DualityContext& ctx, const FischerExpansion& e) {
    CommPoly f(ctx.nvars, 0);
    for (const auto& [j, h] : e.components) {
        CommPoly ph = h;
        for (int i = 0; i < j; ++i) ph = apply(ctx.P, ph);
        f += ph;
    }
    return f;
}

// basis-to-basis identification between the polynomial model and the
// quantum coordinate ring: x^a y^b z^c <-> x^a z^c y^b (identity for sl_n)
inline NCPoly phi_transport(const DualityContext& ctx, const CommPoly& f) {
    NCPoly r(ctx.nvars, f.nsym());
    for (const auto& [e, c] : f.terms()) {
        NCMono m = e;
        if (ctx.which == Duality::sl2_triple) m = NCMono{e[0], e[2], e[1]};
        r.add_term(m, c);
    }
    return r;
}

inline CommPoly phi_transport_inv(const DualityContext& ctx, const NCPoly& f) {
    CommPoly r(ctx.nvars, f.nsym());
    for (const auto& [m, c] : f.terms()) {
        CommPoly::Exps e = m;
        if (ctx.which == Duality::sl2_triple) e = CommPoly::Exps{m[0], m[2], m[1]};
        r.add_term(e, c);
    }
    return r;
}

// the transported Laplacian Delta = phi o Q o phi^{-1} on the ring side
inline NCPoly delta_q(const DualityContext& ctx, const NCPoly& f) {
    return phi_transport(ctx, apply(ctx.Q, phi_transport_inv(ctx, f)));
}

// the invariant quadric on the ring side
inline NCPoly p_nc(const DualityContext& ctx) {
    return phi_transport(ctx, ctx.p_comm());
}

// Verify Delta(p^{s+1}) = b(s) p^s and return the measured b(s).
inline RatFunc bernstein_check(const DualityContext& ctx, int s) {
    if (s < 0) throw DomainError("bernstein_check: negative s");
    NCPoly p = p_nc(ctx);
    NCPoly ps = NCPoly::constant(ctx.nvars, RatFunc::one());
    for (int i = 0; i < s; ++i) ps = mul(ctx.ring, ps, p);
    NCPoly ps1 = mul(ctx.ring, ps, p);
    NCPoly lhs = delta_q(ctx, ps1);
    if (lhs.is_zero() || ps.is_zero())
        throw StructureError("bernstein_check: degenerate input");
    const auto& [m0, c0] = *ps.terms().begin();
    auto it = lhs.terms().find(m0);
    if (it == lhs.terms().end())
        throw StructureError("bernstein_check: image is not a multiple of p^s");
    RatFunc b = it->second / c0;
    if (lhs != ps.scaled(b))
        throw StructureError("bernstein_check: image is not a multiple of p^s");
    return b;
}

// Basis of sigma-invariants up to total degree D, returned on the ring side.
// Invariance: killed by every E_i and F_i, fixed by every K_i.
inline std::vector<NCPoly> invariants_basis(const DualityContext& ctx, int max_degree) {
    std::vector<NCPoly> out;
    std::vector<Gen> conds;
    int rank = ctx.sigma_pres.rank;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<CommPoly::Exps> cols;
        monomials_of_degree(ctx.nvars, d, cols);
        std::map<CommPoly::Exps, int> row_of;
        for (std::size_t i = 0; i < cols.size(); ++i) row_of[cols[i]] = static_cast<int>(i);
        int nrows = static_cast<int>(cols.size()) * rank * 3;
        Matrix A(nrows, static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            CommPoly m = CommPoly::monomial(ctx.nvars, cols[j], RatFunc::one());
            for (int i = 0; i < rank; ++i) {
                CommPoly im[3] = {apply(ctx.sigma.image({GenKind::E, i}), m),
                                  apply(ctx.sigma.image({GenKind::F, i}), m),
                                  apply(ctx.sigma.image({GenKind::K, i}), m) - m};
                for (int w = 0; w < 3; ++w)
                    for (const auto& [e, c] : im[w].terms())
                        A.at((i * 3 + w) * static_cast<int>(cols.size()) + row_of.at(e),
                             static_cast<int>(j)) = c;
            }
        }
        for (const auto& v : A.kernel()) {
            CommPoly f(ctx.nvars, 0);
            for (std::size_t j = 0; j < cols.size(); ++j) f.add_term(cols[j], v[j]);
            out.push_back(phi_transport(ctx, f));
        }
    }
    return out;
}

// Verify the highest-weight data of the slice labelled (a) resp. (a, b):
// the vector y^a resp. x_n^a y_1^b is annihilated by Q and every sigma(E_i),
// carries the stated sigma(K_i)-eigenvalues, and pi(K) acts by q^{3+2a}
// resp. q^{n+a+b}.
inline bool highest_weight_check(const DualityContext& ctx, const HarmonicLabel& l) {
    CommPoly::Exps e(ctx.nvars, 0);
    int pi_exp = 0;
    if (ctx.which == Duality::sl2_triple) {
        e[1] = l.a; // y^a
        pi_exp = 3 + 2 * l.a;
    } else {
        e[ctx.n - 1] = l.a;  // x_n^a
        e[ctx.n] = l.b;      // y_1^b
        pi_exp = ctx.n + l.a + l.b;
    }
    CommPoly v = CommPoly::monomial(ctx.nvars, e, RatFunc::one());
    if (!apply(ctx.Q, v).is_zero()) return false;
    for (int i = 0; i < ctx.sigma_pres.rank; ++i) {
        if (!apply(ctx.sigma.image({GenKind::E, i}), v).is_zero()) return false;
        int kexp;
        if (ctx.which == Duality::sl2_triple) {
            kexp = 2 * l.a;
        } else {
            kexp = (i == ctx.n - 2 ? l.a : 0) + (i == 0 ? l.b : 0);
        }
        if (apply(ctx.sigma.image({GenKind::K, i}), v) != v.scaled(RatFunc::q_power(kexp)))
            return false;
    }
    return apply(ctx.pi.image({GenKind::K, 0}), v) == v.scaled(RatFunc::q_power(pi_exp));
}

} // namespace qdual
