#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "qdual/weylop.hpp"

namespace qdual {

enum class GenKind { E, F, K, Kinv };

// Generator label: E_i, F_i, K_i^{+-1}.  index is 0 for sl2.
struct Gen {
    GenKind kind;
    int index = 0;

    auto key() const { return std::tie(kind, index); }
    bool operator<(const Gen& o) const { return key() < o.key(); }
    bool operator==(const Gen& o) const { return key() == o.key(); }

    std::string name() const {
        std::string base;
        switch (kind) {
        case GenKind::E: base = "E"; break;
        case GenKind::F: base = "F"; break;
        case GenKind::K: base = "K"; break;
        case GenKind::Kinv: base = "K^-1"; break;
        }
        if (index > 0 || kind == GenKind::E || kind == GenKind::F)
            base += "_" + std::to_string(index + 1);
        return base;
    }
};

// A presentation: list of relations sum_j coeff_j * word_j = 0.
struct Presentation {
    struct Relation {
        std::string name;
        std::vector<std::pair<RatFunc, std::vector<Gen>>> terms;
    };

    std::string label;
    int d = 1;            // sl2: relations live over q^d
    int rank = 1;         // number of E/F/K triples (n-1 for sl_n)
    std::vector<Relation> relations;

    std::vector<Gen> generators() const {
        std::vector<Gen> g;
        for (int i = 0; i < rank; ++i) {
            g.push_back({GenKind::E, i});
            g.push_back({GenKind::F, i});
            g.push_back({GenKind::K, i});
            g.push_back({GenKind::Kinv, i});
        }
        return g;
    }
};

// U_{q^d}(sl2): KEK^{-1} = q^{2d}E, KFK^{-1} = q^{-2d}F,
// [E,F] = (K - K^{-1})/(q^d - q^{-d}).
inline Presentation present_sl2(int d = 1, int nsym = 0) {
    if (d < 1) throw DomainError("present_sl2: base must be >= 1");
    Presentation p;
    p.label = d == 1 ? "U_q(sl2)" : "U_{q^" + std::to_string(d) + "}(sl2)";
    p.d = d;
    p.rank = 1;
    Gen E{GenKind::E, 0}, F{GenKind::F, 0}, K{GenKind::K, 0}, Ki{GenKind::Kinv, 0};
    RatFunc one = RatFunc::one(nsym);
    RatFunc qden = (RatFunc::q_power(d, nsym) - RatFunc::q_power(-d, nsym)).inverse();
    p.relations.push_back({"K K^-1 = 1", {{one, {K, Ki}}, {-one, {}}}});
    p.relations.push_back({"K^-1 K = 1", {{one, {Ki, K}}, {-one, {}}}});
    p.relations.push_back({"K E = q^2d E K",
                           {{one, {K, E}}, {-RatFunc::q_power(2 * d, nsym), {E, K}}}});
    p.relations.push_back({"K F = q^-2d F K",
                           {{one, {K, F}}, {-RatFunc::q_power(-2 * d, nsym), {F, K}}}});
    p.relations.push_back({"[E,F] = (K - K^-1)/(q^d - q^-d)",
                           {{one, {E, F}}, {-one, {F, E}}, {-qden, {K}}, {qden, {Ki}}}});
    return p;
}

// U_q(sl_n), n >= 2, with the standard Cartan matrix pairing.
inline Presentation present_sln(int n, int nsym = 0) {
    if (n < 2) throw DomainError("present_sln: need n >= 2");
    Presentation p;
    p.label = "U_q(sl" + std::to_string(n) + ")";
    p.d = 1;
    p.rank = n - 1;
    RatFunc one = RatFunc::one(nsym);
    RatFunc qden = (RatFunc::q_power(1, nsym) - RatFunc::q_power(-1, nsym)).inverse();
    RatFunc two_q = qint(2, 1, nsym);
    auto pairing = [](int i, int j) {
        if (i == j) return 2;
        if (i - j == 1 || j - i == 1) return -1;
        return 0;
    };
    for (int i = 0; i < p.rank; ++i) {
        Gen E{GenKind::E, i}, F{GenKind::F, i}, K{GenKind::K, i}, Ki{GenKind::Kinv, i};
        std::string si = std::to_string(i + 1);
        p.relations.push_back({"K_" + si + " K_" + si + "^-1 = 1", {{one, {K, Ki}}, {-one, {}}}});
        p.relations.push_back({"K_" + si + "^-1 K_" + si + " = 1", {{one, {Ki, K}}, {-one, {}}}});
        for (int j = 0; j < p.rank; ++j) {
            Gen Ej{GenKind::E, j}, Fj{GenKind::F, j}, Kj{GenKind::K, j};
            std::string sj = std::to_string(j + 1);
            if (i < j)
                p.relations.push_back({"K_" + si + " K_" + sj + " commute",
                                       {{one, {K, Kj}}, {-one, {Kj, K}}}});
            int a = pairing(i, j);
            p.relations.push_back({"K_" + si + " E_" + sj,
                                   {{one, {K, Ej}}, {-RatFunc::q_power(a, nsym), {Ej, K}}}});
            p.relations.push_back({"K_" + si + " F_" + sj,
                                   {{one, {K, Fj}}, {-RatFunc::q_power(-a, nsym), {Fj, K}}}});
            // [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1)
            Presentation::Relation ef{"[E_" + si + ", F_" + sj + "]",
                                      {{one, {E, Fj}}, {-one, {Fj, E}}}};
            if (i == j) {
                ef.terms.push_back({-qden, {K}});
                ef.terms.push_back({qden, {Ki}});
            }
            p.relations.push_back(std::move(ef));
            if (i < j) {
                if (a == 0) {
                    p.relations.push_back({"E_" + si + " E_" + sj + " commute",
                                           {{one, {E, Ej}}, {-one, {Ej, E}}}});
                    p.relations.push_back({"F_" + si + " F_" + sj + " commute",
                                           {{one, {F, Fj}}, {-one, {Fj, F}}}});
                }
            }
            if (a == -1) {
                // quantum Serre: X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 = 0
                p.relations.push_back({"Serre E_" + si + " E_" + sj,
                                       {{one, {E, E, Ej}},
                                        {-two_q, {E, Ej, E}},
                                        {one, {Ej, E, E}}}});
                p.relations.push_back({"Serre F_" + si + " F_" + sj,
                                       {{one, {F, F, Fj}},
                                        {-two_q, {F, Fj, F}},
                                        {one, {Fj, F, F}}}});
            }
        }
    }
    return p;
}

// Assignment of generator images; elements act on a shared variable context.
struct RepAssignment {
    int d = 1;
    std::map<Gen, WeylOp> images;

    const WeylOp& image(const Gen& g) const {
        auto it = images.find(g);
        if (it == images.end())
            throw DomainError("RepAssignment: missing generator " + g.name());
        return it->second;
    }
};

struct RelationReport {
    struct Failure {
        std::string relation;
        WeylOp residue;
    };
    bool passed = true;
    std::vector<Failure> failures;
};

inline WeylOp eval_word(const RepAssignment& rep, const std::vector<Gen>& word, int nvars,
                        int nsym) {
    WeylOp r = WeylOp::identity(nvars, nsym);
    for (const Gen& g : word) r = op_mul(r, rep.image(g));
    return r;
}

inline RelationReport check_relations(const RepAssignment& rep, const Presentation& pres) {
    RelationReport report;
    if (rep.images.empty()) throw DomainError("check_relations: empty assignment");
    int nvars = rep.images.begin()->second.nvars();
    int nsym = rep.images.begin()->second.nsym();
    for (const Gen& g : pres.generators()) (void)rep.image(g);
    for (const auto& rel : pres.relations) {
        WeylOp acc(nvars, nsym);
        for (const auto& [coeff, word] : rel.terms)
            acc += eval_word(rep, word, nvars, nsym).scaled(coeff.lifted(nsym));
        if (!acc.is_zero()) {
            report.passed = false;
            report.failures.push_back({rel.name, acc});
        }
    }
    return report;
}

// All cross commutators [A_i, B_j] between two commuting families.
inline RelationReport check_commutant(const RepAssignment& a, const RepAssignment& b) {
    RelationReport report;
    for (const auto& [ga, A] : a.images)
        for (const auto& [gb, B] : b.images) {
            WeylOp c = commutator(A, B);
            if (!c.is_zero()) {
                report.passed = false;
                report.failures.push_back({"[" + ga.name() + ", " + gb.name() + "]", c});
            }
        }
    return report;
}

// Element of U_{q^d}(sl2) in the PBW basis F^a K^b E^c.
class PBWElem {
public:
    using Key = std::tuple<int, int, int>; // (a, b, c) exponents of F, K, E
    using TermMap = std::map<Key, RatFunc>;

    explicit PBWElem(int d = 1, int nsym = 0) : d_(d), nsym_(nsym) {}

    static PBWElem term(int d, int a, int b, int c, const RatFunc& coeff) {
        PBWElem r(d, coeff.nsym());
        r.add_term({a, b, c}, coeff);
        return r;
    }
    static PBWElem one(int d = 1, int nsym = 0) {
        return term(d, 0, 0, 0, RatFunc::one(nsym));
    }
    static PBWElem E(int d = 1, int nsym = 0) { return term(d, 0, 0, 1, RatFunc::one(nsym)); }
    static PBWElem F(int d = 1, int nsym = 0) { return term(d, 1, 0, 0, RatFunc::one(nsym)); }
    static PBWElem K(int d = 1, int nsym = 0, int pow = 1) {
        return term(d, 0, pow, 0, RatFunc::one(nsym));
    }

    int d() const { return d_; }
    int nsym() const { return nsym_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const RatFunc& c) {
        auto [a, b, e] = k;
        if (a < 0 || e < 0) throw DomainError("PBWElem: negative E/F power");
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PBWElem operator-() const {
        PBWElem r(d_, nsym_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    PBWElem& operator+=(const PBWElem& o) {
        check_base(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    PBWElem& operator-=(const PBWElem& o) {
        check_base(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend PBWElem operator+(PBWElem a, const PBWElem& b) { return a += b; }
    friend PBWElem operator-(PBWElem a, const PBWElem& b) { return a -= b; }

    PBWElem scaled(const RatFunc& c) const {
        PBWElem r(d_, std::max(nsym_, c.nsym()));
        for (const auto& [k, coef] : terms_)
            r.add_term(k, coef.lifted(r.nsym_) * c.lifted(r.nsym_));
        return r;
    }

    bool operator==(const PBWElem& o) const { return d_ == o.d_ && terms_ == o.terms_; }
    bool operator!=(const PBWElem& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& sym_names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            auto [a, b, e] = k;
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string(sym_names) + ")";
            if (a) out += "*F^" + std::to_string(a);
            if (b) out += "*K^" + std::to_string(b);
            if (e) out += "*E^" + std::to_string(e);
        }
        return out;
    }

private:
    void check_base(const PBWElem& o) const {
        if (d_ != o.d_) throw DomainError("PBWElem: base mismatch");
    }

    int d_, nsym_;
    TermMap terms_;
};

namespace pbw_detail {

using Key = PBWElem::Key;
using Terms = std::vector<std::pair<Key, RatFunc>>;

inline Terms right_E(const Key& k, int, int nsym) {
    auto [a, b, c] = k;
    return {{{a, b, c + 1}, RatFunc::one(nsym)}};
}

// E^c K^s = q^{-2dsc} K^s E^c
inline Terms right_K(const Key& k, int sign, int d, int nsym) {
    auto [a, b, c] = k;
    return {{{a, b + sign, c}, RatFunc::q_power(-2 * d * sign * c, nsym)}};
}

// E F = F E + (K - K^-1)/(q^d - q^-d);  K^b F = q^{-2db} F K^b
inline Terms right_F(const Key& k, int d, int nsym) {
    auto [a, b, c] = k;
    if (c == 0) return {{{a + 1, b, 0}, RatFunc::q_power(-2 * d * b, nsym)}};
    Terms out;
    RatFunc qden = (RatFunc::q_power(d, nsym) - RatFunc::q_power(-d, nsym)).inverse();
    for (const auto& [kk, cc] : right_F({a, b, c - 1}, d, nsym))
        for (const auto& [k2, c2] : right_E(kk, d, nsym)) out.emplace_back(k2, cc * c2);
    for (const auto& [kk, cc] : right_K({a, b, c - 1}, 1, d, nsym))
        out.emplace_back(kk, cc * qden);
    for (const auto& [kk, cc] : right_K({a, b, c - 1}, -1, d, nsym))
        out.emplace_back(kk, -cc * qden);
    return out;
}

} // namespace pbw_detail

inline PBWElem pbw_mul(const PBWElem& A, const PBWElem& B) {
    if (A.d() != B.d()) throw DomainError("pbw_mul: base mismatch");
    int d = A.d();
    int nsym = std::max(A.nsym(), B.nsym());
    PBWElem r(d, nsym);
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            auto [a2, b2, c2] = kb;
            pbw_detail::Terms acc{{ka, ca.lifted(nsym) * cb.lifted(nsym)}};
            auto fold = [&acc, d, nsym](auto&& step) {
                pbw_detail::Terms next;
                for (const auto& [k, c] : acc)
                    for (const auto& [k2, c2] : step(k)) next.emplace_back(k2, c * c2);
                acc = std::move(next);
            };
            for (int i = 0; i < a2; ++i)
                fold([d, nsym](const pbw_detail::Key& k) {
                    return pbw_detail::right_F(k, d, nsym);
                });
            int sign = b2 >= 0 ? 1 : -1;
            for (int i = 0; i < b2 * sign; ++i)
                fold([sign, d, nsym](const pbw_detail::Key& k) {
                    return pbw_detail::right_K(k, sign, d, nsym);
                });
            for (int i = 0; i < c2; ++i)
                fold([d, nsym](const pbw_detail::Key& k) {
                    return pbw_detail::right_E(k, d, nsym);
                });
            for (const auto& [k, c] : acc) r.add_term(k, c);
        }
    }
    return r;
}

inline PBWElem pbw_commutator(const PBWElem& A, const PBWElem& B) {
    return pbw_mul(A, B) - pbw_mul(B, A);
}

inline PBWElem pbw_pow(const PBWElem& A, int n) {
    PBWElem r = PBWElem::one(A.d(), A.nsym());
    for (int i = 0; i < n; ++i) r = pbw_mul(r, A);
    return r;
}

// Cas = F E + (q^d K + q^-d K^-1)/(q^d - q^-d)^2
inline PBWElem casimir(int d = 1, int nsym = 0) {
    RatFunc den2 = (RatFunc::q_power(d, nsym) - RatFunc::q_power(-d, nsym)).pow(-2);
    PBWElem r(d, nsym);
    r.add_term({1, 0, 1}, RatFunc::one(nsym));
    r.add_term({0, 1, 0}, RatFunc::q_power(d, nsym) * den2);
    r.add_term({0, -1, 0}, RatFunc::q_power(-d, nsym) * den2);
    return r;
}

// c_lambda = (q^{lambda+1} + q^{-lambda-1})/(q - q^{-1})^2 with q^lambda read
// off a WeightExpr (t_exp, q_exp agree with qnum_gen's encoding at d = 1).
inline RatFunc casimir_eigenvalue(const WeightExpr& w) {
    if (w.d != 1) throw DomainError("casimir_eigenvalue: base-q weights only");
    int nsym = w.nsym;
    LaurentPoly num(nsym);
    ExpVec e(nsym + 1, 0);
    e[0] = w.q_exp + 1;
    if (w.t_exp != 0) e[1 + w.sym] = w.t_exp;
    num.add_term(e, 1);
    for (int& x : e) x = -x;
    num.add_term(e, 1);
    RatFunc den2 = (RatFunc::q_power(1, nsym) - RatFunc::q_power(-1, nsym)).pow(2);
    return RatFunc(num) / den2;
}

// Tensor product representation of U_{q^d}(sl2) through the coproduct
// E -> E (x) K + 1 (x) E, K -> K (x) K, F -> F (x) 1 + K^-1 (x) F.
// The factors live on separate variable contexts, concatenated.
inline RepAssignment tensor_rep(const RepAssignment& rep1, const RepAssignment& rep2) {
    if (rep1.d != rep2.d) throw DomainError("tensor_rep: base mismatch");
    Gen E{GenKind::E, 0}, F{GenKind::F, 0}, K{GenKind::K, 0}, Ki{GenKind::Kinv, 0};
    int n1 = rep1.image(E).nvars(), n2 = rep2.image(E).nvars();
    int nv = n1 + n2;
    std::vector<int> m1(n1), m2(n2);
    for (int i = 0; i < n1; ++i) m1[i] = i;
    for (int i = 0; i < n2; ++i) m2[i] = n1 + i;
    auto lift1 = [&](const Gen& g) { return rep1.image(g).embedded(nv, m1); };
    auto lift2 = [&](const Gen& g) { return rep2.image(g).embedded(nv, m2); };
    RepAssignment out;
    out.d = rep1.d;
    out.images[E] = op_mul(lift1(E), lift2(K)) + lift2(E);
    out.images[F] = lift1(F) + op_mul(lift1(Ki), lift2(F));
    out.images[K] = op_mul(lift1(K), lift2(K));
    out.images[Ki] = op_mul(lift1(Ki), lift2(Ki));
    return out;
}

// Truncated formal character: coefficient n is the dimension of the weight
// space at offset -2n below the labelled top weight.
struct FormalChar {
    std::string top;
    std::vector<long> c;
};

inline FormalChar char_verma(const std::string& top, int depth) {
    if (depth < 0) throw DomainError("char_verma: negative depth");
    FormalChar ch;
    ch.top = top;
    ch.c.assign(depth + 1, 1);
    return ch;
}

inline FormalChar char_add(const FormalChar& a, const FormalChar& b) {
    if (a.top != b.top) throw DomainError("char_add: mismatched top weights");
    FormalChar r;
    r.top = a.top;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

// Add b starting shift steps below a's top (used to align a second Verma
// character at weight top - 2*shift).
inline FormalChar char_add_shifted(const FormalChar& a, const FormalChar& b, int shift) {
    FormalChar r = a;
    if (r.c.size() < b.c.size() + shift) r.c.resize(b.c.size() + shift, 0);
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] += b.c[i];
    return r;
}

// Convolution: character of the tensor of two highest-weight modules whose
// weight multiplicities are the given sequences.
inline FormalChar char_tensor(const FormalChar& a, const FormalChar& b, int depth) {
    FormalChar r;
    r.top = a.top + "+" + b.top;
    r.c.assign(depth + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (i + j <= static_cast<std::size_t>(depth)) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

inline bool char_equal(const FormalChar& a, const FormalChar& b, int depth) {
    if (a.top != b.top) throw DomainError("char_equal: mismatched top weights");
    if (static_cast<int>(a.c.size()) <= depth || static_cast<int>(b.c.size()) <= depth)
        throw DomainError("char_equal: depth exceeds truncation");
    for (int i = 0; i <= depth; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

} // namespace qdual
