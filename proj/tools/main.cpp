// Command-line front end: wires the library modules into reproducible
// verification runs.  Exit codes: 0 all certificates pass, 1 an invariant
// failed (the report carries the residue), 2 bad usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qdual/howe.hpp"
#include "qdual/verma.hpp"

using ojson = nlohmann::ordered_json;
using namespace qdual;

namespace {

struct Certificate {
    std::string id;
    bool pass = true;
    std::string residue; // empty iff pass
};

struct Report {
    std::string command;
    std::string params; // canonical parameter string, hashed into the report
    std::uint64_t seed = 0;
    std::vector<Certificate> certs;
    ojson result = ojson::object();

    void cert(const std::string& id, bool ok, const std::string& residue = "") {
        certs.push_back({id, ok, ok ? std::string() : residue});
    }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return s;
}

ojson laurent_json(const LaurentPoly& p) {
    ojson terms = ojson::array();
    for (const auto& [e, c] : p.terms()) {
        ojson t;
        t["c"] = c.get_str();
        t["e"] = e;
        terms.push_back(std::move(t));
    }
    return terms;
}

ojson rat_json(const RatFunc& r) {
    ojson o;
    o["num"] = laurent_json(r.num());
    o["den"] = laurent_json(r.den());
    return o;
}

// Report emission.  Timing is printed in text mode only: the JSON report is
// required to be byte-identical for identical config and seed.
int emit(Report& rep, bool as_json, double ms) {
    std::stable_sort(rep.certs.begin(), rep.certs.end(),
                     [](const Certificate& a, const Certificate& b) { return a.id < b.id; });
    int npass = 0, nfail = 0;
    for (const Certificate& c : rep.certs) (c.pass ? npass : nfail)++;
    std::uint64_t hash = fnv1a(rep.command + "|" + rep.params + "|" + std::to_string(rep.seed));
    if (as_json) {
        ojson out;
        out["schema"] = "qdual-report/1";
        out["command"] = rep.command;
        out["params"] = rep.params;
        out["seed"] = rep.seed;
        out["input_hash"] = hex64(hash);
        ojson certs = ojson::array();
        for (const Certificate& c : rep.certs) {
            ojson jc;
            jc["id"] = c.id;
            jc["status"] = c.pass ? "pass" : "fail";
            if (!c.pass) jc["residue"] = c.residue;
            certs.push_back(std::move(jc));
        }
        out["certificates"] = std::move(certs);
        out["result"] = rep.result;
        out["summary"] = ojson{{"pass", npass}, {"fail", nfail}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "== " << rep.command;
        if (!rep.params.empty()) std::cout << " [" << rep.params << "]";
        std::cout << "\n";
        for (const Certificate& c : rep.certs) {
            if (c.pass)
                std::cout << "PASS " << c.id << "\n";
            else
                std::cout << "FAIL " << c.id << ": " << c.residue << "\n";
        }
        if (!rep.result.empty()) std::cout << rep.result.dump(2) << "\n";
        std::cout << "summary: pass=" << npass << " fail=" << nfail << " hash=" << hex64(hash)
                  << " time=" << ms << "ms\n";
    }
    return nfail ? 1 : 0;
}

std::vector<std::string> duality_var_names(const DualityContext& ctx) {
    if (ctx.which == Duality::sl2_triple) return {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 1; i <= ctx.n; ++i) v.push_back("x" + std::to_string(i));
    for (int i = 1; i <= ctx.n; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

void relation_certs(Report& rep, const std::string& tag, const RelationReport& r,
                    const std::vector<std::string>& names) {
    if (r.passed) {
        rep.cert(tag, true);
        return;
    }
    for (const auto& f : r.failures)
        rep.cert(tag + ":" + f.relation, false, f.residue.to_string(names));
}

Duality parse_case(const std::string& s) {
    if (s == "sl2") return Duality::sl2_triple;
    if (s == "sln") return Duality::sln;
    throw DomainError("unknown duality case: " + s);
}

// weight syntax: "generic", a nonnegative integer literal, or "sum=N"
bool weight_is_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(s);
    return true;
}

WeightPair parse_pair(const std::string& lam, const std::string& mu) {
    if (lam.rfind("sum=", 0) == 0) {
        if (!mu.empty() && mu != "generic")
            throw DomainError("sum=N fixes both weights; --mu must be omitted or generic");
        return make_sum_integral_pair(std::stoi(lam.substr(4)));
    }
    int li = 0, mi = 0;
    bool lint = weight_is_int(lam, li), mint = weight_is_int(mu, mi);
    if (lint && mint) return make_integral_pair(li, mi);
    if (lam == "generic" && mu == "generic") return make_generic_pair();
    throw DomainError("weight pair must be generic/generic, integer/integer, or sum=N");
}

std::string mode_name(PairMode m) {
    switch (m) {
    case PairMode::both_generic: return "both_generic";
    case PairMode::sum_integral: return "sum_integral";
    default: return "both_integral";
    }
}

ojson set_json(const std::set<int>& s) {
    ojson a = ojson::array();
    for (int v : s) a.push_back(v);
    return a;
}

ojson plan_json(const DecompositionPlan& plan, int depth) {
    ojson o;
    o["case"] = mode_name(plan.mode);
    o["sum_integral"] = plan.sum_is_integral;
    if (plan.sum_is_integral) o["sum"] = plan.sum;
    o["S"] = set_json(plan.S);
    o["Sc"] = set_json(plan.Sc);
    o["T"] = set_json(plan.T);
    o["Tc"] = set_json(plan.Tc);
    o["rule"] = "n in S -> P(sum-2n); n in Sc -> none; all other n -> M(lambda+mu-2n)";
    ojson summands = ojson::array();
    for (int n = 0; n <= depth; ++n) {
        if (plan.Sc.count(n)) continue;
        summands.push_back(ojson{{"n", n}, {"type", plan.is_P(n) ? "P" : "M"}});
    }
    o["summands"] = std::move(summands);
    return o;
}

// f == c * g for a nonzero scalar c, term supports identical
bool nc_proportional(const NCPoly& f, const NCPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    if (ft.size() != gt.size()) return false;
    RatFunc ratio = ft.begin()->second / gt.begin()->second;
    return f == g.scaled(ratio);
}

void run_scalars(Report& rep, const std::string& op, long a, long b, int base) {
    RatFunc v;
    if (op == "qint")
        v = qint(a, base);
    else if (op == "qfact")
        v = qfact(a, base);
    else if (op == "qbinom")
        v = qbinom(a, b, base);
    else
        v = qpoch(plain_weight(static_cast<int>(a), base), b);
    rep.result["value"] = v.to_string();
    rep.result["rational_function"] = rat_json(v);
}

void run_ring_center(Report& rep, const RingSpec& ring, int degree) {
    std::vector<NCPoly> basis = center_basis(ring, degree);
    ojson elems = ojson::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        rep.cert("center:element:" + std::to_string(i), is_central(ring, basis[i]),
                 basis[i].to_string(ring));
        elems.push_back(basis[i].to_string(ring));
    }
    rep.result["count"] = basis.size();
    rep.result["elements"] = std::move(elems);
}

void run_ring_assoc(Report& rep, const RingSpec& ring, int degree, int trials) {
    std::mt19937_64 rng(rep.seed);
    auto random_poly = [&] {
        long d = static_cast<long>(rng() % static_cast<std::uint64_t>(degree + 1));
        NCMono m(static_cast<std::size_t>(ring.nvars), 0);
        for (long i = 0; i < d; ++i) m[rng() % static_cast<std::uint64_t>(ring.nvars)]++;
        return NCPoly::monomial(ring.nvars, m, RatFunc::one());
    };
    bool ok = true;
    std::string residue;
    for (int t = 0; t < trials && ok; ++t) {
        NCPoly f = random_poly(), g = random_poly(), h = random_poly();
        if (mul(ring, mul(ring, f, g), h) != mul(ring, f, mul(ring, g, h))) {
            ok = false;
            residue = "trial " + std::to_string(t) + ": (" + f.to_string(ring) + ")(" +
                      g.to_string(ring) + ")(" + h.to_string(ring) + ")";
        }
    }
    rep.cert("assoc:trials=" + std::to_string(trials), ok, residue);
    rep.result["trials"] = trials;
}

void run_weyl_verify(Report& rep, int base) {
    const int nv = 2;
    std::vector<WeylOp> gens;
    for (int v = 0; v < nv; ++v) {
        gens.push_back(WeylOp::x(nv, v));
        gens.push_back(WeylOp::d(nv, v, base));
        gens.push_back(WeylOp::gamma(nv, v, 1));
        gens.push_back(WeylOp::gamma(nv, v, -1));
    }
    // normal-form multiplication agrees with operator composition on monomials
    bool ok = true;
    std::string residue;
    for (std::size_t i = 0; i < gens.size() && ok; ++i)
        for (std::size_t j = 0; j < gens.size() && ok; ++j) {
            WeylOp ab = op_mul(gens[i], gens[j]);
            for (int p = 0; p <= 4 && ok; ++p)
                for (int r = 0; r <= 4 && ok; ++r) {
                    CommPoly f = CommPoly::monomial(nv, {p, r}, RatFunc::one());
                    if (apply(ab, f) != apply(gens[i], apply(gens[j], f))) {
                        ok = false;
                        residue = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") on x^" + std::to_string(p) + " y^" + std::to_string(r);
                    }
                }
        }
    rep.cert("compose-vs-action", ok, residue);
    rep.cert("gamma-inverse",
             op_mul(WeylOp::gamma(nv, 0, 1), WeylOp::gamma(nv, 0, -1)) == WeylOp::identity(nv));
    if (base == 1) {
        bool hom = true;
        std::string hres;
        for (std::size_t i = 0; i < gens.size() && hom; ++i)
            for (std::size_t j = 0; j < gens.size() && hom; ++j) {
                WeylOp lhs = fourier(op_mul(gens[i], gens[j]));
                WeylOp rhs = op_mul(fourier(gens[i]), fourier(gens[j]));
                if (lhs != rhs) {
                    hom = false;
                    hres = (lhs - rhs).to_string();
                }
            }
        rep.cert("fourier-homomorphism", hom, hres);
        bool order4 = true;
        for (const WeylOp& g : gens) {
            WeylOp f = fourier(fourier(fourier(fourier(g))));
            if (f != g) order4 = false;
        }
        rep.cert("fourier-order-four", order4);
    }
}

void run_qgroup_powers(Report& rep, int smax, int base) {
    PBWElem E = PBWElem::E(base), F = PBWElem::F(base), K = PBWElem::K(base),
            Ki = PBWElem::K(base, 0, -1);
    RatFunc qden = (RatFunc::q_power(base) - RatFunc::q_power(-base)).inverse();
    for (int s = 1; s <= smax; ++s) {
        PBWElem lhs = pbw_commutator(pbw_pow(E, s), F);
        PBWElem rhs = pbw_mul(pbw_pow(E, s - 1), K.scaled(RatFunc::q_power(base * (s - 1))) -
                                                     Ki.scaled(RatFunc::q_power(base * (1 - s))))
                          .scaled(qint(s, base) * qden);
        rep.cert("power-commutator:[E^s,F]:s=" + std::to_string(s), lhs == rhs,
                 (lhs - rhs).to_string());
        PBWElem lhs2 = pbw_commutator(E, pbw_pow(F, s));
        PBWElem rhs2 = pbw_mul(pbw_pow(F, s - 1), K.scaled(RatFunc::q_power(base * (1 - s))) -
                                                      Ki.scaled(RatFunc::q_power(base * (s - 1))))
                           .scaled(qint(s, base) * qden);
        rep.cert("power-commutator:[E,F^s]:s=" + std::to_string(s), lhs2 == rhs2,
                 (lhs2 - rhs2).to_string());
    }
}

void run_qgroup_casimir(Report& rep, int base) {
    PBWElem cas = casimir(base);
    rep.cert("casimir-central:E", pbw_commutator(cas, PBWElem::E(base)).is_zero());
    rep.cert("casimir-central:F", pbw_commutator(cas, PBWElem::F(base)).is_zero());
    rep.cert("casimir-central:K", pbw_commutator(cas, PBWElem::K(base)).is_zero());
    rep.result["casimir"] = cas.to_string();
}

void run_howe_verify(Report& rep, Duality which, int n) {
    DualityContext ctx =
        which == Duality::sl2_triple ? howe_detail::build_sl2_triple() : howe_detail::build_sln(n);
    std::vector<std::string> names = duality_var_names(ctx);
    relation_certs(rep, "relations:" + ctx.sigma_pres.label + ":sigma",
                   check_relations(ctx.sigma, ctx.sigma_pres), names);
    relation_certs(rep, "relations:" + ctx.pi_pres.label + ":pi",
                   check_relations(ctx.pi, ctx.pi_pres), names);
    relation_certs(rep, "commutant", check_commutant(ctx.sigma, ctx.pi), names);
    rep.result["sigma_presentation"] = ctx.sigma_pres.label;
    rep.result["pi_presentation"] = ctx.pi_pres.label;
    rep.result["variables"] = ctx.nvars;
}

void run_howe_harmonics(Report& rep, const DualityContext& ctx, int amax, int bmax) {
    ojson dims = ojson::array();
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= (ctx.which == Duality::sl2_triple ? 0 : bmax); ++b) {
            HarmonicLabel l{a, b};
            std::string id = "harmonic-dim:a=" + std::to_string(a) +
                             (ctx.which == Duality::sln ? ",b=" + std::to_string(b) : "");
            // harmonic_basis cross-checks the kernel against the closed
            // dimension formula and throws on mismatch
            try {
                HarmonicSpace h = harmonic_basis(ctx, l);
                rep.cert(id, true);
                dims.push_back(ojson{{"a", a}, {"b", b}, {"dim", h.basis.size()}});
            } catch (const StructureError& e) {
                rep.cert(id, false, e.what());
            }
        }
    rep.result["dimensions"] = std::move(dims);
}

void run_howe_fischer(Report& rep, const DualityContext& ctx, int degree) {
    for (int d = 0; d <= degree; ++d) {
        std::vector<NCMono> monos;
        monomials_of_degree(ctx.nvars, d, monos);
        bool ok = true;
        std::string residue;
        for (const NCMono& m : monos) {
            CommPoly f = CommPoly::monomial(ctx.nvars, m, RatFunc::one());
            if (fischer_recompose(ctx, fischer_decompose(ctx, f)) != f) {
                ok = false;
                residue = f.to_string(duality_var_names(ctx));
                break;
            }
        }
        rep.cert("fischer-roundtrip:deg=" + std::to_string(d), ok, residue);
    }
    rep.result["max_degree"] = degree;
}

void run_howe_bernstein(Report& rep, const DualityContext& ctx, int smax) {
    ojson vals = ojson::array();
    for (int s = 0; s <= smax; ++s) {
        RatFunc b = bernstein_check(ctx, s);
        RatFunc expect = ctx.which == Duality::sl2_triple
                             ? qint(s + 1, 2) * qnum_gen(0, 2 * s + 3, 2)
                             : qint(s + 1) * qint(s + ctx.n);
        rep.cert("bernstein:s=" + std::to_string(s), b == expect, b.to_string());
        vals.push_back(b.to_string());
    }
    rep.result["b_values"] = std::move(vals);
}

void run_howe_invariants(Report& rep, const DualityContext& ctx, int degree) {
    std::vector<NCPoly> basis = invariants_basis(ctx, degree);
    rep.cert("invariants:count", static_cast<int>(basis.size()) == degree / 2 + 1,
             "got " + std::to_string(basis.size()));
    NCPoly p = p_nc(ctx);
    NCPoly pj = NCPoly::constant(ctx.nvars, RatFunc::one());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        rep.cert("invariants:p-power:j=" + std::to_string(j), nc_proportional(basis[j], pj),
                 basis[j].to_string(ctx.ring));
        pj = mul(ctx.ring, pj, p);
    }
    rep.result["quadric"] = p.to_string(ctx.ring);
}

void run_verma_singular(Report& rep, const WeightPair& p, int nmax) {
    DecompositionPlan plan = classify(p);
    RepAssignment act = tensor_action(p);
    ojson dims = ojson::array();
    for (int n = 0; n <= nmax; ++n) {
        SingularSpace s = singular_vectors(act, n);
        rep.cert("singular:dim:n=" + std::to_string(n),
                 static_cast<int>(s.basis.size()) == plan.predicted_singular_dim(n),
                 "got " + std::to_string(s.basis.size()) + ", predicted " +
                     std::to_string(plan.predicted_singular_dim(n)));
        bool killed = true;
        for (const CommPoly& f : s.basis)
            if (!apply(act.image({GenKind::E, 0}), f).is_zero()) killed = false;
        rep.cert("singular:E-kernel:n=" + std::to_string(n), killed);
        dims.push_back(s.basis.size());
    }
    rep.result["dimensions"] = std::move(dims);
}

void run_verma_plan(Report& rep, const WeightPair& p, int depth, bool with_plan) {
    DecompositionPlan plan = classify(p);
    PlanReport r = verify_plan(p, plan, depth);
    if (r.passed) {
        rep.cert("plan-verified:depth=" + std::to_string(depth), true);
    } else {
        for (const std::string& f : r.failures) rep.cert("plan-verified", false, f);
    }
    if (with_plan) rep.result = plan_json(plan, depth);
}

void run_verma_casimir_pair(Report& rep, const WeightPair& p, int depth) {
    CasimirReport r = casimir_diag(p, depth);
    ojson table = ojson::array();
    for (int n = 0; n <= depth; ++n) {
        bool ok = true;
        ojson row = ojson::array();
        for (const CasimirCell& c : r.slices[static_cast<std::size_t>(n)]) {
            if (c.eigen_dim < 1 || c.eigen_dim > c.gen_dim || c.gen_dim > 2) ok = false;
            row.push_back(ojson{{"j", c.j}, {"eigen", c.eigen_dim}, {"gen", c.gen_dim}});
        }
        rep.cert("casimir:slice:n=" + std::to_string(n), ok);
        table.push_back(std::move(row));
    }
    rep.result["slices"] = std::move(table);
}

void run_verma_casimir_single(Report& rep, const std::string& lam, int depth) {
    int li = 0;
    WeightExpr w =
        weight_is_int(lam, li) ? plain_weight(li, 1, 0) : WeightExpr{1, 0, 1, 0, 1};
    if (lam != "generic" && !weight_is_int(lam, li))
        throw DomainError("single-module weight must be generic or an integer");
    rep.cert("casimir-scalar:depth=" + std::to_string(depth), casimir_diag(w, depth));
    rep.result["eigenvalue"] = casimir_eigenvalue(w).to_string();
}

void run_verma_pqmodule(Report& rep, int lam_int, int depth) {
    PqModule m = pq_module(lam_int, depth);
    PlanReport r = check_pq_module(m);
    if (r.passed) {
        rep.cert("pq-relations", true);
    } else {
        for (const std::string& f : r.failures) rep.cert("pq-relations", false, f);
    }
    rep.cert("embedding", embedding_check(lam_int));
    rep.result["lambda_int"] = lam_int;
    rep.result["depth"] = depth;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification runs for the quantum duality library"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    Report rep;
    std::function<void()> runner;

    // scalars: q-integer arithmetic
    CLI::App* scalars = app.add_subcommand("scalars", "q-integer arithmetic");
    scalars->require_subcommand(1);
    static const struct {
        const char* name;
        int arity;
    } scalar_ops[] = {{"qint", 1}, {"qfact", 1}, {"qbinom", 2}, {"qpoch", 2}};
    for (const auto& op : scalar_ops) {
        CLI::App* sub = scalars->add_subcommand(op.name);
        auto a = std::make_shared<long>(0);
        auto b = std::make_shared<long>(0);
        auto base = std::make_shared<int>(1);
        sub->add_option("a", *a)->required();
        if (op.arity == 2) sub->add_option("b", *b)->required();
        sub->add_option("--base", *base, "relations live over q^base");
        std::string name = op.name;
        sub->callback([&, a, b, base, name] {
            rep.command = "scalars " + name;
            rep.params = "a=" + std::to_string(*a) + ",b=" + std::to_string(*b) +
                         ",base=" + std::to_string(*base);
            runner = [&, a, b, base, name] { run_scalars(rep, name, *a, *b, *base); };
        });
    }

    // ring: noncommutative polynomial rings
    CLI::App* ring_cmd = app.add_subcommand("ring", "noncommutative polynomial rings");
    ring_cmd->require_subcommand(1);
    auto ring_name = std::make_shared<std::string>("xyz");
    auto ring_n = std::make_shared<int>(2);
    auto ring_deg = std::make_shared<int>(4);
    auto ring_trials = std::make_shared<int>(200);
    for (const char* sub_name : {"center", "assoc"}) {
        CLI::App* sub = ring_cmd->add_subcommand(sub_name);
        sub->add_option("--ring", *ring_name, "xyz or xy")
            ->check(CLI::IsMember({"xyz", "xy"}));
        sub->add_option("--n", *ring_n, "rank parameter for the xy family");
        sub->add_option("--degree", *ring_deg, "total degree bound")->check(CLI::NonNegativeNumber);
        bool is_assoc = std::string(sub_name) == "assoc";
        if (is_assoc) {
            sub->add_option("--trials", *ring_trials)->check(CLI::PositiveNumber);
            sub->add_option("--seed", rep.seed);
        }
        sub->callback([&, is_assoc] {
            RingSpec r = *ring_name == "xyz" ? make_ring(RingKind::xyz_sl2)
                                             : make_ring(RingKind::xy_n, *ring_n);
            rep.command = std::string("ring ") + (is_assoc ? "assoc" : "center");
            rep.params = "ring=" + *ring_name + ",n=" + std::to_string(*ring_n) +
                         ",degree=" + std::to_string(*ring_deg) +
                         (is_assoc ? ",trials=" + std::to_string(*ring_trials) : "");
            runner = [&, r, is_assoc] {
                if (is_assoc)
                    run_ring_assoc(rep, r, *ring_deg, *ring_trials);
                else
                    run_ring_center(rep, r, *ring_deg);
            };
        });
    }

    // weyl: quantum Weyl algebra
    CLI::App* weyl = app.add_subcommand("weyl", "quantum Weyl algebra");
    weyl->require_subcommand(1);
    CLI::App* weyl_verify = weyl->add_subcommand("verify");
    auto weyl_base = std::make_shared<int>(1);
    weyl_verify->add_option("--base", *weyl_base, "difference-operator base exponent")
        ->check(CLI::PositiveNumber);
    weyl_verify->callback([&] {
        rep.command = "weyl verify";
        rep.params = "base=" + std::to_string(*weyl_base);
        runner = [&] { run_weyl_verify(rep, *weyl_base); };
    });

    // qgroup: PBW arithmetic
    CLI::App* qgroup = app.add_subcommand("qgroup", "quantized enveloping algebra arithmetic");
    qgroup->require_subcommand(1);
    auto qg_smax = std::make_shared<int>(6);
    auto qg_base = std::make_shared<int>(1);
    for (const char* sub_name : {"powers", "casimir"}) {
        CLI::App* sub = qgroup->add_subcommand(sub_name);
        bool powers = std::string(sub_name) == "powers";
        if (powers) sub->add_option("--smax", *qg_smax)->check(CLI::PositiveNumber);
        sub->add_option("--base", *qg_base)->check(CLI::PositiveNumber);
        sub->callback([&, powers] {
            rep.command = std::string("qgroup ") + (powers ? "powers" : "casimir");
            rep.params = (powers ? "smax=" + std::to_string(*qg_smax) + "," : std::string()) +
                         "base=" + std::to_string(*qg_base);
            runner = [&, powers] {
                if (powers)
                    run_qgroup_powers(rep, *qg_smax, *qg_base);
                else
                    run_qgroup_casimir(rep, *qg_base);
            };
        });
    }

    // howe: duality contexts
    CLI::App* howe = app.add_subcommand("howe", "oscillator duality verification");
    howe->require_subcommand(1);
    auto howe_case = std::make_shared<std::string>("sl2");
    auto howe_n = std::make_shared<int>(2);
    auto howe_a = std::make_shared<int>(3);
    auto howe_b = std::make_shared<int>(3);
    auto howe_deg = std::make_shared<int>(4);
    auto howe_smax = std::make_shared<int>(4);
    for (const char* sub_name : {"verify", "harmonics", "fischer", "bernstein", "invariants"}) {
        CLI::App* sub = howe->add_subcommand(sub_name);
        sub->add_option("--case", *howe_case)->check(CLI::IsMember({"sl2", "sln"}));
        sub->add_option("--n", *howe_n, "rank of the sl_n side")->check(CLI::Range(2, 6));
        std::string name = sub_name;
        if (name == "harmonics") {
            sub->add_option("--a", *howe_a, "first degree bound")->check(CLI::NonNegativeNumber);
            sub->add_option("--b", *howe_b, "second degree bound")->check(CLI::NonNegativeNumber);
        }
        if (name == "fischer" || name == "invariants")
            sub->add_option("--degree", *howe_deg)->check(CLI::NonNegativeNumber);
        if (name == "bernstein") sub->add_option("--smax", *howe_smax)->check(CLI::NonNegativeNumber);
        sub->callback([&, name] {
            rep.command = "howe " + name;
            rep.params = "case=" + *howe_case + ",n=" + std::to_string(*howe_n);
            if (name == "harmonics")
                rep.params += ",a=" + std::to_string(*howe_a) + ",b=" + std::to_string(*howe_b);
            if (name == "fischer" || name == "invariants")
                rep.params += ",degree=" + std::to_string(*howe_deg);
            if (name == "bernstein") rep.params += ",smax=" + std::to_string(*howe_smax);
            runner = [&, name] {
                Duality which = parse_case(*howe_case);
                if (name == "verify") {
                    run_howe_verify(rep, which, *howe_n);
                    return;
                }
                DualityContext ctx = build_context(which, *howe_n);
                if (name == "harmonics")
                    run_howe_harmonics(rep, ctx, *howe_a, *howe_b);
                else if (name == "fischer")
                    run_howe_fischer(rep, ctx, *howe_deg);
                else if (name == "bernstein")
                    run_howe_bernstein(rep, ctx, *howe_smax);
                else
                    run_howe_invariants(rep, ctx, *howe_deg);
            };
        });
    }

    // verma: tensor decompositions
    CLI::App* verma = app.add_subcommand("verma", "lowest weight module decompositions");
    verma->require_subcommand(1);
    auto v_lam = std::make_shared<std::string>("generic");
    auto v_mu = std::make_shared<std::string>("generic");
    auto v_nmax = std::make_shared<int>(5);
    auto v_depth = std::make_shared<int>(5);
    auto v_lint = std::make_shared<int>(0);
    for (const char* sub_name : {"singular", "decompose", "verify", "casimir", "pqmodule"}) {
        CLI::App* sub = verma->add_subcommand(sub_name);
        std::string name = sub_name;
        if (name == "pqmodule") {
            sub->add_option("--lambda-int", *v_lint)->check(CLI::NonNegativeNumber);
            sub->add_option("--depth", *v_depth)->check(CLI::NonNegativeNumber);
        } else {
            sub->add_option("--lambda", *v_lam, "generic, integer, or sum=N");
            sub->add_option("--mu", *v_mu, "generic or integer");
            if (name == "singular")
                sub->add_option("--nmax", *v_nmax)->check(CLI::NonNegativeNumber);
            else
                sub->add_option("--depth", *v_depth)->check(CLI::NonNegativeNumber);
        }
        sub->callback([&, name] {
            rep.command = "verma " + name;
            if (name == "pqmodule")
                rep.params = "lambda_int=" + std::to_string(*v_lint) +
                             ",depth=" + std::to_string(*v_depth);
            else
                rep.params = "lambda=" + *v_lam + ",mu=" + *v_mu + "," +
                             (name == "singular" ? "nmax=" + std::to_string(*v_nmax)
                                                 : "depth=" + std::to_string(*v_depth));
            runner = [&, name] {
                if (name == "pqmodule") {
                    run_verma_pqmodule(rep, *v_lint, *v_depth);
                    return;
                }
                if (name == "casimir" && *v_mu == "none") {
                    run_verma_casimir_single(rep, *v_lam, *v_depth);
                    return;
                }
                WeightPair p = parse_pair(*v_lam, *v_mu);
                if (name == "singular")
                    run_verma_singular(rep, p, *v_nmax);
                else if (name == "casimir")
                    run_verma_casimir_pair(rep, p, *v_depth);
                else
                    run_verma_plan(rep, p, *v_depth, name == "decompose");
            };
        });
    }

    // global flags like --json remain usable after a subcommand name
    std::function<void(CLI::App*)> set_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            set_fallthrough(s);
        }
    };
    set_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        runner();
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return emit(rep, as_json, ms);
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
