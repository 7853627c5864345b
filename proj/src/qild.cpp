#include "qil/qild.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "qil/errors.hpp"
#include "qil/geometry.hpp"
#include "qil/poly_io.hpp"

namespace qil {

namespace {

// Control-flow signal for the early-exit linearity mode.
struct LinearityFail {
    LinearityWitness w;
};

struct EngineOpts {
    bool linearity = false;
    DecomposeStats* stats = nullptr;
};

// Factor produced mid-run: `poly` lives in the full slot space, univariate in
// slot `yslot` apart from passive parameter slots; `type` is indexed by the
// position of each active slot in the call that produced it.
struct ParamFactor {
    std::vector<int64_t> type;
    MultiPoly poly;
    int yslot;
};

// Intermediate decomposition over an ordered list of active slots. Invariant:
// content * x^alpha * p0 * prod_i poly_i(substituted) equals the input.
struct ParamDecomp {
    MultiPoly content;
    std::vector<int64_t> alpha;
    MultiPoly p0;
    std::vector<ParamFactor> factors;
};

std::string dir_string(const Direction& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

// pd was computed with the active list missing position `pos`; re-align.
void merge_removed(ParamDecomp& acc, ParamDecomp&& pd, size_t pos) {
    acc.content = acc.content * pd.content;
    pd.alpha.insert(pd.alpha.begin() + ptrdiff_t(pos), 0);
    for (size_t j = 0; j < acc.alpha.size(); ++j) acc.alpha[j] += pd.alpha[j];
    acc.p0 = acc.p0 * pd.p0;
    for (auto& pf : pd.factors) {
        pf.type.insert(pf.type.begin() + ptrdiff_t(pos), 0);
        acc.factors.push_back(std::move(pf));
    }
}

ParamDecomp newton_engine(MultiPoly f, const std::vector<int>& active, const EngineOpts& opt) {
    const int nv = f.nvars();
    const size_t m = active.size();
    if (f.is_zero()) throw internal_error("engine received the zero polynomial");
    ParamDecomp acc{MultiPoly::constant(nv, QCoef(1)), std::vector<int64_t>(m, 0),
                    MultiPoly::constant(nv, QCoef(1)), {}};

    if (m == 0 || !f.has_positive_degree(active)) {
        acc.content = acc.content * f;
        return acc;
    }

    MultiPoly c0;
    f = MultiPoly::prim(f, active, &c0);
    acc.content = acc.content * c0;

    {
        ExpVec down(size_t(nv), 0);
        bool any = false;
        for (size_t j = 0; j < m; ++j) {
            const int64_t a = f.min_exp(active[j]);
            if (a == 0) continue;
            acc.alpha[j] += a;
            down[size_t(active[j])] = -a;
            any = true;
        }
        if (any) f = f.mul_monomial(down);
    }

    if (!f.has_positive_degree(active)) {
        acc.content = acc.content * f;
        return acc;
    }

    if (m == 1) {
        acc.factors.push_back({{1}, std::move(f), active[0]});
        return acc;
    }

    // Factors living in fewer active variables sit in per-variable contents.
    for (size_t i = 0; i < m; ++i) {
        MultiPoly g = MultiPoly::content(f, {active[i]});
        if (g.is_constant()) continue;
        f = MultiPoly::divexact(f, g);
        std::vector<int> sub(active);
        sub.erase(sub.begin() + ptrdiff_t(i));
        merge_removed(acc, newton_engine(std::move(g), sub, opt), i);
    }

    if (!f.has_positive_degree(active)) {
        acc.content = acc.content * f;
        return acc;
    }

    auto supp = f.support_projected(active);

    if (opt.linearity) {
        if (auto w = find_nonunique_extremum(supp)) {
            LinearityWitness lw;
            lw.kind = LinearityWitness::Kind::NonUniqueExtremum;
            lw.var = active[size_t(w->var)];
            lw.is_min = w->is_min;
            lw.detail = std::string(w->is_min ? "minimum" : "maximum") + " of " +
                        default_var_names(nv)[size_t(lw.var)] +
                        " is attained by more than one support point";
            throw LinearityFail{std::move(lw)};
        }
    }

    CandidateTypes ct = candidate_types(supp);
    std::vector<Direction> cands;
    if (ct.collinear) cands.push_back(*ct.collinear);
    else cands = ct.candidates;

    const int yv = active.back();
    const std::vector<int> coefvars(active.begin(), active.end() - 1);
    for (const auto& lam : cands) {
        if (opt.stats) ++opt.stats->candidate_extractions;
        MultiPoly sub = substitute_type_active(f, active, lam);
        MultiPoly pstar = MultiPoly::content(sub, coefvars);
        {
            // Normalize to a nonzero constant term; the gcd fixes the
            // monomial part of the content only up to a unit of the
            // Laurent ring.
            const int64_t sh = pstar.min_exp(yv);
            if (sh != 0) {
                ExpVec down(size_t(nv), 0);
                down[size_t(yv)] = -sh;
                pstar = pstar.mul_monomial(down);
            }
        }
        bool genuine = pstar.deg(yv) > 0;
        MultiPoly pm(nv);
        if (genuine) {
            try {
                pm = compress_var(pstar, yv, lam.back());
            } catch (const not_divisible_exponent&) {
                genuine = false;
            }
        }
        if (!genuine) {
            if (opt.linearity) {
                LinearityWitness lw;
                lw.kind = LinearityWitness::Kind::FakeCandidate;
                lw.detail = "candidate direction " + dir_string(lam) + " admits no factor";
                throw LinearityFail{std::move(lw)};
            }
            continue;
        }
        const int64_t dm = pm.deg(yv);
        MultiPoly fstar(nv);
        for (const auto& [e, cc] : pm.terms()) {
            ExpVec full = e;
            const int64_t a = full[size_t(yv)];
            full[size_t(yv)] = 0;
            for (size_t j = 0; j < m; ++j) full[size_t(active[j])] += lam[j] * a;
            fstar.add_term(full, cc);
        }
        ExpVec nu(size_t(nv), 0);
        for (size_t j = 0; j < m; ++j)
            if (lam[j] < 0) nu[size_t(active[j])] = dm * (-lam[j]);
        fstar = fstar.mul_monomial(nu);
        MultiPoly rest(nv);
        if (!MultiPoly::try_divexact(f, fstar, rest))
            throw internal_error("extracted factor does not divide the remainder");
        f = std::move(rest);
        for (size_t j = 0; j < m; ++j) acc.alpha[j] += nu[size_t(active[j])];
        acc.factors.push_back({lam, std::move(pm), yv});
    }

    if (f.has_positive_degree(active)) {
        if (opt.linearity) {
            LinearityWitness lw;
            lw.kind = LinearityWitness::Kind::NonUnitResidual;
            lw.detail = "remainder of positive degree admits no candidate type";
            throw LinearityFail{std::move(lw)};
        }
        acc.p0 = acc.p0 * f;
    } else {
        acc.content = acc.content * f;
    }
    return acc;
}

QCoef constant_value(const MultiPoly& p) {
    if (!p.is_constant()) throw internal_error("residual content is not constant");
    return p.constant_coeff();
}

MultiPoly to_univariate(const MultiPoly& p, int yslot) {
    MultiPoly out(1);
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (int(i) != yslot && e[i] != 0)
                throw internal_error("grouped factor depends on an extra variable");
        out.add_term(ExpVec{e[size_t(yslot)]}, c);
    }
    return out;
}

QILDecomposition assemble(int n, ParamDecomp&& pd) {
    QILDecomposition d;
    d.nvars = n;
    QCoef c = constant_value(pd.content);

    d.monomial.assign(pd.alpha.begin(), pd.alpha.end());
    for (int64_t e : d.monomial)
        if (e < 0) throw internal_error("negative exponent in monomial part");

    if (pd.p0.nvars() != n) throw internal_error("trivial part variable mismatch");
    std::vector<int> allv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) allv[size_t(i)] = i;
    const QCoef rcc = constant_value(MultiPoly::content(pd.p0, allv));
    QCoef unit;
    d.p0 = pd.p0.divexact_coef(rcc).canonical_unit(&unit);
    c = c * rcc * unit;

    std::map<std::vector<int64_t>, MultiPoly> grouped;
    for (auto& pf : pd.factors) {
        MultiPoly uni = to_univariate(pf.poly, pf.yslot);
        auto it = grouped.find(pf.type);
        if (it == grouped.end()) grouped.emplace(std::move(pf.type), std::move(uni));
        else it->second = it->second * uni;
    }
    for (auto& [ty, poly] : grouped) {
        const QCoef qcc = constant_value(MultiPoly::content(poly, {0}));
        QCoef u2;
        MultiPoly norm = poly.divexact_coef(qcc).canonical_unit(&u2);
        c = c * qcc * u2;
        d.factors.push_back({ty, std::move(norm)});
    }
    d.content = c;
    sort_factors(d);
    return d;
}

std::vector<int> natural_order(int n) {
    std::vector<int> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[size_t(i)] = i;
    return a;
}

// Exponent mass of `from` moves onto `to` (expected clear); coefficients
// are untouched.
MultiPoly move_slot(const MultiPoly& p, int from, int to) {
    if (from == to) return p;
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f2 = e;
        f2[size_t(to)] += f2[size_t(from)];
        f2[size_t(from)] = 0;
        out.add_term(f2, c);
    }
    return out;
}

struct CoreResult {
    MultiPoly content; // constant
    std::vector<int64_t> alpha;
    MultiPoly p0;
    std::vector<ParamFactor> factors; // types over the n variable slots
};

// Iterative decomposition over slots s..n-1 of an (n+1)-slot space; slot n is
// the reserved substitution variable.
CoreResult qild2_core(MultiPoly F, int s, int n, DecomposeStats* stats, StageTrace* trace) {
    const int nv = n + 1;
    CoreResult res{MultiPoly::constant(nv, QCoef(1)), std::vector<int64_t>(size_t(n), 0),
                   MultiPoly::constant(nv, QCoef(1)), {}};
    const int m = n - s;
    EngineOpts opt;
    opt.stats = stats;

    if (m <= 2) {
        std::vector<int> A;
        for (int i = s; i < n; ++i) A.push_back(i);
        ParamDecomp pd = newton_engine(std::move(F), A, opt);
        res.content = res.content * pd.content;
        for (size_t j = 0; j < A.size(); ++j) res.alpha[size_t(A[j])] += pd.alpha[j];
        res.p0 = res.p0 * pd.p0;
        for (auto& pf : pd.factors) {
            std::vector<int64_t> full(size_t(n), 0);
            for (size_t j = 0; j < A.size(); ++j) full[size_t(A[j])] = pf.type[j];
            res.factors.push_back({std::move(full), std::move(pf.poly), pf.yslot});
        }
        return res;
    }

    MultiPoly g = MultiPoly::content(F, {s, s + 1});
    MultiPoly f1 = MultiPoly::divexact(F, g);
    if (!g.is_constant()) {
        CoreResult gd = qild2_core(std::move(g), s + 2, n, stats, nullptr);
        res.content = res.content * gd.content;
        for (size_t j = 0; j < size_t(n); ++j) res.alpha[j] += gd.alpha[j];
        res.p0 = res.p0 * gd.p0;
        for (auto& pf : gd.factors) res.factors.push_back(std::move(pf));
    } else {
        res.content = res.content * g;
    }

    std::vector<int> slots;
    for (int i = s; i < n; ++i) slots.push_back(i);
    auto supp = f1.support_projected(slots);
    if (supp.size() == 1) {
        ExpVec down(size_t(nv), 0);
        for (size_t j = 0; j < slots.size(); ++j) {
            res.alpha[size_t(slots[j])] += supp[0][j];
            down[size_t(slots[j])] = -supp[0][j];
        }
        res.content = res.content * f1.mul_monomial(down);
        return res;
    }

    struct Pending {
        std::vector<int64_t> mu;
        MultiPoly h;
    };
    std::vector<Pending> lam;
    lam.push_back({{1}, move_slot(f1, s, n)});

    for (int k = 1; k <= m - 1; ++k) {
        const int xv = s + k;
        const std::vector<int> A{n, xv};
        std::vector<Pending> next;
        for (auto& pending : lam) {
            ParamDecomp pd = newton_engine(std::move(pending.h), A, opt);
            res.content = res.content * pd.content;
            for (int j = 0; j < k; ++j)
                res.alpha[size_t(s + j)] += pending.mu[size_t(j)] * pd.alpha[0];
            res.alpha[size_t(xv)] += pd.alpha[1];
            if (!pd.p0.is_one()) {
                MultiPoly rp(nv);
                for (const auto& [e, c] : pd.p0.terms()) {
                    ExpVec f2 = e;
                    const int64_t a = f2[size_t(n)];
                    f2[size_t(n)] = 0;
                    for (int j = 0; j < k; ++j) f2[size_t(s + j)] += pending.mu[size_t(j)] * a;
                    rp.add_term(f2, c);
                }
                res.p0 = res.p0 * rp;
            }
            for (auto& pf : pd.factors) {
                std::vector<int64_t> mu2(pending.mu.size() + 1);
                for (size_t j = 0; j < pending.mu.size(); ++j) mu2[j] = pending.mu[j] * pf.type[0];
                mu2[pending.mu.size()] = pf.type[1];
                next.push_back({std::move(mu2), move_slot(pf.poly, pf.yslot, n)});
            }
        }
        if (trace) {
            trace->stage_types.emplace_back();
            for (const auto& pn : next) trace->stage_types.back().push_back(pn.mu);
        }
        lam = std::move(next);
    }

    for (auto& pending : lam) {
        std::vector<int64_t> full(size_t(n), 0);
        for (size_t j = 0; j < pending.mu.size(); ++j) full[size_t(s) + j] = pending.mu[j];
        res.factors.push_back({std::move(full), std::move(pending.h), n});
    }

    ExpVec shift;
    res.p0 = res.p0.clear_denominators(&shift);
    for (size_t j = 0; j < size_t(n); ++j) res.alpha[j] -= shift[j];
    return res;
}

} // namespace

QILDecomposition decompose_newton(const MultiPoly& p, DecomposeStats* stats) {
    if (p.is_zero()) throw zero_polynomial();
    EngineOpts opt;
    opt.stats = stats;
    ParamDecomp pd = newton_engine(p, natural_order(p.nvars()), opt);
    return assemble(p.nvars(), std::move(pd));
}

QILDecomposition decompose_bivariate_iter(const MultiPoly& p, DecomposeStats* stats,
                                          StageTrace* trace) {
    if (p.is_zero()) throw zero_polynomial();
    if (trace) trace->stage_types.clear();
    const int n = p.nvars();
    if (n <= 2) {
        EngineOpts opt;
        opt.stats = stats;
        ParamDecomp pd = newton_engine(p, natural_order(n), opt);
        return assemble(n, std::move(pd));
    }
    CoreResult cr = qild2_core(p.insert_var(n), 0, n, stats, trace);
    ParamDecomp pd{std::move(cr.content), std::move(cr.alpha), cr.p0.drop_var(n),
                   std::move(cr.factors)};
    return assemble(n, std::move(pd));
}

bool is_q_integer_linear(const MultiPoly& p, LinearityWitness* witness, DecomposeStats* stats) {
    if (p.is_zero()) throw zero_polynomial();
    EngineOpts opt;
    opt.linearity = true;
    opt.stats = stats;
    try {
        newton_engine(p, natural_order(p.nvars()), opt);
    } catch (LinearityFail& lf) {
        if (witness) *witness = std::move(lf.w);
        return false;
    }
    return true;
}

} // namespace qil
