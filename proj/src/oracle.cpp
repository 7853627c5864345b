#include "qil/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qil/errors.hpp"
#include "qil/geometry.hpp"

namespace qil {

namespace {

QCoef coefficient_gcd(const MultiPoly& p) {
    QCoef g = 0;
    for (const auto& [e, c] : p.terms()) g = QCoef::gcd(g, c);
    return g;
}

MultiPoly univariate_in(const MultiPoly& p, int var) {
    MultiPoly out(1);
    for (const auto& [e, c] : p.terms()) out.add_term(ExpVec{e[size_t(var)]}, c);
    return out;
}

struct Acc {
    QCoef c{1};
    ExpVec alpha;
    MultiPoly p0;
    std::map<std::vector<int64_t>, MultiPoly> factors; // type -> univariate poly
};

void record_factor(Acc& acc, std::vector<int64_t> type, MultiPoly uni) {
    auto it = acc.factors.find(type);
    if (it == acc.factors.end()) acc.factors.emplace(std::move(type), std::move(uni));
    else it->second = it->second * uni;
}

void rec(MultiPoly f, Acc& acc) {
    const int n = f.nvars();
    const QCoef rc = coefficient_gcd(f);
    f = f.divexact_coef(rc);
    acc.c = acc.c * rc;

    ExpVec down(size_t(n), 0);
    bool shifted = false;
    for (int i = 0; i < n; ++i) {
        const int64_t mn = f.min_exp(i);
        if (mn > 0) {
            acc.alpha[size_t(i)] += mn;
            down[size_t(i)] = -mn;
            shifted = true;
        }
    }
    if (shifted) f = f.mul_monomial(down);
    if (f.is_constant()) {
        acc.c = acc.c * f.constant_coeff();
        return;
    }

    auto dependents = [&f, n]() {
        std::vector<int> d;
        for (int i = 0; i < n; ++i)
            if (f.depends_on(i)) d.push_back(i);
        return d;
    };

    std::vector<int> dep = dependents();
    for (int i : dep) {
        MultiPoly ci = MultiPoly::content(f, {i});
        if (ci.is_constant()) continue;
        f = MultiPoly::divexact(f, ci);
        rec(std::move(ci), acc);
    }
    if (f.is_constant()) {
        acc.c = acc.c * f.constant_coeff();
        return;
    }
    dep = dependents();
    if (dep.size() == 1) {
        std::vector<int64_t> type(size_t(n), 0);
        type[size_t(dep[0])] = 1;
        record_factor(acc, std::move(type), univariate_in(f, dep[0]));
        return;
    }

    auto supp = f.support_projected(dep);
    std::set<Direction> cands;
    for (size_t a = 0; a < supp.size(); ++a) {
        for (size_t b = a + 1; b < supp.size(); ++b) {
            Direction d(supp[a].size());
            for (size_t k = 0; k < d.size(); ++k) d[k] = supp[b][k] - supp[a][k];
            Direction nd = normalize_direction(d);
            if (std::none_of(nd.begin(), nd.end(), [](int64_t v) { return v == 0; }))
                cands.insert(std::move(nd));
        }
    }

    const int yv = dep.back();
    const std::vector<int> coefvars(dep.begin(), dep.end() - 1);
    for (const auto& lam : cands) {
        MultiPoly sub = substitute_type_active(f, dep, lam);
        MultiPoly pstar = MultiPoly::content(sub, coefvars);
        {
            // The content's monomial part is only fixed up to a unit of the
            // Laurent ring; pin it down by a nonzero constant term.
            const int64_t sh = pstar.min_exp(yv);
            if (sh != 0) {
                ExpVec ydown(size_t(n), 0);
                ydown[size_t(yv)] = -sh;
                pstar = pstar.mul_monomial(ydown);
            }
        }
        if (pstar.deg(yv) == 0) continue;
        MultiPoly pm(n);
        try {
            pm = compress_var(pstar, yv, lam.back());
        } catch (const not_divisible_exponent&) {
            continue;
        }
        const int64_t dm = pm.deg(yv);
        MultiPoly fstar(n);
        for (const auto& [e, cc] : pm.terms()) {
            ExpVec full = e;
            const int64_t a = full[size_t(yv)];
            full[size_t(yv)] = 0;
            for (size_t j = 0; j < dep.size(); ++j) full[size_t(dep[j])] += lam[j] * a;
            fstar.add_term(full, cc);
        }
        ExpVec nu(size_t(n), 0);
        for (size_t j = 0; j < dep.size(); ++j)
            if (lam[j] < 0) nu[size_t(dep[j])] = dm * (-lam[j]);
        fstar = fstar.mul_monomial(nu);
        MultiPoly rest(n);
        if (!MultiPoly::try_divexact(f, fstar, rest))
            throw internal_error("reference extraction does not divide");
        f = std::move(rest);
        for (int i = 0; i < n; ++i) acc.alpha[size_t(i)] += nu[size_t(i)];
        std::vector<int64_t> type(size_t(n), 0);
        for (size_t j = 0; j < dep.size(); ++j) type[size_t(dep[j])] = lam[j];
        record_factor(acc, std::move(type), univariate_in(pm, yv));
    }

    if (f.is_constant()) acc.c = acc.c * f.constant_coeff();
    else acc.p0 = acc.p0 * f;
}

} // namespace

QILDecomposition brute_force_decompose(const MultiPoly& p) {
    if (p.is_zero()) throw zero_polynomial();
    const int n = p.nvars();
    Acc acc;
    acc.alpha.assign(size_t(n), 0);
    acc.p0 = MultiPoly::constant(n, QCoef(1));
    rec(p, acc);

    QILDecomposition d;
    d.nvars = n;
    d.monomial = acc.alpha;
    const QCoef rc = coefficient_gcd(acc.p0);
    QCoef unit;
    d.p0 = acc.p0.divexact_coef(rc).canonical_unit(&unit);
    QCoef c = acc.c * rc * unit;
    for (auto& [ty, poly] : acc.factors) {
        const QCoef fc = coefficient_gcd(poly);
        QCoef u2;
        MultiPoly norm = poly.divexact_coef(fc).canonical_unit(&u2);
        c = c * fc * u2;
        d.factors.push_back({ty, std::move(norm)});
    }
    d.content = c;
    sort_factors(d);
    return d;
}

bool gcd_type_test(const MultiPoly& p, int64_t lambda, int64_t mu) {
    if (p.nvars() != 2) throw invalid_input("gcd type test needs a bivariate polynomial");
    if (lambda == 0 || mu == 0) throw invalid_input("gcd type test needs nonzero type entries");
    if (p.is_zero()) throw zero_polynomial();
    MultiPoly twisted(2);
    for (const auto& [e, c] : p.terms())
        twisted.add_term(e, c * QCoef::q_power(long(mu * e[0] - lambda * e[1])));
    MultiPoly g = MultiPoly::gcd(p, twisted);
    return g.deg(0) + g.deg(1) > 0;
}

} // namespace qil
