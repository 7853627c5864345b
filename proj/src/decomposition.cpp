#include "qil/decomposition.hpp"

#include <algorithm>
#include <set>

#include "qil/errors.hpp"
#include "qil/geometry.hpp"

namespace qil {

namespace {

// P(x^type) as a Laurent polynomial in the full variable space.
MultiPoly apply_type(const QILFactor& f, int nvars) {
    MultiPoly out(nvars);
    for (const auto& [e, c] : f.poly.terms()) {
        ExpVec full(nvars, 0);
        for (int i = 0; i < nvars; ++i) full[i] = f.type[size_t(i)] * e[0];
        out.add_term(full, c);
    }
    return out;
}

bool fail(std::string* reason, const char* msg) {
    if (reason) *reason = msg;
    return false;
}

// Constant-in-every-variable poly whose sole coefficient is the R-content.
bool is_r_primitive_canonical(const MultiPoly& p) {
    std::vector<int> all(size_t(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) all[size_t(i)] = i;
    MultiPoly c = MultiPoly::content(p, all);
    if (!c.is_constant() || !c.constant_coeff().is_unit()) return false;
    return p == p.canonical_unit();
}

} // namespace

MultiPoly expand(const QILDecomposition& d) {
    MultiPoly r = MultiPoly::constant(d.nvars, d.content);
    r = r.mul_monomial(d.monomial);
    r = r * d.p0;
    for (const auto& f : d.factors) r = r * apply_type(f, d.nvars);
    return r;
}

bool verify(const MultiPoly& p, const QILDecomposition& d, std::string* reason) {
    if (d.nvars != p.nvars()) return fail(reason, "variable count mismatch");
    if (d.content.is_zero()) return fail(reason, "zero content");
    if (d.monomial.size() != size_t(d.nvars)) return fail(reason, "monomial length mismatch");
    for (int64_t e : d.monomial)
        if (e < 0) return fail(reason, "negative monomial exponent");

    if (d.p0.nvars() != d.nvars || d.p0.is_zero()) return fail(reason, "invalid trivial part");
    if (!is_r_primitive_canonical(d.p0)) return fail(reason, "trivial part not primitive");

    std::set<std::vector<int64_t>> seen;
    for (const auto& f : d.factors) {
        if (f.type.size() != size_t(d.nvars)) return fail(reason, "type length mismatch");
        bool zero = std::all_of(f.type.begin(), f.type.end(), [](int64_t v) { return v == 0; });
        if (zero) return fail(reason, "zero type");
        if (normalize_direction(f.type) != f.type) return fail(reason, "type not normalized");
        if (!seen.insert(f.type).second) return fail(reason, "duplicate type");
        if (f.poly.nvars() != 1 || f.poly.deg(0) < 1) return fail(reason, "factor not univariate of positive degree");
        if (f.poly.constant_coeff().is_zero()) return fail(reason, "factor vanishes at zero");
        if (!is_r_primitive_canonical(f.poly)) return fail(reason, "factor not q-primitive");
    }

    if (expand(d) != p) return fail(reason, "product does not reproduce the input");
    if (has_qil_factor(d.p0)) return fail(reason, "trivial part has a q-integer-linear factor");
    return true;
}

bool has_qil_factor(const MultiPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    MultiPoly g = f;
    int n = g.nvars();

    for (int i = 0; i < n; ++i)
        if (g.min_exp(i) > 0) return true;
    if (g.is_constant()) return false;

    std::vector<int> active;
    for (int i = 0; i < n; ++i)
        if (g.depends_on(i)) active.push_back(i);
    if (active.size() == 1) return true;

    // Strip per-variable contents; factors living in fewer variables are
    // decided recursively, the remainder is primitive in each variable.
    for (int i : active) {
        MultiPoly c = MultiPoly::content(g, {i});
        if (!c.is_constant() && has_qil_factor(c)) return true;
        g = MultiPoly::divexact(g, c);
    }

    active.clear();
    for (int i = 0; i < n; ++i)
        if (g.depends_on(i)) active.push_back(i);
    if (active.empty()) return false;
    if (active.size() == 1) return true;

    // All pairwise support directions without zero coordinates cover every
    // possible remaining type; the substitution content test decides each.
    auto supp = g.support_projected(active);
    std::set<Direction> cands;
    for (size_t a = 0; a < supp.size(); ++a) {
        for (size_t b = a + 1; b < supp.size(); ++b) {
            Direction dvec(supp[a].size());
            for (size_t k = 0; k < dvec.size(); ++k) dvec[k] = supp[b][k] - supp[a][k];
            Direction nd = normalize_direction(dvec);
            if (std::none_of(nd.begin(), nd.end(), [](int64_t v) { return v == 0; }))
                cands.insert(nd);
        }
    }
    std::vector<int> coefvars(active.begin(), active.end() - 1);
    for (const auto& lam : cands) {
        MultiPoly sub = substitute_type_active(g, active, lam);
        MultiPoly pc = MultiPoly::content(sub, coefvars);
        if (pc.deg(active.back()) > 0) return true;
    }
    return false;
}

void sort_factors(QILDecomposition& d) {
    std::sort(d.factors.begin(), d.factors.end(),
              [](const QILFactor& a, const QILFactor& b) { return b.type < a.type; });
}

} // namespace qil
