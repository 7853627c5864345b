#include "qil/generator.hpp"

#include <set>

#include "qil/errors.hpp"
#include "qil/geometry.hpp"

namespace qil {

namespace {

int64_t rint(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + int64_t(rng() % uint64_t(hi - lo + 1));
}

int64_t rnonzero(std::mt19937_64& rng, int64_t bound) {
    for (;;) {
        const int64_t v = rint(rng, -bound, bound);
        if (v != 0) return v;
    }
}

// Dense random univariate over R, endpoints nonzero, q-degree at most qd.
MultiPoly rand_unipoly(std::mt19937_64& rng, int64_t deg, int64_t qd) {
    MultiPoly f(1);
    for (int64_t k = 0; k <= deg; ++k) {
        if (k != 0 && k != deg && rint(rng, 0, 3) == 0) continue;
        const int64_t qe = rint(rng, 0, qd);
        std::vector<mpz_class> cs(size_t(qe) + 1);
        for (auto& v : cs) v = rint(rng, -5, 5);
        cs[size_t(qe)] = rnonzero(rng, 5);
        f.add_term({k}, QCoef(IntPoly::from_coeffs(std::move(cs))));
    }
    return f;
}

MultiPoly apply_type_raw(const MultiPoly& uni, const std::vector<int64_t>& lam, int n) {
    MultiPoly out(n);
    for (const auto& [e, c] : uni.terms()) {
        ExpVec full(size_t(n), 0);
        for (int i = 0; i < n; ++i) full[size_t(i)] = lam[size_t(i)] * e[0];
        out.add_term(full, c);
    }
    return out;
}

} // namespace

MultiPoly bench_instance(int n, int m, int d0, int d, std::mt19937_64& rng) {
    if (n < 1 || m < 0 || d0 < 0 || d < 1) throw invalid_input("bad benchmark parameters");
    MultiPoly p(n);
    do {
        p = MultiPoly(n);
        const int terms = 2 * (d0 + 1);
        for (int t = 0; t < terms; ++t) {
            ExpVec e(static_cast<size_t>(n));
            for (auto& v : e) v = rint(rng, 0, d0);
            p.add_term(e, QCoef(IntPoly(long(rnonzero(rng, 5))), long(rint(rng, 0, d0))));
        }
    } while (p.is_zero());

    for (int i = 0; i < m; ++i) {
        std::vector<int64_t> lam(static_cast<size_t>(n));
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : lam) v = rint(rng, -10, 10);
            for (int64_t v : lam) nonzero = nonzero || v != 0;
        }
        const MultiPoly pi = rand_unipoly(rng, d, d) * rand_unipoly(rng, 2 * d, d);
        p = p * apply_type_raw(pi, lam, n);
    }
    return p.clear_denominators();
}

ConstructiveInstance constructive_instance(int n, int m, int d, std::mt19937_64& rng) {
    if (n < 2 || m < 1 || d < 1) throw invalid_input("bad constructive parameters");
    std::set<std::vector<int64_t>> types;
    while (int(types.size()) < m) {
        std::vector<int64_t> lam(static_cast<size_t>(n));
        for (auto& v : lam) v = rnonzero(rng, 3);
        types.insert(normalize_direction(std::move(lam)));
    }

    ConstructiveInstance inst;
    inst.expected.nvars = n;
    inst.expected.content = QCoef(1);
    inst.expected.p0 = MultiPoly::constant(n, QCoef(1));
    MultiPoly prod = MultiPoly::constant(n, QCoef(1));
    for (const auto& lam : types) {
        const int64_t deg = rint(rng, 1, d);
        MultiPoly pi(1);
        for (int64_t k = 0; k <= deg; ++k) {
            // nonzero constant and linear coefficients rule out any rewrite
            // of the factor as a polynomial in a proper power of its argument
            const bool forced = k == 0 || k == 1 || k == deg;
            const int64_t c = forced ? rnonzero(rng, 4) : rint(rng, -4, 4);
            if (c == 0) continue;
            pi.add_term({k}, QCoef(IntPoly(long(c)), long(rint(rng, 0, 2))));
        }
        const QCoef pc = MultiPoly::content(pi, {0}).constant_coeff();
        pi = pi.divexact_coef(pc).canonical_unit();
        inst.expected.factors.push_back({lam, pi});
        prod = prod * apply_type_raw(pi, lam, n);
    }

    ExpVec shift;
    prod = prod.clear_denominators(&shift);
    ExpVec extra(static_cast<size_t>(n));
    for (auto& v : extra) v = rint(rng, 0, 2);
    inst.poly = prod.mul_monomial(extra);
    inst.expected.monomial = shift;
    for (int i = 0; i < n; ++i) inst.expected.monomial[size_t(i)] += extra[size_t(i)];
    sort_factors(inst.expected);
    return inst;
}

} // namespace qil
