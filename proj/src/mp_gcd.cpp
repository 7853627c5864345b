#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qil/errors.hpp"
#include "qil/multi_poly.hpp"

// GCD stack for R[x1..xn]: common monomial strip, content recursion on the
// cheapest variable, a single-point modular coprimality probe, trial-division
// shortcuts, dense modular interpolation for one live variable over Z[q], and
// a primitive pseudo-remainder sequence as the general fallback.

namespace qil {
namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % w == 0) return n == w;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// i-th prime below 2^62, descending.
uint64_t nth_prime(int i) {
    static std::vector<uint64_t> cache;
    static uint64_t next = (1ull << 62) - 1;
    while (static_cast<int>(cache.size()) <= i) {
        while (!is_prime_u64(next)) --next;
        cache.push_back(next--);
    }
    return cache[static_cast<size_t>(i)];
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

using FpPoly = std::vector<uint64_t>; // dense, index = exponent

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_gcd_monic(FpPoly a, FpPoly b, uint64_t p) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        // a mod b
        uint64_t inv_lb = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t c = mulmod(a.back(), inv_lb, p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t s = mulmod(c, b[i], p);
                a[off + i] = (a[off + i] + p - s) % p;
            }
            fp_normalize(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

int64_t min_qshift(const MultiPoly& f) {
    int64_t s = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first || c.qshift() < s) s = c.qshift();
        first = false;
    }
    return s;
}

int64_t qdeg(const MultiPoly& f) {
    int64_t base = min_qshift(f);
    int64_t d = 0;
    for (const auto& [e, c] : f.terms())
        d = std::max<int64_t>(d, c.qshift() - base + c.numerator().degree());
    return d;
}

/// Evaluate f at q = tq and x_v = tv[v] for v != u; dense image in x_u.
/// Exponents of the ride-along variables must be nonnegative.
FpPoly eval_image(const MultiPoly& f, int u, uint64_t tq, const std::vector<uint64_t>& tv,
                  uint64_t p) {
    int64_t base = min_qshift(f);
    FpPoly img(static_cast<size_t>(f.deg(u)) + 1, 0);
    for (const auto& [e, c] : f.terms()) {
        uint64_t v = c.numerator().eval_mod(tq, p);
        v = mulmod(v, powmod(tq, static_cast<uint64_t>(c.qshift() - base), p), p);
        for (int j = 0; j < f.nvars(); ++j) {
            if (j == u || e[j] == 0) continue;
            v = mulmod(v, powmod(tv[static_cast<size_t>(j)], static_cast<uint64_t>(e[j]), p), p);
        }
        size_t k = static_cast<size_t>(e[u]);
        img[k] = (img[k] + v) % p;
    }
    fp_normalize(img);
    return img;
}

MultiPoly coeff_of_power(const MultiPoly& f, int u, int64_t d) {
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[u] != d) continue;
        ExpVec g = e;
        g[u] = 0;
        r.add_term(g, c);
    }
    return r;
}

std::vector<int> active_vars(const MultiPoly& a, const MultiPoly& b) {
    std::vector<int> vs;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.depends_on(i) || b.depends_on(i)) vs.push_back(i);
    return vs;
}

/// Probe the gcd degree in x_u at one random evaluation point. Returns an
/// upper bound on deg_u gcd(a, b), or -1 when no valid point was found.
int64_t probe_gcd_degree(const MultiPoly& a, const MultiPoly& b, int u) {
    const uint64_t p = nth_prime(0);
    const MultiPoly la = coeff_of_power(a, u, a.deg(u));
    const MultiPoly lb = coeff_of_power(b, u, b.deg(u));
    std::vector<uint64_t> tv(static_cast<size_t>(a.nvars()));
    for (uint64_t attempt = 0; attempt < 20; ++attempt) {
        uint64_t ctr = attempt * 97;
        uint64_t tq = 2 + splitmix64(ctr) % (p - 3);
        for (size_t j = 0; j < tv.size(); ++j) tv[j] = 2 + splitmix64(ctr + 1 + j) % (p - 3);
        FpPoly ia = eval_image(la, u, tq, tv, p);
        FpPoly ib = eval_image(lb, u, tq, tv, p);
        if (ia.empty() || ib.empty()) continue;
        FpPoly g = fp_gcd_monic(eval_image(a, u, tq, tv, p), eval_image(b, u, tq, tv, p), p);
        return static_cast<int64_t>(g.size()) - 1;
    }
    return -1;
}

/// Pseudo-remainder of f by g in x_u with the lc(g) power applied lazily.
MultiPoly prem_u(const MultiPoly& f, const MultiPoly& g, int u) {
    const int64_t dg = g.deg(u);
    const MultiPoly lg = coeff_of_power(g, u, dg);
    MultiPoly r = f;
    int64_t e = f.deg(u) - dg + 1;
    while (!r.is_zero() && r.deg(u) >= dg) {
        int64_t dr = r.deg(u);
        MultiPoly lr = coeff_of_power(r, u, dr);
        ExpVec sh(static_cast<size_t>(f.nvars()), 0);
        sh[static_cast<size_t>(u)] = dr - dg;
        r = lg * r - (lr * g).mul_monomial(sh);
        --e;
    }
    for (; e > 0; --e) r = lg * r;
    return r;
}

MultiPoly prim_in(const MultiPoly& f, int u) {
    return MultiPoly::prim(f, std::vector<int>{u});
}

/// Primitive PRS gcd for inputs primitive in x_u.
MultiPoly prs_gcd(MultiPoly f, MultiPoly g, int u) {
    if (f.deg(u) < g.deg(u)) std::swap(f, g);
    for (;;) {
        MultiPoly r = prem_u(f, g, u);
        if (r.is_zero()) return g.canonical_unit();
        if (r.deg(u) == 0) return MultiPoly::constant(f.nvars(), QCoef(1));
        f = std::move(g);
        g = prim_in(r, u);
    }
}

struct FallbackToPRS {};

/// Modular gcd for inputs with a single live variable x_u over Z[q]: evaluate
/// q at interpolation nodes per prime, interpolate the gcd images scaled by
/// the leading-coefficient gcd, and CRT across primes until trial division
/// confirms the candidate. Inputs must be primitive in x_u.
MultiPoly modular_gcd_1var(const MultiPoly& f, const MultiPoly& g, int u) {
    const int n = f.nvars();
    const QCoef lcf = coeff_of_power(f, u, f.deg(u)).constant_coeff();
    const QCoef lcg = coeff_of_power(g, u, g.deg(u)).constant_coeff();
    const QCoef gamma = QCoef::gcd(lcf, lcg);
    const IntPoly& gnum = gamma.numerator();
    const int64_t nq = gnum.degree() + std::min(qdeg(f), qdeg(g)) + 1;
    const int64_t base_f = min_qshift(f);
    const int64_t base_g = min_qshift(g);

    int64_t dmin = std::min(f.deg(u), g.deg(u));
    mpz_class modulus = 1;
    std::vector<std::vector<mpz_class>> crt; // [u power][q power]
    const std::vector<uint64_t> tv(static_cast<size_t>(n), 0);

    auto lift_and_test = [&](MultiPoly& out) -> bool {
        mpz_class half = modulus / 2;
        MultiPoly cand(n);
        for (size_t j = 0; j < crt.size(); ++j) {
            std::vector<mpz_class> cs = crt[j];
            for (auto& x : cs)
                if (x > half) x -= modulus;
            IntPoly num = IntPoly::from_coeffs(cs);
            if (num.is_zero()) continue;
            ExpVec e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(u)] = static_cast<int64_t>(j);
            cand.add_term(e, QCoef(num));
        }
        if (cand.is_zero() || cand.deg(u) != dmin) return false;
        QCoef cont = cand.terms().begin()->second;
        for (const auto& [e, c] : cand.terms()) {
            cont = QCoef::gcd(cont, c);
            if (cont.is_one()) break;
        }
        cand = cand.divexact_coef(cont).canonical_unit();
        MultiPoly tmp(n);
        if (!MultiPoly::try_divexact(f, cand, tmp)) return false;
        if (!MultiPoly::try_divexact(g, cand, tmp)) return false;
        out = cand;
        return true;
    };

    for (int pi = 0; pi < 16; ++pi) {
        const uint64_t p = nth_prime(pi);
        if (mpz_fdiv_ui(lcf.numerator().lc().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(lcg.numerator().lc().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(gnum.lc().get_mpz_t(), p) == 0) continue;

        // Newton interpolation state in q for this prime.
        std::vector<uint64_t> nodes;
        FpPoly basis{1};                   // prod (q - t_i)
        std::vector<FpPoly> acc;           // [u power] -> poly in q
        bool prime_done = false;

        for (uint64_t t = 2; t < p && !prime_done; ++t) {
            uint64_t lf = lcf.numerator().eval_mod(t, p);
            lf = mulmod(lf, powmod(t, static_cast<uint64_t>(lcf.qshift() - base_f), p), p);
            uint64_t lg2 = lcg.numerator().eval_mod(t, p);
            lg2 = mulmod(lg2, powmod(t, static_cast<uint64_t>(lcg.qshift() - base_g), p), p);
            if (lf == 0 || lg2 == 0) continue;
            FpPoly h = fp_gcd_monic(eval_image(f, u, t, tv, p), eval_image(g, u, t, tv, p), p);
            int64_t d = static_cast<int64_t>(h.size()) - 1;
            if (d == 0) return MultiPoly::constant(n, QCoef(1));
            if (d > dmin) continue; // unlucky point
            if (d < dmin) {
                // Everything seen so far was unlucky; restart accumulation.
                dmin = d;
                modulus = 1;
                crt.clear();
                nodes.clear();
                basis = FpPoly{1};
                acc.clear();
            }
            uint64_t scale = gnum.eval_mod(t, p);
            acc.resize(static_cast<size_t>(dmin) + 1);
            uint64_t bt = 0;
            {
                uint64_t pw = 1;
                for (uint64_t c : basis) {
                    bt = (bt + mulmod(c, pw, p)) % p;
                    pw = mulmod(pw, t, p);
                }
            }
            uint64_t inv_bt = invmod(bt, p);
            for (size_t j = 0; j < acc.size(); ++j) {
                uint64_t want = j < h.size() ? mulmod(h[j], scale, p) : 0;
                uint64_t have = 0, pw = 1;
                for (uint64_t c : acc[j]) {
                    have = (have + mulmod(c, pw, p)) % p;
                    pw = mulmod(pw, t, p);
                }
                uint64_t cj = mulmod((want + p - have) % p, inv_bt, p);
                if (acc[j].size() < basis.size()) acc[j].resize(basis.size(), 0);
                for (size_t k = 0; k < basis.size(); ++k)
                    acc[j][k] = (acc[j][k] + mulmod(cj, basis[k], p)) % p;
            }
            // basis *= (q - t)
            FpPoly nb(basis.size() + 1, 0);
            for (size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] = (nb[k + 1] + basis[k]) % p;
                nb[k] = (nb[k] + mulmod(basis[k], p - t, p)) % p;
            }
            basis = std::move(nb);
            nodes.push_back(t);
            prime_done = static_cast<int64_t>(nodes.size()) == nq;
        }
        if (!prime_done) continue;

        // Merge this prime into the CRT accumulator.
        size_t rows = static_cast<size_t>(dmin) + 1;
        crt.resize(rows);
        uint64_t mp = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        uint64_t inv_m = invmod(mp, p);
        for (size_t j = 0; j < rows; ++j) {
            size_t cols = std::max(crt[j].size(), acc[j].size());
            crt[j].resize(cols, 0);
            for (size_t k = 0; k < cols; ++k) {
                uint64_t a = k < acc[j].size() ? acc[j][k] : 0;
                uint64_t cur = mpz_fdiv_ui(crt[j][k].get_mpz_t(), p);
                uint64_t r = mulmod((a + p - cur) % p, inv_m, p);
                crt[j][k] += modulus * mpz_class(static_cast<unsigned long>(r));
            }
        }
        modulus *= mpz_class(static_cast<unsigned long>(p));
        MultiPoly out(n);
        if (lift_and_test(out)) return out;
    }
    throw FallbackToPRS{};
}

QCoef collect_coef_gcd(const MultiPoly& p, QCoef seed) {
    for (const auto& [e, c] : p.terms()) {
        seed = QCoef::gcd(seed, c);
        if (seed.is_one()) break;
    }
    return seed;
}

/// gcd for inputs that are primitive in x_u with deg_u >= 1 on both sides.
MultiPoly gcd_prim(const MultiPoly& a, const MultiPoly& b, int u) {
    MultiPoly tmp(a.nvars());
    int64_t d = probe_gcd_degree(a, b, u);
    if (d == 0) return MultiPoly::constant(a.nvars(), QCoef(1));
    if (d == a.deg(u) && MultiPoly::try_divexact(b, a, tmp)) return a.canonical_unit();
    if (d == b.deg(u) && MultiPoly::try_divexact(a, b, tmp)) return b.canonical_unit();
    if (active_vars(a, b).size() == 1) {
        try {
            return modular_gcd_1var(a, b, u);
        } catch (const FallbackToPRS&) {
        }
    }
    return prs_gcd(a, b, u);
}

/// Core gcd for nonzero inputs with min exponent 0 in every variable.
MultiPoly gcd_core(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_constant())
        return MultiPoly::constant(a.nvars(), collect_coef_gcd(b, a.constant_coeff()));
    if (b.is_constant())
        return MultiPoly::constant(a.nvars(), collect_coef_gcd(a, b.constant_coeff()));
    std::vector<int> vs = active_vars(a, b);
    int u = vs.front();
    int64_t best = std::min(a.deg(u), b.deg(u));
    for (int v : vs) {
        int64_t m = std::min(a.deg(v), b.deg(v));
        if (m < best) {
            best = m;
            u = v;
        }
    }
    MultiPoly ca, cb;
    MultiPoly a1 = MultiPoly::prim(a, {u}, &ca);
    MultiPoly b1 = MultiPoly::prim(b, {u}, &cb);
    MultiPoly cc = MultiPoly::gcd(ca, cb);
    if (a1.is_constant() || b1.is_constant()) return cc.canonical_unit();
    return (cc * gcd_prim(a1, b1, u)).canonical_unit();
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    a.check_dim(b);
    if (a.is_zero()) return b.canonical_unit();
    if (b.is_zero()) return a.canonical_unit();
    const int n = a.nvars();
    ExpVec mono(static_cast<size_t>(n)), sa(static_cast<size_t>(n)), sb(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int64_t ma = a.min_exp(i), mb = b.min_exp(i);
        mono[static_cast<size_t>(i)] = std::min(ma, mb);
        sa[static_cast<size_t>(i)] = -ma;
        sb[static_cast<size_t>(i)] = -mb;
    }
    MultiPoly g = gcd_core(a.mul_monomial(sa), b.mul_monomial(sb));
    return g.mul_monomial(mono).canonical_unit();
}

MultiPoly MultiPoly::gcd_many(std::vector<MultiPoly> polys) {
    if (polys.empty()) throw internal_error("gcd of an empty collection");
    std::sort(polys.begin(), polys.end(), [](const MultiPoly& x, const MultiPoly& y) {
        return x.term_count() < y.term_count();
    });
    MultiPoly g = polys.front();
    MultiPoly tmp(g.nvars());
    for (size_t i = 1; i < polys.size(); ++i) {
        if (g.is_constant() && !g.is_zero() && g.constant_coeff().is_unit()) break;
        if (!g.is_zero() && try_divexact(polys[i], g, tmp)) continue;
        g = gcd(g, polys[i]);
    }
    return g.canonical_unit();
}

} // namespace qil
