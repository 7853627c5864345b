#include "qil/multi_poly.hpp"

#include <algorithm>

#include "qil/errors.hpp"

namespace qil {

namespace {
const QCoef kZeroCoef{};
} // namespace

MultiPoly MultiPoly::constant(int nvars, const QCoef& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, ExpVec e, const QCoef& c) {
    if (static_cast<int>(e.size()) != nvars) throw dimension_mismatch();
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_.emplace(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    ExpVec e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, std::move(e), QCoef(1));
}

bool MultiPoly::is_constant() const {
    if (t_.empty()) return true;
    if (t_.size() > 1) return false;
    const ExpVec& e = t_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; });
}

bool MultiPoly::is_one() const {
    return t_.size() == 1 && is_constant() && t_.begin()->second.is_one();
}

const QCoef& MultiPoly::coeff(const ExpVec& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? kZeroCoef : it->second;
}

const QCoef& MultiPoly::constant_coeff() const { return coeff(ExpVec(nvars_, 0)); }

void MultiPoly::add_term(const ExpVec& e, const QCoef& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw dimension_mismatch();
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void MultiPoly::check_dim(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw dimension_mismatch();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_dim(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_dim(b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_dim(b);
    MultiPoly r(a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const QCoef& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::mul_monomial(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != nvars_) throw dimension_mismatch();
    MultiPoly r(nvars_);
    ExpVec f(nvars_);
    for (const auto& [ea, c] : t_) {
        for (int i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
        r.t_.emplace(f, c);
    }
    return r;
}

MultiPoly MultiPoly::divexact_coef(const QCoef& c) const {
    MultiPoly r(nvars_);
    for (const auto& [e, k] : t_) r.t_.emplace(e, QCoef::divexact(k, c));
    return r;
}

int64_t MultiPoly::deg(int var) const {
    int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (first || e.at(var) > d) d = e.at(var);
        first = false;
    }
    return d;
}

int64_t MultiPoly::min_exp(int var) const {
    int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (first || e.at(var) < d) d = e.at(var);
        first = false;
    }
    return d;
}

bool MultiPoly::has_positive_degree(const std::vector<int>& vars) const {
    for (const auto& [e, c] : t_)
        for (int v : vars)
            if (e.at(v) != 0) return true;
    return false;
}

std::vector<ExpVec> MultiPoly::support() const {
    std::vector<ExpVec> s;
    s.reserve(t_.size());
    for (const auto& [e, c] : t_) s.push_back(e);
    return s;
}

std::vector<ExpVec> MultiPoly::support_projected(const std::vector<int>& vars) const {
    std::vector<ExpVec> s;
    s.reserve(t_.size());
    ExpVec p(vars.size());
    for (const auto& [e, c] : t_) {
        for (size_t i = 0; i < vars.size(); ++i) p[i] = e.at(vars[i]);
        s.push_back(p);
    }
    std::sort(s.begin(), s.end(), ExpVecLess{});
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

MultiPoly MultiPoly::drop_var(int i) const {
    if (i < 0 || i >= nvars_) throw dimension_mismatch();
    MultiPoly r(nvars_ - 1);
    for (const auto& [e, c] : t_) {
        if (e[i] != 0) throw internal_error("drop_var on a live variable");
        ExpVec f(e.begin(), e.end());
        f.erase(f.begin() + i);
        r.t_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::insert_var(int i) const {
    if (i < 0 || i > nvars_) throw dimension_mismatch();
    MultiPoly r(nvars_ + 1);
    for (const auto& [e, c] : t_) {
        ExpVec f(e.begin(), e.end());
        f.insert(f.begin() + i, 0);
        r.t_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::clear_denominators(ExpVec* shift_out) const {
    ExpVec shift(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) {
        int64_t m = min_exp(i);
        if (m < 0) shift[i] = -m;
    }
    if (shift_out) *shift_out = shift;
    if (std::all_of(shift.begin(), shift.end(), [](int64_t x) { return x == 0; })) return *this;
    return mul_monomial(shift);
}

// Exact division. Common per-variable monomial parts are split off first so
// the core loop runs on min-0 supports, where every valid quotient exponent
// is nonnegative and a negative entry proves non-divisibility.
bool MultiPoly::try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& out) {
    a.check_dim(b);
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) {
        out = MultiPoly(a.nvars_);
        return true;
    }
    const int n = a.nvars_;
    ExpVec shift(n);
    for (int i = 0; i < n; ++i) {
        // min exponents are additive under products, so a negative shift
        // already proves the quotient could only be Laurent.
        shift[i] = a.min_exp(i) - b.min_exp(i);
        if (shift[i] < 0) return false;
    }
    ExpVec ea0(n), eb0(n);
    for (int i = 0; i < n; ++i) {
        ea0[i] = -a.min_exp(i);
        eb0[i] = -b.min_exp(i);
    }
    MultiPoly rem = a.mul_monomial(ea0);
    const MultiPoly bb = b.mul_monomial(eb0);
    const auto& blead = *bb.t_.rbegin();
    MultiPoly quo(n);
    ExpVec d(n), f(n);
    while (!rem.t_.empty()) {
        const auto& alead = *rem.t_.rbegin();
        for (int i = 0; i < n; ++i) {
            d[i] = alead.first[i] - blead.first[i];
            if (d[i] < 0) return false;
        }
        QCoef qc;
        if (!QCoef::try_divexact(alead.second, blead.second, qc)) return false;
        quo.t_.emplace(d, qc);
        for (const auto& [eb, cb] : bb.t_) {
            for (int i = 0; i < n; ++i) f[i] = d[i] + eb[i];
            rem.add_term(f, -(qc * cb));
        }
    }
    out = quo.mul_monomial(shift);
    return true;
}

MultiPoly MultiPoly::divexact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars());
    if (!try_divexact(a, b, out)) throw not_divisible();
    return out;
}

MultiPoly MultiPoly::canonical_unit(QCoef* unit_out) const {
    if (t_.empty()) {
        if (unit_out) *unit_out = QCoef(1);
        return *this;
    }
    long k = t_.begin()->second.qshift();
    for (const auto& [e, c] : t_) k = std::min(k, c.qshift());
    int s = sgn(t_.rbegin()->second.numerator().lc()) >= 0 ? 1 : -1;
    if (unit_out) *unit_out = QCoef(IntPoly(s), k);
    if (k == 0 && s == 1) return *this;
    MultiPoly r(nvars_);
    for (const auto& [e, c] : t_)
        r.t_.emplace(e, QCoef(c.numerator() * IntPoly(s), c.qshift() - k));
    return r;
}

MultiPoly MultiPoly::content(const MultiPoly& p, const std::vector<int>& vars) {
    if (p.is_zero()) return p;
    std::map<ExpVec, MultiPoly, ExpVecLess> groups;
    ExpVec key(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        std::fill(key.begin(), key.end(), 0);
        ExpVec rest = e;
        for (int v : vars) {
            key[v] = e.at(v);
            rest[v] = 0;
        }
        auto [it, fresh] = groups.try_emplace(key, p.nvars());
        it->second.add_term(rest, c);
    }
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(groups.size());
    for (auto& [k, g] : groups) coeffs.push_back(std::move(g));
    return gcd_many(std::move(coeffs));
}

MultiPoly MultiPoly::prim(const MultiPoly& p, const std::vector<int>& vars,
                          MultiPoly* content_out) {
    MultiPoly c = content(p, vars);
    if (content_out) *content_out = c;
    if (p.is_zero()) return p;
    return divexact(p, c);
}

MultiPoly substitute_type_active(const MultiPoly& p, const std::vector<int>& active,
                                 const std::vector<int64_t>& lambda) {
    if (active.empty() || active.size() != lambda.size())
        throw invalid_type("type length does not match the active variables");
    if (std::all_of(lambda.begin(), lambda.end(), [](int64_t x) { return x == 0; }))
        throw invalid_type("zero type");
    if (lambda.back() <= 0) throw invalid_type("last type entry must be positive");
    const size_t m = active.size();
    const int yvar = active.back();
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        int64_t ey = e.at(yvar);
        for (size_t j = 0; j + 1 < m; ++j)
            f[active[j]] = lambda.back() * e.at(active[j]) - lambda[j] * ey;
        r.add_term(f, c);
    }
    return r.clear_denominators();
}

MultiPoly substitute_type(const MultiPoly& p, const std::vector<int64_t>& lambda) {
    std::vector<int> active(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) active[i] = i;
    return substitute_type_active(p, active, lambda);
}

MultiPoly compress_var(const MultiPoly& p, int var, int64_t k) {
    if (k <= 0) throw invalid_type("compression step must be positive");
    if (k == 1) return p;
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e.at(var) % k != 0) throw not_divisible_exponent();
        ExpVec f = e;
        f[var] = e[var] / k;
        r.add_term(f, c);
    }
    return r;
}

MultiPoly compress_y(const MultiPoly& p, int64_t k) {
    if (p.nvars() == 0) throw dimension_mismatch();
    return compress_var(p, p.nvars() - 1, k);
}

} // namespace qil
