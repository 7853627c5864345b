#include "qil/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qil/errors.hpp"

namespace qil {

static const mpz_class k_zero = 0;

IntPoly::IntPoly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly IntPoly::from_coeffs(std::vector<mpz_class> cs) {
    IntPoly p;
    p.c_ = std::move(cs);
    p.trim();
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

int IntPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return k_zero;
    return c_[i];
}

const mpz_class& IntPoly::lc() const {
    if (c_.empty()) return k_zero;
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(c_.size() + k, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

IntPoly IntPoly::unshifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (low_degree() < k) throw not_divisible("q power does not divide");
    IntPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

mpz_class IntPoly::icontent() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::iquotient(const mpz_class& d) const {
    if (d == 0) throw division_by_zero();
    IntPoly r = *this;
    for (auto& c : r.c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw not_divisible();
        c /= d;
    }
    return r;
}

bool IntPoly::try_divexact(const IntPoly& a, const IntPoly& b, IntPoly& out) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) {
        out = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem = a.c_;
    std::vector<mpz_class> quo(a.degree() - b.degree() + 1, mpz_class(0));
    const mpz_class& blc = b.lc();
    for (int d = a.degree(); d >= b.degree();) {
        if (rem[d] == 0) {
            --d;
            continue;
        }
        if (!mpz_divisible_p(rem[d].get_mpz_t(), blc.get_mpz_t())) return false;
        mpz_class c = rem[d] / blc;
        int k = d - b.degree();
        quo[k] = c;
        for (int i = 0; i <= b.degree(); ++i) rem[i + k] -= c * b.c_[i];
        --d;
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    out = from_coeffs(std::move(quo));
    return true;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    if (!try_divexact(a, b, out)) throw not_divisible();
    return out;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
IntPoly prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly t = IntPoly(r.lc()).shifted(r.degree() - b.degree());
        r = r * IntPoly(b.lc()) - t * b;
        --e;
    }
    mpz_class f = 1;
    for (; e > 0; --e) f *= b.lc();
    return r * IntPoly(f);
}

mpz_class pow_mpz(const mpz_class& base, int e) {
    mpz_class r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;

    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), a.icontent().get_mpz_t(), b.icontent().get_mpz_t());

    IntPoly u = a.iquotient(a.icontent());
    IntPoly v = b.iquotient(b.icontent());
    if (u.degree() < v.degree()) std::swap(u, v);

    // Subresultant PRS on the primitive parts.
    mpz_class g = 1, h = 1;
    for (;;) {
        int delta = u.degree() - v.degree();
        IntPoly r = prem(u, v);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            v = IntPoly(1);
            break;
        }
        u = v;
        v = r.iquotient(g * pow_mpz(h, delta));
        g = u.lc();
        if (delta >= 1) {
            // h = g^delta / h^(delta-1), exact.
            mpz_class num = pow_mpz(g, delta);
            mpz_class den = pow_mpz(h, delta - 1);
            h = num / den;
        }
    }
    IntPoly res = v.iquotient(v.icontent()) * IntPoly(ic);
    if (res.lc() < 0) res = -res;
    return res;
}

unsigned long IntPoly::eval_mod(unsigned long t, unsigned long p) const {
    unsigned long acc = 0;
    for (int i = degree(); i >= 0; --i) {
        acc = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(acc) * t +
             mpz_fdiv_ui(c_[i].get_mpz_t(), p)) %
            p);
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class m = c_[i];
        if (first) {
            if (m < 0) {
                os << '-';
                m = -m;
            }
            first = false;
        } else {
            os << (m < 0 ? '-' : '+');
            if (m < 0) m = -m;
        }
        if (i == 0) {
            os << m.get_str();
        } else {
            if (m != 1) os << m.get_str() << '*';
            os << 'q';
            if (i != 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.to_string();
}

} // namespace qil
