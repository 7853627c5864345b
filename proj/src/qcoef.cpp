#include "qil/qcoef.hpp"

#include <ostream>
#include <sstream>

#include "qil/errors.hpp"

namespace qil {

QCoef::QCoef(IntPoly num, long shift) : num_(std::move(num)), shift_(shift) {
    if (num_.is_zero()) {
        shift_ = 0;
        return;
    }
    int low = num_.low_degree();
    if (low > 0) {
        num_ = num_.unshifted(low);
        shift_ += low;
    }
}

QCoef QCoef::q_power(long k) {
    return QCoef(IntPoly(1), k);
}

bool QCoef::is_unit() const {
    if (num_.degree() != 0) return false;
    const mpz_class& c = num_.coeff(0);
    return c == 1 || c == -1;
}

QCoef operator+(const QCoef& a, const QCoef& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long s = std::min(a.shift_, b.shift_);
    IntPoly n = a.num_.shifted(static_cast<int>(a.shift_ - s)) +
                b.num_.shifted(static_cast<int>(b.shift_ - s));
    return QCoef(std::move(n), s);
}

QCoef operator-(const QCoef& a, const QCoef& b) {
    return a + (-b);
}

QCoef operator*(const QCoef& a, const QCoef& b) {
    if (a.is_zero() || b.is_zero()) return QCoef();
    return QCoef(a.num_ * b.num_, a.shift_ + b.shift_);
}

QCoef QCoef::operator-() const {
    QCoef r = *this;
    r.num_ = -r.num_;
    return r;
}

QCoef QCoef::gcd(const QCoef& a, const QCoef& b) {
    IntPoly g = IntPoly::gcd(a.num_, b.num_);
    if (g.is_zero()) return QCoef();
    int low = g.low_degree();
    if (low > 0) g = g.unshifted(low);
    return QCoef(std::move(g), 0);
}

bool QCoef::try_divexact(const QCoef& a, const QCoef& b, QCoef& out) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) {
        out = QCoef();
        return true;
    }
    // Both numerators have nonzero constant terms, so divisibility in R is
    // exactly divisibility of numerators in Z[q]; units q^k move into shift.
    IntPoly q;
    if (!IntPoly::try_divexact(a.num_, b.num_, q)) return false;
    out = QCoef(std::move(q), a.shift_ - b.shift_);
    return true;
}

QCoef QCoef::divexact(const QCoef& a, const QCoef& b) {
    QCoef out;
    if (!try_divexact(a, b, out)) throw not_divisible();
    return out;
}

std::string QCoef::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = num_.degree(); i >= 0; --i) {
        mpz_class m = num_.coeff(i);
        if (m == 0) continue;
        long e = i + shift_;
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
        if (e == 0) {
            os << m.get_str();
        } else {
            if (m != 1) os << m.get_str() << '*';
            os << 'q';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QCoef& c) {
    return os << c.to_string();
}

} // namespace qil
