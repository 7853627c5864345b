#ifndef QIL_QCOEF_HPP
#define QIL_QCOEF_HPP

#include <iosfwd>
#include <string>

#include "qil/int_poly.hpp"

namespace qil {

/// Element of R = Z[q, q^-1], stored as q^shift * num with num in Z[q].
/// Canonical form: num has a nonzero constant term; zero is (0, shift 0).
/// Units of R are exactly +-q^k.
class QCoef {
public:
    QCoef() = default;
    QCoef(long c) : num_(c) {}                      // NOLINT: implicit by design
    explicit QCoef(const mpz_class& c) : num_(c) {}
    QCoef(IntPoly num, long shift = 0);
    static QCoef q_power(long k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one(); }
    /// True iff the value is +-q^k.
    bool is_unit() const;

    const IntPoly& numerator() const { return num_; }
    long qshift() const { return shift_; }
    /// Highest q exponent present; 0 for zero.
    long qdeg_high() const { return is_zero() ? 0 : shift_ + num_.degree(); }

    friend QCoef operator+(const QCoef& a, const QCoef& b);
    friend QCoef operator-(const QCoef& a, const QCoef& b);
    friend QCoef operator*(const QCoef& a, const QCoef& b);
    QCoef operator-() const;
    bool operator==(const QCoef& o) const { return shift_ == o.shift_ && num_ == o.num_; }

    /// GCD in R, canonical: qshift 0, nonzero constant term, positive leading
    /// coefficient. Unit-invariant: gcd(u*a, b) = gcd(a, b) for units u.
    static QCoef gcd(const QCoef& a, const QCoef& b);
    /// Exact division in R; throws not_divisible / division_by_zero.
    static QCoef divexact(const QCoef& a, const QCoef& b);
    static bool try_divexact(const QCoef& a, const QCoef& b, QCoef& out);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QCoef& c);

private:
    IntPoly num_;
    long shift_ = 0;
};

} // namespace qil

#endif
