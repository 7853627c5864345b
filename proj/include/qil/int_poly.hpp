#ifndef QIL_INT_POLY_HPP
#define QIL_INT_POLY_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace qil {

/// Dense polynomial in Z[q]. Coefficient i is the coefficient of q^i.
/// Invariant: the highest stored coefficient is nonzero (zero poly stores nothing).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(long c);
    explicit IntPoly(const mpz_class& c);
    static IntPoly from_coeffs(std::vector<mpz_class> cs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest index with a nonzero coefficient; -1 for zero.
    int low_degree() const;
    const mpz_class& coeff(int i) const;
    const mpz_class& lc() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /// Multiply by q^k, k >= 0.
    IntPoly shifted(int k) const;
    /// Divide by q^k, requires the k lowest coefficients to be zero.
    IntPoly unshifted(int k) const;

    /// GCD of all integer coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class icontent() const;
    IntPoly iquotient(const mpz_class& d) const;

    /// Exact division in Z[q]; throws not_divisible / division_by_zero.
    static IntPoly divexact(const IntPoly& a, const IntPoly& b);
    static bool try_divexact(const IntPoly& a, const IntPoly& b, IntPoly& out);

    /// GCD in Z[q] via integer content plus a subresultant PRS on primitive
    /// parts. Result has a positive leading coefficient; gcd(0,0) = 0.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    /// Evaluate at q = t modulo prime p (word-size).
    unsigned long eval_mod(unsigned long t, unsigned long p) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p);

private:
    std::vector<mpz_class> c_;
    void trim();
};

} // namespace qil

#endif
