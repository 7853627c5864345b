#ifndef QIL_MULTI_POLY_HPP
#define QIL_MULTI_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qil/qcoef.hpp"

namespace qil {

/// Exponent vector; entry i is the exponent of variable i. Negative entries
/// are permitted (Laurent intermediates); public decomposition results keep
/// all exponents nonnegative.
using ExpVec = std::vector<int64_t>;

/// Pure lexicographic term order, first variable most significant.
struct ExpVecLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial over R = Z[q, q^-1] with a fixed variable
/// count. Terms are kept in lexicographic order; zero coefficients are never
/// stored.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, QCoef, ExpVecLess>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const QCoef& c);
    static MultiPoly monomial(int nvars, ExpVec e, const QCoef& c);
    static MultiPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    /// Degree zero in every variable.
    bool is_constant() const;
    bool is_one() const;
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    const QCoef& coeff(const ExpVec& e) const;
    /// Coefficient of the constant monomial.
    const QCoef& constant_coeff() const;

    /// Accumulate c * x^e, erasing the term if the sum vanishes.
    void add_term(const ExpVec& e, const QCoef& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

    MultiPoly scaled(const QCoef& c) const;
    MultiPoly mul_monomial(const ExpVec& e) const;
    /// Divide every coefficient by c exactly.
    MultiPoly divexact_coef(const QCoef& c) const;

    /// Exact division; the quotient must be a true polynomial (no negative
    /// exponents), even for Laurent operands. Throws not_divisible.
    static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);
    static bool try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& out);

    /// Max exponent of a variable over the support (0 for the zero poly).
    int64_t deg(int var) const;
    /// Min exponent of a variable over the support (0 for the zero poly).
    int64_t min_exp(int var) const;
    bool depends_on(int var) const { return deg(var) != 0 || min_exp(var) != 0; }
    /// True iff some term has a nonzero exponent on one of the given vars.
    bool has_positive_degree(const std::vector<int>& vars) const;

    std::vector<ExpVec> support() const;
    /// Distinct projections of the support onto the given variables, sorted.
    std::vector<ExpVec> support_projected(const std::vector<int>& vars) const;

    /// Remove variable i (its exponent must be 0 everywhere).
    MultiPoly drop_var(int i) const;
    /// Add a fresh variable slot at position i with exponent 0 everywhere.
    MultiPoly insert_var(int i) const;

    /// Multiply by the minimal monomial making all exponents nonnegative.
    /// shift_out receives the applied per-variable shift.
    MultiPoly clear_denominators(ExpVec* shift_out = nullptr) const;

    /// GCD in the polynomial ring R[x1..xn] (only powers of q are units).
    /// Canonical result: min q exponent 0, positive top integer coefficient
    /// of the leading term. gcd(0,0) = 0.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
    static MultiPoly gcd_many(std::vector<MultiPoly> polys);

    /// Content with respect to a set of variables: the GCD of the coefficient
    /// polynomials of p viewed as a polynomial in those variables, normalized
    /// per the coefficient-ring unit convention.
    static MultiPoly content(const MultiPoly& p, const std::vector<int>& vars);
    /// p = content * prim; prim is the exact quotient.
    static MultiPoly prim(const MultiPoly& p, const std::vector<int>& vars,
                          MultiPoly* content_out = nullptr);

    /// Strip the unit +-q^k making the poly canonical (min q exponent 0,
    /// positive top integer coefficient of the leading term).
    MultiPoly canonical_unit(QCoef* unit_out = nullptr) const;

    std::string to_string() const; // default variable names, defined in poly_io
    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    int nvars_;
    TermMap t_;
    void check_dim(const MultiPoly& o) const;
};

/// Substitute x_last := y and x_j := x_j^(lambda_last) * (adjustment) so that a
/// factor of type lambda collapses to a univariate polynomial in y: each term
/// c * x^e maps to c * y^(e_last) * prod_j x_j^(lambda_last*e_j - lambda_j*e_last),
/// followed by the minimal monomial shift clearing negative exponents.
/// Requires lambda nonzero with positive last entry; throws invalid_type.
MultiPoly substitute_type(const MultiPoly& p, const std::vector<int64_t>& lambda);

/// Same rewrite applied to a subset of variables, in the caller's order; the
/// last listed variable takes the y role, all other variables ride along in
/// the coefficients. lambda is indexed by position in `active`.
MultiPoly substitute_type_active(const MultiPoly& p, const std::vector<int>& active,
                                 const std::vector<int64_t>& lambda);

/// Divide the exponents of one variable by k; throws not_divisible_exponent.
MultiPoly compress_var(const MultiPoly& p, int var, int64_t k);
/// compress_var on the last variable.
MultiPoly compress_y(const MultiPoly& p, int64_t k);

} // namespace qil

#endif
