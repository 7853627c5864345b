#ifndef QIL_ORACLE_HPP
#define QIL_ORACLE_HPP

#include <cstdint>

#include "qil/decomposition.hpp"
#include "qil/multi_poly.hpp"

namespace qil {

/// Reference decomposer: no Newton-polytope pruning and no bivariate staging.
/// Candidate types are all pairwise support directions; each is tested by the
/// substitution content check. Slow but structurally independent of the two
/// production algorithms; returns the same canonical decomposition.
QILDecomposition brute_force_decompose(const MultiPoly& p);

/// Bivariate detection of a factor of type (lambda, mu) by a single GCD:
/// twist each term c * x^i * y^j of p into c * q^(mu*i - lambda*j) * x^i * y^j
/// and report whether gcd(p, p') has positive total degree. Requires p with
/// exactly two variables and lambda, mu nonzero; throws invalid_input.
bool gcd_type_test(const MultiPoly& p, int64_t lambda, int64_t mu);

} // namespace qil

#endif
