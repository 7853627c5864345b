#ifndef QIL_DECOMPOSITION_HPP
#define QIL_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "qil/multi_poly.hpp"

namespace qil {

/// One grouped factor P(x^type): `poly` is univariate in y (nvars == 1),
/// q-primitive of positive degree, canonically normalized; `type` is a
/// normalized direction of length nvars of the decomposed polynomial.
struct QILFactor {
    std::vector<int64_t> type;
    MultiPoly poly;

    bool operator==(const QILFactor& o) const = default;
};

/// p = content * x^monomial * p0 * prod_i poly_i(x^type_i), with pairwise
/// distinct types, p0 primitive over R with no factor of the grouped shape,
/// and all stripped units folded into content.
struct QILDecomposition {
    int nvars = 0;
    QCoef content;
    ExpVec monomial;
    MultiPoly p0;
    std::vector<QILFactor> factors;

    bool operator==(const QILDecomposition& o) const = default;
};

/// Multiply the parts back out (exact, Laurent-tolerant intermediates).
MultiPoly expand(const QILDecomposition& d);

/// Full certificate: the product reproduces p, every structural invariant
/// holds, and p0 has no q-integer-linear factor (checked independently).
/// On failure `reason`, if given, names the first violated condition.
bool verify(const MultiPoly& p, const QILDecomposition& d, std::string* reason = nullptr);

/// True iff some irreducible factor of f of positive total degree has the
/// shape x^a * P(x^lambda). Decides by content stripping plus the
/// substitution test over all pairwise support directions.
bool has_qil_factor(const MultiPoly& f);

/// Deterministic output order: factors sorted by type, descending
/// lexicographically on entries.
void sort_factors(QILDecomposition& d);

} // namespace qil

#endif
