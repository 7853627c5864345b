#ifndef QIL_POLY_IO_HPP
#define QIL_POLY_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "qil/multi_poly.hpp"

namespace qil {

/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := (int | factor) ('*' factor)*
///   factor := 'q' ['^' int] | var ['^' int]
///   var    := identifier
/// Whitespace is ignored; '^' exponents may be negative for q only.
/// Integers are arbitrary precision (coefficients) but exponents must fit
/// in a machine word. Errors carry 1-based line/column positions.

/// Parse against a fixed variable list; unknown identifiers are errors.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Parse and infer the variable list: if every variable is x<k> with k >= 1,
/// the list is x1..xN for the largest N seen; otherwise the distinct names in
/// sorted order.
std::pair<MultiPoly, std::vector<std::string>> parse_poly_infer(const std::string& text);

/// Parse a coefficient (no variables), e.g. "-5*q^2+q^-1".
QCoef parse_coef(const std::string& text);

/// Print with the given variable names, terms in descending lexicographic
/// order, each coefficient expanded into integer-times-q-power pieces so the
/// output stays inside the grammar above. The zero polynomial prints "0".
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars);

/// Print a pure monomial x^e ("1" when e = 0).
std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& vars);

std::string coef_to_string(const QCoef& c);

/// x1..xn
std::vector<std::string> default_var_names(int n);

} // namespace qil

#endif
