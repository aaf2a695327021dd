#pragma once

#include "stci/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stci {

/// Monomial text: '*'-separated factors `var^exp` (exponent 1 may be
/// omitted); the empty product is `1`.
Monomial parse_monomial(const VariableSet& vars, std::string_view text);

/// Matrix text: rows separated by ';', entries by ','.
/// Example: "a^2*d,b,c;b,a,d".
MonomialMatrix parse_matrix(const VariableSet& vars, std::string_view text);

/// Polynomial text: signed sum of terms, each an optional integer coefficient
/// and a monomial, e.g. "x1-x0" or "a^4-2*a*b*c+c^3".
SparsePolynomial parse_polynomial(const VariableSet& vars,
                                  std::string_view text);

/// Distinct variable names appearing in a monomial/matrix/polynomial text,
/// sorted. Used by the CLI when no explicit variable list is given.
std::vector<std::string> scan_variable_names(std::string_view text);

}  // namespace stci
