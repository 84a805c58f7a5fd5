#pragma once

// Text input for scalars, xi / xt polynomials and group algebra elements. Accepts
// everything the corresponding to_string produces. Errors are ParseError with a
// byte offset, or ModeMismatch when the scalar variable does not match the field
// (q is generic, z is a root of unity).

#include "qkoszul/invariants.hpp"
#include "qkoszul/qmatrix.hpp"
#include "qkoszul/scalar.hpp"

#include <string_view>

namespace qkoszul {

/// "3/2*q^2 - q^-1", "(z - z^-1)/(z + 1)", "2 q". U+2212 is read as a minus sign.
Scalar parse_scalar(std::string_view text, Field field);

/// "q^-1 xt[2,3] xt[1,2] + (q - q^-1) xt[1,3]". A term without letters is a
/// multiple of the empty word. Mixing x and xt letters is an error. When n > 0
/// indices must lie in 1..n.
XiPoly parse_xi(std::string_view text, Field field, int n = 0);

/// "c * chi[1,0] - chi[0,1]". The rank comes from the first chi unless n > 0.
GroupAlgebraElement parse_group_element(std::string_view text, Field field, int n = 0);

}  // namespace qkoszul
