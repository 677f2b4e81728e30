#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "linpoly/field.hpp"
#include "linpoly/linearized.hpp"
#include "linpoly/poly.hpp"

namespace linpoly {

/// "p", "p^k" (modulus from the seed), "p^k/c0,c1,...,ck" (explicit monic
/// modulus, little-endian). A bare prime power such as "4" is read as "2^2".
Field parse_field(std::string_view spec, std::uint64_t seed = kDefaultSeed);

/// Polynomial in one variable (X, x, y, t, z or T). Accepted forms:
///   expression   "X^2*(X+1) - w*X + 3"
///   sparse       "d:c;d':c';..."
///   dense        "c0,c1,...,cd"
/// Coefficients are integers mod p or expressions in the generator w.
Poly parse_poly(const Field& field, std::string_view text);

/// A field element given as an expression in w ("1+w^2", "2*w", "5").
Elem parse_element(const Field& field, std::string_view text);

/// "i:a_i;j:a_j;..." (commas also separate terms) mapping q-exponents to coefficients.
LinearizedPoly parse_linearized(const Field& field, std::string_view text);

/// "q=<fieldspec> L=i:a_i;..." in one string.
LinearizedPoly parse_linearized_spec(std::string_view text, std::uint64_t seed = kDefaultSeed);

}  // namespace linpoly
