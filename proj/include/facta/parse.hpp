#pragma once

/// Parsers for the command-line literal forms: monoids ("gen:1/2,2/3",
/// "grid:6", "ppow:2"), coefficient rings ("int", "rat", "fp:7"), and
/// polynomial expressions ("3X^(5/6)-X^(1/2)+7"). Syntax problems raise
/// parse_error with the byte offset; values that parse but violate a
/// domain rule (exponent outside the monoid, coefficient outside the
/// ring, composite fp modulus) surface as domain_error from the
/// constructors they feed.

#include "facta/monoid.hpp"
#include "facta/poly.hpp"

#include <string_view>

namespace facta {

puiseux_monoid parse_monoid(std::string_view text);

coeff_ring parse_ring(std::string_view text);

/// Whitespace-insensitive term grammar: an optional sign, then a
/// coefficient (integer or a/b), a variable part `X`, or both juxtaposed;
/// exponents attach as `X^k` for integer k or `X^(a/b)` for rationals.
/// Rendering a poly_expr and re-parsing it under the same ring and monoid
/// is the identity.
poly_expr parse_poly(std::string_view text, const coeff_ring& ring,
                     const puiseux_monoid& monoid);

} // namespace facta
