#pragma once

#include "prym/rat_poly.hpp"

#include <string_view>

namespace prym {

/// Longest exponent accepted after '^'.
inline constexpr unsigned long kMaxParsedExponent = 64;

/// Parses a polynomial in one variable:
///
///     expr   := ['+' | '-'] term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := base ('^' nat)?
///     base   := rational | var | '(' expr ')'
///
/// A rational literal is `p` or `p/q`. Any identifier may serve as the
/// variable, but only one may appear. Juxtaposition ("2x") is rejected.
/// Errors are ParseError with a 0-based byte offset.
RatPoly parse_poly(std::string_view text);

} // namespace prym
