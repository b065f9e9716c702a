#pragma once

#include <string>
#include <string_view>

#include "dalg/diffpoly.hpp"

namespace dalg {

// Surface syntax:
//
//   expr     := term (('+' | '-') term)*
//   term     := ['-'] factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | derivvar | '(' expr ')'
//   derivvar := ident "'"* | ident '^(' nat ')'
//   rational := int ['/' nat]
//   ident    := [a-z][a-z0-9]*
//
// Whitespace between tokens is ignored. "y^(3)" and "y'''" are the same
// variable.

/// Throws SyntaxError, UnknownIndeterminate or ExponentOutOfRange.
DiffPoly parse(std::string_view text, const Context& ctx);

/// Parses text that must denote a single derivative variable, e.g. "y''".
DerivVar parse_derivvar(std::string_view text, const Context& ctx);

/// Canonical text: terms in descending grlex order, primes up to the third
/// derivative and "^(k)" above, reduced fraction coefficients, "0" for zero.
std::string format(const DiffPoly& p, const Context& ctx);

std::string format(DerivVar v, const Context& ctx);

}  // namespace dalg
