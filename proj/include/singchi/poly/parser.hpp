#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "singchi/poly/polynomial.hpp"

namespace singchi::poly {

// Grammar (whitespace is insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' INTEGER)?
//   atom   := NUMBER | IDENT | '(' expr ')'
//   NUMBER := digits ('/' digits)?
//   IDENT  := [a-z][a-zA-Z0-9_]*
// Juxtaposition is not multiplication: "2x" is a syntax error.

/// Throws SyntaxError (with byte offset) or UnknownVariable.
Polynomial parse_poly(std::string_view text, const Ring& ring);

/// Identifiers occurring in `text`, in order of first occurrence.
/// Does not validate the rest of the grammar.
std::vector<std::string> scan_identifiers(std::string_view text);

}  // namespace singchi::poly
