#pragma once

#include <string>

#include "curvasym/bivariate.hpp"
#include "curvasym/errors.hpp"

namespace curvasym {

// Parses curve text over variables x and y:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+'|'-') unary | primary ['^' INTEGER]
//   primary:= INTEGER ['/' INTEGER] | 'x' | 'y' | '(' expr ')'
// Multiplication is always explicit; exponents are nonnegative integer literals.
// Throws ParseError with a 1-based character position on malformed input.
BivariatePoly parse_polynomial(const std::string& text);

}  // namespace curvasym
