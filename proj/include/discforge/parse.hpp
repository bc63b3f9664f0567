#pragma once

#include <string>

#include "discforge/polynomial.hpp"

namespace discforge {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | ident | '(' expr ')'
//   rational := uint ('/' uint)?
// Identifiers: [A-Za-z][A-Za-z0-9_]*.  Whitespace is insignificant.
// The '/' form exists so printed monic polynomials round-trip.
Polynomial parse_poly(const std::string& expr, const RingPtr& ring);

}  // namespace discforge
