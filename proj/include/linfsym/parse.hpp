#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linfsym/forms.hpp"

namespace linfsym {

/// Syntax or semantic error in a form expression; `position` is the byte
/// offset where the problem was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a homogeneous form on R^nvars.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [rational] monomial* [basis]      (at least one part)
///   rational := INT ['/' INT]
///   monomial := 'v'K ['^' INT]
///   basis  := 'dx'K ('^' 'dx'K)*
///
/// Whitespace between tokens is ignored.  Repeated basis indices give zero;
/// terms of different degree are rejected.
DifferentialForm parse_form(std::string_view text, int nvars);

/// Parses a degree-0 expression.
Polynomial parse_polynomial(std::string_view text, int nvars);

/// Canonical rendering: blades in lexicographic order, then monomials in
/// descending graded-lex order.  The zero form renders as "0".
std::string render_form(const DifferentialForm& a);
std::string render_polynomial(const Polynomial& p);
/// Same layout with "d1^d2" blades.
std::string render_multivector(const MultiVectorField& x);

}  // namespace linfsym
