#pragma once

#include <string>
#include <vector>

#include "ratdec/multipoly.hpp"
#include "ratdec/unipoly.hpp"

namespace ratdec {

// Grammar (no implicit multiplication; unary minus binds looser than '^'):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := rational | variable | '(' expr ')'
//   rational := int ('/' int)?
// Variables resolve against `vars`; errors carry a 1-based character position.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// Terms in graded-lex order, highest first; output reparses to the same
// polynomial.
std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars);
std::string to_string(const UniPoly& p, const std::string& var);

}  // namespace ratdec
