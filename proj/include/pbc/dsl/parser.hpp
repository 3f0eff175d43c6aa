#pragma once

#include <string>

#include "pbc/dsl/ast.hpp"

namespace pbc::dsl {

// Parses one bracket expression. ParseError with line/column and the
// expected tokens otherwise.
//
// Grammar (ASCII aliases in brackets):
//   expr      := bracket | expect | var
//   bracket   := "P(" lhs "|" { obsref "|" } rhs ")"
//   lhs       := eventexpr | "Omega"
//   rhs       := eventexpr | "Omega" | "Omega_" number
//   expect    := "E[" obstree "]" [ "|" eventexpr ]
//   var       := "Var[" obstree "]"
//   eventexpr := term { ("∪" | "+" | "|u") term }
//   term      := factor { ("∩" | "&") factor }
//   factor    := "~" factor | name | "(" eventexpr ")"
//   obstree   := obsfactor { ("*" | "+") obsfactor }
//   obsfactor := name | number | "(" obstree ")"
BracketExpr parse(const std::string& src);

}  // namespace pbc::dsl
