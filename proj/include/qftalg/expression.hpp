#pragma once

// Surface syntax for elements of H:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := integer ['/' integer]
//            | 'phi' ['^' integer] '(' point ')'
//            | ('D' | 'Dplus') '(' point ',' point ')' ['^' integer]
//            | '(' expr ')'
//
// '*' is the normal product. phi^0(x) is the unit. Whitespace is ignored.
// Every string produced by to_string(Element) parses back to the same value.

#include <string_view>

#include "qftalg/hopf.hpp"

namespace qftalg {

/// Throws SyntaxError (byte offset and expected tokens) or PowerError for a
/// negative exponent.
Element parse_expression(std::string_view text);

}  // namespace qftalg
