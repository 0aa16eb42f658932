#pragma once

// Human-readable rendering. Element output re-parses with parse_expression
// to an equal Element.

#include <string>

#include "qftalg/hopf.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

std::string to_string(const PropSymbol& s);
std::string to_string(const PropPoly& p);
std::string to_string(const Generator& g);
std::string to_string(const Monomial& m);
std::string to_string(const Element& u);
/// Slots are joined with " ⊗ ".
std::string to_string(const Tensor& t);

}  // namespace qftalg
