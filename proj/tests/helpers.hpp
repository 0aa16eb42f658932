#pragma once

#include <string>

#include "qftalg/coqts.hpp"
#include "qftalg/expression.hpp"
#include "qftalg/format.hpp"
#include "qftalg/hopf.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg::test {

inline PointId pt(const std::string& label) { return PointId(label); }

inline Element phi(const std::string& x, unsigned n = 1) { return Element(Monomial::generator(pt(x), n)); }

inline Monomial mono(const std::string& text) {
  Element e = parse_expression(text);
  if (e.terms().size() != 1) throw std::invalid_argument("not a monomial: " + text);
  return e.terms().begin()->first;
}

inline Element expr(const std::string& text) { return parse_expression(text); }

inline PropPoly D(const std::string& a, const std::string& b, unsigned pow = 1) {
  return PropPoly::symbol(PropSymbol::feynman(pt(a), pt(b)), pow);
}

inline PropPoly Dplus(const std::string& a, const std::string& b, unsigned pow = 1) {
  return PropPoly::symbol(PropSymbol::wightman(pt(a), pt(b)), pow);
}

inline PropPoly q(long num, long den = 1) { return PropPoly(make_rational(num, den)); }

inline Tensor tensor2(std::initializer_list<std::tuple<std::string, std::string, long>> terms) {
  Tensor t(2);
  for (const auto& [a, b, c] : terms) t.add_term({mono(a), mono(b)}, q(c));
  return t;
}

}  // namespace qftalg::test

// doctest stringification for readable failures
namespace qftalg {
inline std::ostream& operator<<(std::ostream& os, const PropPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Element& u) { return os << to_string(u); }
inline std::ostream& operator<<(std::ostream& os, const Tensor& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }
}  // namespace qftalg
