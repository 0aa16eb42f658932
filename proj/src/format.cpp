#include "qftalg/format.hpp"

#include <cstdlib>
#include <vector>

namespace qftalg {

namespace {

struct Piece {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += "-";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

std::string symbols_string(const SymbolPowers& symbols) {
  std::string out;
  for (const auto& [s, e] : symbols) {
    if (!out.empty()) out += "*";
    out += to_string(s);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// A single scalar term times an optional trailing factor.
Piece scalar_piece(const SymbolPowers& symbols, const Rational& c, const std::string& trailing) {
  Rational magnitude = abs(c);
  std::string body;
  std::string rest = symbols_string(symbols);
  if (!trailing.empty()) rest += (rest.empty() ? "" : "*") + trailing;
  if (rest.empty()) {
    body = to_plain_string(magnitude);
  } else if (magnitude == 1) {
    body = rest;
  } else {
    body = to_plain_string(magnitude) + "*" + rest;
  }
  return {c < 0, body};
}

std::vector<Piece> poly_pieces(const PropPoly& p) {
  std::vector<Piece> out;
  for (const auto& [symbols, c] : p.terms()) out.push_back(scalar_piece(symbols, c, ""));
  return out;
}

}  // namespace

std::string to_string(const PropSymbol& s) {
  return std::string(s.kind() == PropKind::Symmetric ? "D(" : "Dplus(") + s.source().label() + "," +
         s.target().label() + ")";
}

std::string to_string(const PropPoly& p) { return join(poly_pieces(p)); }

std::string to_string(const Generator& g) {
  if (g.power == 1) return "phi(" + g.point.label() + ")";
  return "phi^" + std::to_string(g.power) + "(" + g.point.label() + ")";
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& g : m.occurrences()) {
    if (!out.empty()) out += "*";
    out += to_string(g);
  }
  return out;
}

std::string to_string(const Element& u) {
  std::vector<Piece> pieces;
  for (const auto& [m, c] : u.terms()) {
    if (m.is_unit()) {
      auto ps = poly_pieces(c);
      pieces.insert(pieces.end(), ps.begin(), ps.end());
    } else if (c.terms().size() == 1) {
      const auto& [symbols, k] = *c.terms().begin();
      pieces.push_back(scalar_piece(symbols, k, to_string(m)));
    } else {
      pieces.push_back({false, "(" + to_string(c) + ")*" + to_string(m)});
    }
  }
  return join(pieces);
}

std::string to_string(const Tensor& t) {
  std::vector<Piece> pieces;
  for (const auto& [slots, c] : t.terms()) {
    std::string product;
    for (const auto& m : slots) {
      if (!product.empty()) product += " ⊗ ";
      product += to_string(m);
    }
    if (c.terms().size() == 1) {
      const auto& [symbols, k] = *c.terms().begin();
      Piece p = scalar_piece(symbols, k, "");
      if (symbols.empty() && abs(k) == 1) {
        pieces.push_back({p.negative, product});
      } else {
        pieces.push_back({p.negative, p.body + "*" + product});
      }
    } else {
      pieces.push_back({false, "(" + to_string(c) + ")*" + product});
    }
  }
  return join(pieces);
}

}  // namespace qftalg
