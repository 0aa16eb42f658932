#include "qftalg/coqts.hpp"

#include <map>
#include <tuple>

#include "memo.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/format.hpp"

namespace qftalg {

namespace {

void require_chronological(RMode mode) {
  if (mode != RMode::Chronological) {
    throw ModeError("the T-product needs the commutative chronological (Feynman) mode; "
                    "the operator (Wightman) twisted product is not commutative");
  }
}

// m = first occurrence · rest
std::pair<Monomial, Monomial> split_first(const Monomial& m) {
  auto occ = m.occurrences();
  Monomial first = Monomial::generator(occ.front().point, occ.front().power);
  Monomial rest;
  for (std::size_t i = 1; i < occ.size(); ++i) rest = rest * Monomial::generator(occ[i].point, occ[i].power);
  return {first, rest};
}

PropPoly bicharacter(const Monomial& u, const Monomial& v, RMode mode) {
  if (u.is_unit()) return counit(v);
  if (v.is_unit()) return counit(u);

  using Key = std::tuple<Monomial, Monomial, RMode>;
  thread_local std::map<Key, PropPoly> memo;
  const bool cached = detail::memo_enabled();
  Key key{u, v, mode};
  if (cached) {
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  PropPoly value;
  if (u.occurrence_count() > 1) {
    auto [a, b] = split_first(u);
    for (const auto& [slots, c] : coproduct(v).terms()) {
      PropPoly left = bicharacter(a, slots[0], mode);
      if (left.is_zero()) continue;
      value += c * left * bicharacter(b, slots[1], mode);
    }
  } else if (v.occurrence_count() > 1) {
    auto [b, rest] = split_first(v);
    for (const auto& [slots, c] : coproduct(u).terms()) {
      PropPoly left = bicharacter(slots[0], b, mode);
      if (left.is_zero()) continue;
      value += c * left * bicharacter(slots[1], rest, mode);
    }
  } else {
    value = r_generators(u.factors().front().first, v.factors().front().first, mode);
  }

  if (cached) memo.emplace(std::move(key), value);
  return value;
}

}  // namespace

PropPoly r_generators(const Generator& g, const Generator& h, RMode mode) {
  if (g.power != h.power) return PropPoly();
  const unsigned n = g.power;
  PropSymbol s = mode == RMode::Chronological ? PropSymbol::feynman(g.point, h.point)
                                              : PropSymbol::wightman(g.point, h.point);
  return PropPoly::symbol(s, n) * Rational(factorial(n));
}

PropPoly r_bicharacter(const Monomial& u, const Monomial& v, RMode mode) {
  return bicharacter(u.quotient(), v.quotient(), mode);
}

Element twisted_product(const Element& u, const Element& v, RMode mode) {
  Tensor du = coproduct(quotient(u));
  Tensor dv = coproduct(quotient(v));
  Element out;
  for (const auto& [su, cu] : du.terms()) {
    for (const auto& [sv, cv] : dv.terms()) {
      PropPoly r = bicharacter(su[0], sv[0], mode);
      if (r.is_zero()) continue;
      out.add_term(su[1] * sv[1], r * cu * cv);
    }
  }
  return out;
}

Element chronological(std::span<const Generator> factors, RMode mode) {
  require_chronological(mode);
  Element acc = Element::unit();
  for (const auto& g : factors) acc = twisted_product(acc, Element(Monomial::generator(g.point, g.power)), mode);
  return acc;
}

Element chronological(const Monomial& m_in, RMode mode) {
  require_chronological(mode);
  Monomial m = m_in.quotient();
  thread_local std::map<Monomial, Element> memo;
  const bool cached = detail::memo_enabled();
  if (cached) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  auto occ = m.occurrences();
  Element value = chronological(std::span<const Generator>(occ), mode);
  if (cached) memo.emplace(m, value);
  return value;
}

Element chronological(const Element& u, RMode mode) {
  require_chronological(mode);
  Element out;
  for (const auto& [m, c] : u.terms()) out += chronological(m, mode) * c;
  return out;
}

PropPoly t_functional(const Monomial& m, RMode mode) { return counit(chronological(m, mode)); }

PropPoly t_functional(const Element& u, RMode mode) { return counit(chronological(u, mode)); }

Element t_expansion_identity(const Element& u, RMode mode) {
  require_chronological(mode);
  Element direct = chronological(u, mode);
  Element expanded;
  for (const auto& [slots, c] : coproduct(u).terms()) {
    PropPoly t = t_functional(slots[0], mode);
    if (t.is_zero()) continue;
    expanded.add_term(slots[1], c * t);
  }
  if (direct != expanded) {
    throw IdentityViolation("T(u) != sum t(u(1)) u(2) for u = " + to_string(u), to_string(direct),
                            to_string(expanded));
  }
  return direct;
}

}  // namespace qftalg
