#include "qftalg/json_io.hpp"

#include "qftalg/errors.hpp"

#include <stdexcept>
#include <string>

namespace qftalg {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\" in " + j.dump());
  }
  return j.at(key);
}

unsigned unsigned_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<unsigned>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
}

}  // namespace

Json to_json(const PropPoly& p) {
  Json out = Json::array();
  for (const auto& [symbols, c] : p.terms()) {
    Json syms = Json::array();
    for (const auto& [s, e] : symbols) {
      syms.push_back({{"kind", s.kind() == PropKind::Symmetric ? "D" : "Dplus"},
                      {"a", s.source().label()},
                      {"b", s.target().label()},
                      {"pow", e}});
    }
    out.push_back({{"coeff", to_fraction_string(c)}, {"symbols", std::move(syms)}});
  }
  return out;
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [g, mult] : m.factors()) {
    out.push_back({{"point", g.point.label()}, {"power", g.power}, {"mult", mult}});
  }
  return out;
}

Json to_json(const Element& u) {
  Json out = Json::array();
  for (const auto& [m, c] : u.terms()) out.push_back({{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const Tensor& t) {
  Json out = Json::array();
  for (const auto& [slots, c] : t.terms()) {
    Json s = Json::array();
    for (const auto& m : slots) s.push_back(to_json(m));
    out.push_back({{"slots", std::move(s)}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const LawReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json inputs = Json::array();
    for (const auto& u : f.inputs) inputs.push_back(to_json(u));
    failures.push_back({{"law", f.law}, {"inputs", std::move(inputs)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"law", r.law_name}, {"checked", r.instances_checked}, {"failures", std::move(failures)}};
}

PropPoly poly_from_json(const Json& j) {
  require_array(j, "PropPoly");
  std::vector<std::pair<SymbolPowers, Rational>> raw;
  for (const auto& term : j) {
    SymbolPowers symbols;
    const Json& syms = field(term, "symbols");
    require_array(syms, "symbols");
    for (const auto& s : syms) {
      const std::string kind = string_field(s, "kind");
      PointId a(string_field(s, "a"));
      PointId b(string_field(s, "b"));
      PropSymbol sym = kind == "D"       ? PropSymbol::feynman(a, b)
                       : kind == "Dplus" ? PropSymbol::wightman(a, b)
                                         : throw std::invalid_argument("unknown propagator kind '" + kind + "'");
      symbols.emplace_back(sym, unsigned_field(s, "pow"));
    }
    raw.emplace_back(std::move(symbols), parse_rational(string_field(term, "coeff")));
  }
  return PropPoly::from_terms(raw);
}

Monomial monomial_from_json(const Json& j) {
  require_array(j, "Monomial");
  std::vector<std::pair<PointId, unsigned>> raw;
  for (const auto& f : j) {
    PointId point(string_field(f, "point"));
    const unsigned power = unsigned_field(f, "power");
    const unsigned mult = f.contains("mult") ? unsigned_field(f, "mult") : 1u;
    for (unsigned k = 0; k < mult; ++k) raw.emplace_back(point, power);
  }
  return Monomial::normalize(raw);
}

Element element_from_json(const Json& j) {
  require_array(j, "Element");
  Element u;
  for (const auto& term : j) u.add_term(monomial_from_json(field(term, "monomial")), poly_from_json(field(term, "coeff")));
  return u;
}

Vertex vertex_from_json(const Json& j) {
  require_array(j, "vertex table");
  std::map<Monomial, Element> rules;
  for (const auto& rule : j) {
    Monomial from = monomial_from_json(field(rule, "from"));
    const Json& to = field(rule, "to");
    require_array(to, "\"to\"");
    Element image;
    for (const auto& t : to) {
      const unsigned power = unsigned_field(t, "power");
      if (power == 0) throw VertexError("vertex images must be Wick powers phi^n(x) with n >= 1");
      image.add_term(Monomial::generator(PointId(string_field(t, "point")), power),
                     PropPoly(parse_rational(t.contains("coeff") ? string_field(t, "coeff") : "1")));
    }
    rules[from] += image;
  }
  return Vertex::from_rules(std::move(rules));
}

}  // namespace qftalg
