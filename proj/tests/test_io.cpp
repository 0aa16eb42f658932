#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/json_io.hpp"
#include "qftalg/laws.hpp"
#include "qftalg/renorm.hpp"

using namespace qftalg;
using namespace qftalg::test;

TEST_CASE("parser examples") {
  CHECK(expr("phi^2(x1)*phi^2(x2)") == Element(Monomial::generator(pt("x1"), 2) * Monomial::generator(pt("x2"), 2)));
  CHECK(expr("phi(x)*phi(x)") != expr("phi^2(x)"));
  CHECK(expr("phi(x)*phi(x)").terms().begin()->first.occurrence_count() == 2);
  CHECK(expr("2/3 * phi(x) + phi^0(y)") == q(2, 3) * phi("x") + Element::unit());
  CHECK(expr("  phi ( x ) * 3 - -2") == q(3) * phi("x") + Element::scalar(q(2)));
  CHECK(expr("(phi(x) + 1)*(phi(x) - 1)") == phi("x") * phi("x") - Element::unit());
  CHECK(expr("D(y,x)^2*phi(z) + Dplus(x,y)") == phi("z") * D("x", "y", 2) + Element::scalar(Dplus("x", "y")));
  CHECK(expr("0") == Element());
}

TEST_CASE("parser errors") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expression(text);
    } catch (const SyntaxError& e) {
      return e.offset;
    }
    return std::string::npos;
  };
  CHECK(offset_of("phi(x") == 5);
  CHECK(offset_of("phi(x) +") == 8);
  CHECK(offset_of("psi(x)") == 0);
  CHECK(offset_of("1/0") == 2);
  CHECK(offset_of("phi(1x)") == 4);
  CHECK(offset_of("phi(x) phi(y)") == 7);
  CHECK_THROWS_AS(parse_expression("phi^-1(x)"), PowerError);
  CHECK_THROWS_AS(parse_expression("D(x,y)^-2"), PowerError);
  try {
    parse_expression("phi(x) +");
  } catch (const SyntaxError& e) {
    CHECK_FALSE(e.expected.empty());
  }
}

TEST_CASE("pretty printing") {
  CHECK(to_string(Element()) == "0");
  CHECK(to_string(Element::unit()) == "1");
  CHECK(to_string(t_functional(expr("phi(x1)*phi(x2)*phi(x3)*phi(x4)"))) ==
        "D(x1,x2)*D(x3,x4) + D(x1,x3)*D(x2,x4) + D(x1,x4)*D(x2,x3)");
  CHECK(to_string(expr("phi^2(x)*phi(y) - 1/2")) == "-1/2 + phi^2(x)*phi(y)");
}

TEST_CASE("pretty output re-parses to the same element") {
  std::vector<PointId> points{pt("x1"), pt("x2"), pt("x3")};
  ElementFamily f = ElementFamily::exhaustive_monomials(points, 3, 2).add_random(40, 9, points, 3, 3);
  for (const auto& u : f.members()) {
    for (const Element& v : {u, chronological(u), connected_T(u, KernelPolicy::Lenient), antipode(u),
                             twisted_product(u, u, RMode::Operator)}) {
      CHECK_MESSAGE(parse_expression(to_string(v)) == v, to_string(v));
    }
  }
}

TEST_CASE("JSON round trips") {
  std::vector<PointId> points{pt("x1"), pt("x2")};
  ElementFamily f = ElementFamily::exhaustive_monomials(points, 2, 2).add_random(20, 1, points, 3, 2);
  for (const auto& u : f.members()) {
    Element v = chronological(u) + twisted_product(u, u, RMode::Operator);
    CHECK(element_from_json(Json::parse(to_json(v).dump())) == v);
  }
  PropPoly p = q(-3, 4) * D("x", "y", 2) * Dplus("y", "x") + q(5);
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(PropPoly(q(8))).dump() == R"([{"coeff":"8/1","symbols":[]}])");
}

TEST_CASE("JSON readers reject malformed documents") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"monomial": []})")), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff": "1/0", "symbols": []}])")), std::invalid_argument);
  CHECK_THROWS_AS(monomial_from_json(Json::parse(R"([{"point": "1x", "power": 1, "mult": 1}])")),
                  std::invalid_argument);
}

TEST_CASE("vertex documents") {
  Vertex v = vertex_from_json(Json::parse(R"([
    {"from": [{"point": "x", "power": 1, "mult": 1}, {"point": "y", "power": 1, "mult": 1}],
     "to": [{"point": "z", "power": 2, "coeff": "1/2"}]}
  ])"));
  CHECK(v.apply(mono("phi(x)*phi(y)")) == q(1, 2) * phi("z", 2));
  CHECK(v.apply(mono("phi(x)")).is_zero());
  CHECK_THROWS_AS(vertex_from_json(Json::parse(R"([{"from": [], "to": [{"point": "z", "power": 0, "coeff": "1"}]}])")),
                  VertexError);
  CHECK_THROWS_AS(vertex_from_json(Json::parse(R"({"from": []})")), std::invalid_argument);
}

TEST_CASE("law report JSON") {
  LawReport r{"antipode", 7, {}};
  CHECK(to_json(r).dump() == R"({"law":"antipode","checked":7,"failures":[]})");
}
