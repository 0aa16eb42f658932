#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/graphs.hpp"
#include "qftalg/laws.hpp"
#include "qftalg/renorm.hpp"

using namespace qftalg;
using namespace qftalg::test;

namespace {

DegreeSequence degrees(std::vector<unsigned> d) {
  DegreeSequence s;
  for (std::size_t i = 0; i < d.size(); ++i) s.points.push_back(pt("x" + std::to_string(i + 1)));
  s.degrees = std::move(d);
  return s;
}

Monomial ones(std::size_t p) {
  Monomial m;
  for (std::size_t i = 1; i <= p; ++i) m = m * Monomial::generator(pt("x" + std::to_string(i)), 1);
  return m;
}

AdjacencyTerm matrix_term(std::size_t p, std::vector<unsigned> m) {
  AdjacencyTerm t;
  t.order = p;
  t.matrix = std::move(m);
  return t;
}

std::vector<Monomial> family(std::vector<std::string> points, std::size_t p, unsigned n) {
  std::vector<PointId> ids;
  for (auto& x : points) ids.push_back(pt(x));
  std::vector<Monomial> out;
  for (const auto& e : ElementFamily::exhaustive_monomials(ids, p, n).exhaustive) out.push_back(e.terms().begin()->first);
  return out;
}

}  // namespace

TEST_CASE("enumerate_adjacency examples") {
  auto one = enumerate_adjacency(degrees({1, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].at(0, 1) == 1);
  CHECK(one[0].weight == 1);

  CHECK(enumerate_adjacency(degrees({1, 1, 1})).empty());

  auto two = enumerate_adjacency(degrees({2, 2}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].at(0, 1) == 2);
  CHECK(two[0].weight == 2);
  CHECK(two[0].scalar == q(2) * D("x1", "x2", 2));

  CHECK(enumerate_adjacency(degrees({})).size() == 1);
  CHECK(enumerate_adjacency(degrees({3})).empty());
  CHECK(enumerate_adjacency(degrees({0})).size() == 1);
}

TEST_CASE("enumeration agrees with a brute-force matrix search") {
  const std::vector<std::vector<unsigned>> cases = {
      {1, 1, 2}, {2, 2, 2}, {3, 3, 2}, {1, 2, 3, 2}, {3, 3, 3, 3}, {2, 0, 2}, {4, 1, 1, 2}, {1, 1, 1, 1, 1, 1}, {3, 1, 2, 2, 2},
  };
  for (const auto& d : cases) {
    auto got = enumerate_adjacency_serial(degrees(d));
    auto expected = oracle::brute_force_matrices(d);
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(got[k].matrix == expected[k]);
      // weight is ∏ nᵢ! / ∏ m_ij!
      Rational w = 1;
      for (unsigned n : d) w *= Rational(factorial(n));
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) w /= Rational(factorial(got[k].at(i, j)));
      }
      CHECK(got[k].weight == w);
    }
  }
}

TEST_CASE("enumeration is strictly increasing and parallel matches serial") {
  for (const auto& d : std::vector<std::vector<unsigned>>{{3, 3, 3, 3}, {2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}, {4, 3, 3, 2, 2}}) {
    auto serial = enumerate_adjacency_serial(degrees(d));
    auto parallel = enumerate_adjacency(degrees(d));
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(serial[k].matrix == parallel[k].matrix);
      CHECK(serial[k].scalar == parallel[k].scalar);
      if (k > 0) CHECK(serial[k - 1].matrix < serial[k].matrix);
    }
  }
}

TEST_CASE("perfect matchings are counted by (p-1)!!") {
  for (std::size_t p = 1; p <= 8; ++p) {
    auto n = enumerate_adjacency(DegreeSequence::from_monomial(ones(p))).size();
    CHECK(n == (p % 2 == 0 ? oracle::double_factorial(p - 1) : 0));
  }
}

TEST_CASE("is_connected") {
  CHECK_FALSE(is_connected(matrix_term(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0})));
  CHECK(is_connected(matrix_term(3, {0, 1, 1, 1, 0, 1, 1, 1, 0})));
  CHECK(is_connected(matrix_term(2, {0, 3, 3, 0})));
  CHECK(is_connected(matrix_term(1, {0})));
  CHECK_FALSE(is_connected(matrix_term(0, {})));
  CHECK_FALSE(is_connected(matrix_term(2, {0, 0, 0, 0})));
}

TEST_CASE("t and t_c via graphs") {
  CHECK(t_via_graphs(Monomial()) == q(1));
  CHECK(t_connected_via_graphs(Monomial()).is_zero());
  CHECK(t_via_graphs(mono("phi(x1)*phi(x2)")) == D("x1", "x2"));
  CHECK(t_via_graphs(mono("phi^2(x1)*phi^2(x2)*phi^2(x3)")) == q(8) * D("x1", "x2") * D("x1", "x3") * D("x2", "x3"));
  CHECK(t_via_graphs(ones(4)) ==
        D("x1", "x2") * D("x3", "x4") + D("x1", "x3") * D("x2", "x4") + D("x1", "x4") * D("x2", "x3"));
  CHECK(t_connected_via_graphs(ones(4)).is_zero());
  CHECK(t_connected_via_graphs(mono("phi^2(x1)*phi^2(x2)")) == q(2) * D("x1", "x2", 2));
  for (unsigned n = 1; n <= 4; ++n) CHECK(t_connected_via_graphs(mono("phi^" + std::to_string(n) + "(x)")).is_zero());
  CHECK(t_via_graphs(mono("phi(x)*phi(x)")) == D("x", "x"));
}

TEST_CASE("graph sums agree with the leg-matching oracle and with T") {
  for (const auto& m : family({"x1", "x2", "x3"}, 4, 3)) {
    if (m.total_power() > 10) continue;
    CHECK_MESSAGE(t_via_graphs(m) == oracle::leg_matching_t(m), to_string(m));
    CHECK_MESSAGE(t_connected_via_graphs(m) == oracle::leg_matching_tc(m), to_string(m));
  }
  for (const auto& m : family({"x1", "x2"}, 3, 3)) {
    CHECK(t_via_graphs(m) == t_functional(m));
    CHECK(t_connected_via_graphs(m) == counit(connected_T(Element(m), KernelPolicy::Lenient)));
  }
}

TEST_CASE("export DOT") {
  std::string dot = export_graphs(mono("phi(x1)*phi(x2)"), false, GraphFormat::Dot);
  CHECK(dot.find("graph G_1 {") != std::string::npos);
  CHECK(dot.find("label=\"weight 1/1\";") != std::string::npos);
  CHECK(dot.find("\"1:phi^1_x1\" -- \"2:phi^1_x2\";") != std::string::npos);

  std::string doubled = export_graphs(mono("phi^2(x1)*phi^2(x2)"), false, GraphFormat::Dot);
  std::size_t edges = 0;
  for (std::size_t at = doubled.find(" -- "); at != std::string::npos; at = doubled.find(" -- ", at + 1)) ++edges;
  CHECK(edges == 2);

  CHECK(export_graphs(mono("phi(x1)*phi(x2)*phi(x3)"), false, GraphFormat::Dot).find("graph G_") == std::string::npos);
  CHECK(export_graphs(mono("phi(x)*phi(x)"), false, GraphFormat::Dot).find("self_point=true") != std::string::npos);
}

TEST_CASE("export JSON") {
  auto doc = nlohmann::json::parse(export_graphs(mono("phi^2(x1)*phi^2(x2)*phi^2(x3)"), true, GraphFormat::Json));
  REQUIRE(doc["graphs"].size() == 1);
  const auto& g = doc["graphs"][0];
  CHECK(g["weight"] == "8/1");
  CHECK(g["connected"] == true);
  CHECK(g["vertices"].size() == 3);
  CHECK(g["edges"].size() == 3);
  for (const auto& e : g["edges"]) CHECK(e["mult"] == 1);
  CHECK(doc["vertex_model"] == "generator-occurrence");

  auto empty = nlohmann::json::parse(export_graphs(mono("phi(x1)*phi(x2)*phi(x3)"), false, GraphFormat::Json));
  CHECK(empty["graphs"].empty());

  auto disconnected = nlohmann::json::parse(export_graphs(ones(4), true, GraphFormat::Json));
  CHECK(disconnected["graphs"].empty());
  CHECK(nlohmann::json::parse(export_graphs(ones(4), false, GraphFormat::Json))["graphs"].size() == 3);
}

TEST_CASE("graph formats") {
  CHECK(parse_graph_format("dot") == GraphFormat::Dot);
  CHECK(parse_graph_format("json") == GraphFormat::Json);
  CHECK_THROWS_AS(parse_graph_format("graphml"), UnsupportedFormat);
}
