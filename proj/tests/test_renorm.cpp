#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/laws.hpp"
#include "qftalg/renorm.hpp"

using namespace qftalg;
using namespace qftalg::test;

namespace {

std::vector<Monomial> family(std::vector<std::string> points, std::size_t p, unsigned n) {
  std::vector<PointId> ids;
  for (auto& x : points) ids.push_back(pt(x));
  std::vector<Monomial> out;
  for (const auto& e : ElementFamily::exhaustive_monomials(ids, p, n).exhaustive) {
    const Monomial& m = e.terms().begin()->first;
    if (!m.is_unit()) out.push_back(m);
  }
  return out;
}

Monomial distinct_ones(std::size_t p) {
  Monomial m;
  for (std::size_t i = 1; i <= p; ++i) m = m * Monomial::generator(pt("x" + std::to_string(i)), 1);
  return m;
}

}  // namespace

TEST_CASE("identity vertex") {
  Vertex v = identity_vertex();
  CHECK(v.apply(mono("phi^3(x)")) == phi("x", 3));
  CHECK(v.apply(mono("phi(x)*phi(y)")).is_zero());
  CHECK(v.apply(Monomial()).is_zero());
  CHECK(v.apply(expr("2*phi(x) + phi(x)*phi(y) + 3")) == q(2) * phi("x"));
  CHECK(Vertex::zero().apply(mono("phi(x)")).is_zero());
}

TEST_CASE("vertex rules are restricted to single generators") {
  CHECK_THROWS_AS(Vertex::from_rules({{mono("phi(x)"), phi("x") * phi("y")}}), VertexError);
  CHECK_THROWS_AS(Vertex::from_rules({{mono("phi(x)"), Element::unit()}}), VertexError);
  Vertex v = Vertex::from_rules({{mono("phi(x)*phi(y)"), q(1, 2) * phi("z", 2)}});
  CHECK(v.apply(mono("phi(x)*phi(y)")) == q(1, 2) * phi("z", 2));
  CHECK(v.apply(mono("phi(x)")).is_zero());
}

TEST_CASE("connected_T examples") {
  CHECK(connected_T(phi("x1") * phi("x2")) == Element::scalar(D("x1", "x2")));
  CHECK(connected_T(phi("x1", 2) * phi("x2", 2)) ==
        (phi("x1") * phi("x2")) * (q(4) * D("x1", "x2")) + Element::scalar(q(2) * D("x1", "x2", 2)));
  for (unsigned n = 1; n <= 4; ++n) CHECK(connected_T(phi("x", n)) == phi("x", n));
  CHECK(connected_T(Element()).is_zero());
  CHECK_THROWS_AS(connected_T(expr("1 + phi(x)*phi(y)")), NotInKernel);
  CHECK(connected_T(expr("1 + phi(x)*phi(y)"), KernelPolicy::Lenient) == Element::scalar(D("x", "y")));
}

TEST_CASE("t_c examples") {
  CHECK(t_c_functional(phi("x1") * phi("x2")) == D("x1", "x2"));
  CHECK(t_c_functional(Element(distinct_ones(4))).is_zero());
  CHECK(t_c_functional(phi("x1", 2) * phi("x2", 2) * phi("x3", 2)) ==
        q(8) * D("x1", "x2") * D("x1", "x3") * D("x2", "x3"));
}

TEST_CASE("comodule expansion of T_c") {
  auto both = [](const Element& u, const Element& expected) {
    ExpansionCheck c = comodule_expansion_check(u);
    CHECK(c.holds);
    CHECK(c.direct == expected);
    CHECK(c.expanded == expected);
  };
  both(phi("x1") * phi("x2"), Element::scalar(D("x1", "x2")));
  both(phi("x1", 2) * phi("x2", 2),
       (phi("x1") * phi("x2")) * (q(4) * D("x1", "x2")) + Element::scalar(q(2) * D("x1", "x2", 2)));
  // A single generator: the B-coproduct leaves φ⁰(x) ⊗ φ(x), a lone vertex
  // with t_c = 1, so the expansion also holds here.
  both(phi("x"), phi("x"));
  both(phi("x", 3), phi("x", 3));

  for (const auto& m : family({"x1", "x2", "x3"}, 3, 3)) {
    CHECK_NOTHROW(comodule_expansion_check(Element(m)));
  }
}

TEST_CASE("the expansion fails when Δ quotients φ⁰ to 1") {
  // With t_c(1) = 0 and Δ taken in H, three degree-1 vertices pick up the
  // disconnected pairs D(xᵢ,xⱼ)φ(x_k), while T_c vanishes.
  Element u = phi("x1") * phi("x2") * phi("x3");
  Element naive;
  for (const auto& [slots, c] : coproduct(u).terms()) {
    naive += Element(slots[1], c * (slots[0].is_unit() ? PropPoly() : t_c_functional(Element(slots[0]))));
  }
  CHECK(connected_T(u).is_zero());
  CHECK(naive == phi("x3") * D("x1", "x2") + phi("x2") * D("x1", "x3") + phi("x1") * D("x2", "x3"));
  CHECK(comodule_expansion_check(u).holds);
}

TEST_CASE("T_c terms beyond the occurrence count vanish") {
  for (const auto& m : family({"x1", "x2"}, 4, 2)) {
    CHECK(connected_T_term(Element(m), m.occurrence_count() + 1).is_zero());
    CHECK(renormalized_T_term(Element(m), identity_vertex(), m.occurrence_count() + 1).is_zero());
  }
}

TEST_CASE("renormalized_T") {
  for (std::size_t p = 1; p <= 4; ++p) {
    Element u(distinct_ones(p));
    CHECK(renormalized_T(u, identity_vertex()) == chronological(u));
    CHECK(renormalized_T(u, Vertex::zero()).is_zero());
  }
  Element u = phi("x1", 2) * phi("x2") * phi("x3", 3);
  CHECK(renormalized_T(u, identity_vertex()) == chronological(u));

  Vertex partial = Vertex::from_rules({{mono("phi(x1)"), phi("x1")}, {mono("phi(x2)"), phi("x2")}});
  CHECK(renormalized_T(phi("x1") * phi("x2"), partial) == Element::scalar(D("x1", "x2")) + phi("x1") * phi("x2"));
  CHECK_THROWS_AS(renormalized_T(Element::unit(), identity_vertex()), NotInKernel);
}

TEST_CASE("a vertex that merges pairs contributes at n = 1") {
  // 𝒪(φ(x)φ(y)) = φ²(z): the n = 1 term is T(φ²(z)) = φ²(z); the n = 2
  // term only sees single generators, which 𝒪 kills.
  Vertex v = Vertex::from_rules({{mono("phi(x)*phi(y)"), phi("z", 2)}});
  CHECK(renormalized_T(phi("x") * phi("y"), v) == phi("z", 2));
  CHECK(renormalized_T_term(phi("x") * phi("y"), v, 2).is_zero());
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(11);
  auto members = family({"x1", "x2", "x3"}, 3, 2);
  Vertex v = Vertex::from_rules({{mono("phi(x1)"), phi("x1")}, {mono("phi(x1)*phi(x2)"), q(2) * phi("x3")}}, true);
  for (int k = 0; k < 20; ++k) {
    Element a(members[rng() % members.size()]);
    Element b(members[rng() % members.size()]);
    PropPoly c = q(static_cast<long>(rng() % 5) + 1, 3);
    CHECK(connected_T(a * c + b) == connected_T(a) * c + connected_T(b));
    CHECK(renormalized_T(a * c + b, v) == renormalized_T(a, v) * c + renormalized_T(b, v));
  }
}

TEST_CASE("renormalized terms are multilinear in the vertex") {
  // Scaling every image by λ scales the n-th term by λⁿ.
  Element u = phi("x1") * phi("x2") * phi("x3", 2);
  Vertex v = identity_vertex();
  std::map<Monomial, Element> scaled;
  for (const auto& m : family({"x1", "x2", "x3"}, 1, 2)) scaled[m] = Element(m) * q(3);
  Vertex w = Vertex::from_rules(scaled);
  for (std::size_t n = 1; n <= 3; ++n) {
    long lambda = 1;
    for (std::size_t i = 0; i < n; ++i) lambda *= 3;
    CHECK(renormalized_T_term(u, w, n) == renormalized_T_term(u, v, n) * q(lambda));
  }
}
