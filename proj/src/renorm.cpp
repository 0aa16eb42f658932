#include "qftalg/renorm.hpp"

#include <stdexcept>

#include "memo.hpp"
#include "qftalg/coqts.hpp"
#include "qftalg/errors.hpp"
#include "qftalg/format.hpp"

namespace qftalg {

// ---------------------------------------------------------------------------
// Vertex

Vertex Vertex::identity() {
  Vertex v;
  v.identity_on_generators_ = true;
  return v;
}

Vertex Vertex::zero() { return Vertex(); }

Vertex Vertex::from_rules(std::map<Monomial, Element> rules, bool identity_on_generators) {
  for (const auto& [from, image] : rules) {
    for (const auto& [m, c] : image.terms()) {
      if (m.occurrence_count() != 1 || m.has_unit_factors()) {
        throw VertexError("vertex image of " + to_string(from) + " contains " + to_string(m) +
                          ", which is not a single Wick power phi^n(x) with n >= 1");
      }
    }
  }
  Vertex v;
  v.rules_ = std::move(rules);
  v.identity_on_generators_ = identity_on_generators;
  return v;
}

Element Vertex::apply(const Monomial& m) const {
  if (auto it = rules_.find(m); it != rules_.end()) return it->second;
  if (identity_on_generators_ && m.occurrence_count() == 1 && !m.has_unit_factors()) return Element(m);
  return Element();
}

Element Vertex::apply(const Element& u) const {
  Element out;
  for (const auto& [m, c] : u.terms()) out += apply(m) * c;
  return out;
}

Vertex identity_vertex() { return Vertex::identity(); }

// ---------------------------------------------------------------------------

namespace {

Rational connected_coefficient(std::size_t n) {
  // -(-1)^n / n
  Rational c(1, static_cast<unsigned long>(n));
  return n % 2 == 1 ? c : Rational(-c);
}

Rational inverse_factorial(std::size_t n) {
  Rational c(Integer(1), factorial(static_cast<unsigned>(n)));
  c.canonicalize();
  return c;
}

// The (n-1)-th reduced Δ' iterate of a basis monomial. It vanishes for n
// beyond the occurrence count p; the summation bound relies on that, so the
// first vanishing iterate is checked rather than assumed.
// A B-monomial made only of φ⁰ factors has ε = 1; it is split as it stands,
// not projected to ker ε.
Tensor splitting(const Monomial& m, std::size_t n) {
  if (n == 1) return Tensor::from_element(Element(m));
  return reduced_prime_iter(Element(m), n - 1, KernelPolicy::Lenient);
}

void check_nilpotent(const Monomial& m) {
  const std::size_t p = m.occurrence_count();
  if (!splitting(m, p + 1).is_zero()) {
    throw std::logic_error("reduced coproduct iterate does not vanish beyond the occurrence count for " +
                           to_string(m));
  }
}

Element connected_term_monomial(const Monomial& m, std::size_t n) {
  Element out;
  if (m.is_unit()) return out;
  for (const auto& [slots, c] : splitting(m, n).terms()) {
    Element product = Element::unit();
    for (const auto& s : slots) product = product * chronological(s);
    out += product * c;
  }
  return out * PropPoly(connected_coefficient(n));
}

Element connected_monomial(const Monomial& m) {
  if (m.is_unit()) return Element();
  thread_local std::map<Monomial, Element> memo;
  const bool cached = detail::memo_enabled();
  if (cached) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  check_nilpotent(m);
  Element value;
  for (std::size_t n = 1; n <= m.occurrence_count(); ++n) value += connected_term_monomial(m, n);
  if (cached) memo.emplace(m, value);
  return value;
}

Element renormalized_term_monomial(const Monomial& m, const Vertex& vertex, std::size_t n) {
  Element out;
  if (m.is_unit()) return out;
  for (const auto& [slots, c] : splitting(m, n).terms()) {
    Element product = Element::unit();
    for (const auto& s : slots) {
      product = product * vertex.apply(s);
      if (product.is_zero()) break;
    }
    if (product.is_zero()) continue;
    out += chronological(product) * c;
  }
  return out * PropPoly(inverse_factorial(n));
}

}  // namespace

Element connected_T(const Element& u, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  Element out;
  for (const auto& [m, c] : v.terms()) out += connected_monomial(m) * c;
  return out;
}

Element connected_T_term(const Element& u, std::size_t n, KernelPolicy policy) {
  if (n == 0) throw std::invalid_argument("connected_T_term: n starts at 1");
  Element v = project_to_kernel(u, policy);
  Element out;
  for (const auto& [m, c] : v.terms()) out += connected_term_monomial(m, n) * c;
  return out;
}

PropPoly t_c_functional(const Element& u, KernelPolicy policy) { return counit(connected_T(u, policy)); }

ExpansionCheck comodule_expansion_check(const Element& u, CheckMode mode, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  ExpansionCheck result;
  result.direct = connected_T(v, policy);
  for (const auto& [m, c] : v.terms()) {
    for (const auto& [slots, k] : coproduct(m, Units::Keep).terms()) {
      PropPoly tc = counit(connected_monomial(slots[0]));
      if (tc.is_zero()) continue;
      result.expanded.add_term(slots[1].quotient(), c * k * tc);
    }
  }
  result.holds = result.direct == result.expanded;
  if (!result.holds && mode == CheckMode::Assert) {
    throw IdentityViolation("T_c(u) != sum t_c(u(1)) u(2) for u = " + to_string(u), to_string(result.direct),
                            to_string(result.expanded));
  }
  return result;
}

Element renormalized_T(const Element& u, const Vertex& vertex, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  Element out;
  for (const auto& [m, c] : v.terms()) {
    if (m.is_unit()) continue;
    check_nilpotent(m);
    for (std::size_t n = 1; n <= m.occurrence_count(); ++n) out += renormalized_term_monomial(m, vertex, n) * c;
  }
  return out;
}

Element renormalized_T_term(const Element& u, const Vertex& vertex, std::size_t n, KernelPolicy policy) {
  if (n == 0) throw std::invalid_argument("renormalized_T_term: n starts at 1");
  Element v = project_to_kernel(u, policy);
  Element out;
  for (const auto& [m, c] : v.terms()) out += renormalized_term_monomial(m, vertex, n) * c;
  return out;
}

}  // namespace qftalg
