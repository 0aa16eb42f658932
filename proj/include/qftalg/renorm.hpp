#pragma once

// Connected and renormalized chronological products, built on the iterated
// reduced Δ'.

#include <cstddef>
#include <map>

#include "qftalg/hopf.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

/// A generalized vertex 𝒪: a linear map H → C given on basis monomials.
/// Images are combinations of single Wick powers φⁿ(x), n >= 1. Monomials
/// without a rule map to 0, except that the identity vertex maps every
/// single generator to itself.
class Vertex {
 public:
  static Vertex identity();
  static Vertex zero();
  /// Throws VertexError if an image contains anything but single generators.
  static Vertex from_rules(std::map<Monomial, Element> rules, bool identity_on_generators = false);

  Element apply(const Monomial& m) const;
  Element apply(const Element& u) const;

  const std::map<Monomial, Element>& rules() const { return rules_; }
  bool identity_on_generators() const { return identity_on_generators_; }

 private:
  std::map<Monomial, Element> rules_;
  bool identity_on_generators_ = false;
};

Vertex identity_vertex();

/// T_c(u) = Σ_{n>=1} (-1)^{n+1}/n · T(u'₍₁₎)…T(u'₍ₙ₎) over the (n-1)-th
/// reduced Δ' iterate; the T's are multiplied with the normal product.
/// Linear in u with T_c(1) = 0.
Element connected_T(const Element& u, KernelPolicy policy = KernelPolicy::Strict);
/// The n-th summand alone (n >= 1).
Element connected_T_term(const Element& u, std::size_t n, KernelPolicy policy = KernelPolicy::Strict);

/// t_c = ε ∘ T_c.
PropPoly t_c_functional(const Element& u, KernelPolicy policy = KernelPolicy::Strict);

enum class CheckMode { Assert, Report };

struct ExpansionCheck {
  Element direct;    // T_c(u)
  Element expanded;  // Σ t_c(u₍₁₎) u₍₂₎
  bool holds = false;
};

/// Compares T_c(u) with Σ t_c(u₍₁₎) u₍₂₎. The sum runs over Δ in B, where a
/// vertex whose power is split off entirely stays behind as φ⁰(x): as a lone
/// vertex it has t_c = 1, beside others it disconnects the graph. In Assert
/// mode a mismatch throws IdentityViolation.
ExpansionCheck comodule_expansion_check(const Element& u, CheckMode mode = CheckMode::Assert,
                                        KernelPolicy policy = KernelPolicy::Strict);

/// T_R(u) = Σ_{n>=1} 1/n! · T(𝒪(u'₍₁₎)…𝒪(u'₍ₙ₎)).
Element renormalized_T(const Element& u, const Vertex& vertex, KernelPolicy policy = KernelPolicy::Strict);
Element renormalized_T_term(const Element& u, const Vertex& vertex, std::size_t n,
                            KernelPolicy policy = KernelPolicy::Strict);

}  // namespace qftalg
