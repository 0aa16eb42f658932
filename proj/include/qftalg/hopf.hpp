#pragma once

// The Hopf algebra H of normal products of a scalar field.
//
// H is the free commutative algebra on the Wick powers φⁿ(x), n >= 1, with
// φ⁰(x) identified with the unit. The unquotiented bialgebra B = S(C), in
// which φ⁰(x) is a generator of its own, is available through
// Monomial::unreduced and Units::Keep. Only B carries the co-module
// co-algebra structure of (Δ', Δ): in H, Δ'(φ⁰) = φ⁰⊗1 + 1⊗φ⁰ clashes with
// Δ'(1) = 1⊗1, so the law checkers and the T_c expansion work in B and
// quotient at the end.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qftalg/point.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

/// The Wick power φⁿ(x). A power of zero only occurs inside B.
struct Generator {
  PointId point;
  unsigned power = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;
};

/// A commutative word in generators, stored as a sorted list of
/// (generator, multiplicity). φ²(x) and φ(x)·φ(x) are different monomials.
class Monomial {
 public:
  using Factor = std::pair<Generator, unsigned>;

  /// The unit 1.
  Monomial() = default;

  /// Drops power-0 factors, sorts and merges.
  static Monomial normalize(std::span<const std::pair<PointId, unsigned>> raw);
  /// Like normalize, but power-0 factors are kept as generators of B.
  static Monomial unreduced(std::span<const std::pair<PointId, unsigned>> raw);
  static Monomial generator(const PointId& point, unsigned power);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  /// Number of generator occurrences (counting multiplicity).
  std::size_t occurrence_count() const;
  /// Σ power × multiplicity; the grading that every reduced coproduct lowers.
  unsigned total_power() const;
  /// True if some factor is φ⁰(x), i.e. the monomial lives in B only.
  bool has_unit_factors() const;
  /// True if every factor is φ⁰ (including the empty monomial); ε = 1 on those.
  bool is_grouplike() const;
  /// One entry per occurrence, in canonical order.
  std::vector<Generator> occurrences() const;
  /// Image in H: drops every φ⁰ factor.
  Monomial quotient() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static Monomial build(std::span<const std::pair<PointId, unsigned>> raw, bool keep_units);
  void push(const Generator& g, unsigned multiplicity);

  std::vector<Factor> factors_;
};

/// A finite PropPoly-linear combination of monomials.
class Element {
 public:
  using TermMap = std::map<Monomial, PropPoly>;

  Element() = default;
  Element(const Monomial& m, PropPoly coeff = PropPoly(1));  // NOLINT
  static Element unit() { return Element(Monomial()); }
  static Element scalar(const PropPoly& c) { return Element(Monomial(), c); }

  void add_term(const Monomial& m, const PropPoly& coeff);
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  PropPoly coefficient(const Monomial& m) const;
  /// Largest occurrence count over the monomials (0 for scalars).
  std::size_t max_occurrences() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const PropPoly& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= PropPoly(-1); }
  friend Element operator*(Element a, const PropPoly& c) { return a *= c; }
  friend Element operator*(const PropPoly& c, Element a) { return a *= c; }
  /// The normal (Wick) product.
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element&, const Element&) = default;

 private:
  TermMap terms_;
};

/// A finite PropPoly-linear combination of k-tuples of monomials.
class Tensor {
 public:
  using Slots = std::vector<Monomial>;
  using TermMap = std::map<Slots, PropPoly>;

  explicit Tensor(std::size_t arity) : arity_(arity) {}
  static Tensor from_element(const Element& u);

  std::size_t arity() const { return arity_; }
  void add_term(Slots slots, const PropPoly& coeff);
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  PropPoly coefficient(const Slots& slots) const;
  /// Arity-1 tensors only.
  Element to_element() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const PropPoly& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t arity_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Tensor plumbing used by the coproduct iterates and the law checkers.

/// Slot-wise normal product of two tensors of equal arity.
Tensor slotwise_product(const Tensor& a, const Tensor& b);
/// a ⊗ b with the slots of b appended after those of a.
Tensor outer_product(const Tensor& a, const Tensor& b);
/// Slot i of the result is slot perm[i] of the input.
Tensor permute_slots(const Tensor& t, std::span<const std::size_t> perm);
/// Replaces slot `slot` by the arity-m tensor f(monomial); result arity is k-1+m.
Tensor expand_slot(const Tensor& t, std::size_t slot, const std::function<Tensor(const Monomial&)>& f);
/// Replaces slot `slot` by the scalar f(monomial); result arity is k-1.
Tensor contract_slot(const Tensor& t, std::size_t slot, const std::function<PropPoly(const Monomial&)>& f);
/// Normal-multiplies slot `second` into slot `first` and drops `second`.
Tensor multiply_slots(const Tensor& t, std::size_t first, std::size_t second);

// ---------------------------------------------------------------------------
// The algebra.

/// Whether Δ emits φ⁰ factors (B) or the unit (H).
enum class Units { Quotient, Keep };

enum class KernelPolicy { Strict, Lenient };

Element normal_product(const Element& u, const Element& v);
/// Image in H of an element of B.
Element quotient(const Element& u);

/// ε: the sum of coefficients of the group-like monomials. On H this is the
/// coefficient of the empty monomial.
PropPoly counit(const Monomial& m);
PropPoly counit(const Element& u);

/// Δ, the binomial splitting of every Wick power, extended multiplicatively.
Tensor coproduct(const Monomial& m, Units units = Units::Quotient);
Tensor coproduct(const Element& u, Units units = Units::Quotient);

/// Δ': every generator is primitive.
Tensor coproduct_prime(const Monomial& m);
Tensor coproduct_prime(const Element& u);

/// u ↦ u - ε(u)·1 under Lenient; under Strict throws NotInKernel unless ε(u) = 0.
Element project_to_kernel(const Element& u, KernelPolicy policy);

/// Δu - u⊗1 - 1⊗u, the reduced Δ used by the antipode recursion.
Tensor reduced_coproduct(const Element& u, KernelPolicy policy = KernelPolicy::Strict);
/// Δ'u - u⊗1 - 1⊗u.
Tensor reduced_prime(const Element& u, KernelPolicy policy = KernelPolicy::Strict);
/// The n-th iterate of the reduced Δ', a tensor of arity n+1. Each step
/// splits the first slot.
Tensor reduced_prime_iter(const Element& u, std::size_t n, KernelPolicy policy = KernelPolicy::Strict);

Element antipode(const Monomial& m);
Element antipode(const Element& u);

#ifdef QFTALG_MUTATION_HOOKS
namespace testing {

// Deliberately wrong coproducts for checking that the law checkers can fail.
enum class CoproductMutation {
  None,
  DropTopTerm,    // Δφⁿ loses its φⁿ⊗1 term
  SkewBinomial,   // Δφⁿ uses C(n,k) + k
  PrimeLeftOnly,  // Δ'g = g⊗1
  PrimeGrouplike, // Δ'g = g⊗1 + 1⊗g + g⊗g
};

void set_coproduct_mutation(CoproductMutation m);
CoproductMutation coproduct_mutation();

class ScopedMutation {
 public:
  explicit ScopedMutation(CoproductMutation m) : previous_(coproduct_mutation()) {
    set_coproduct_mutation(m);
  }
  ~ScopedMutation() { set_coproduct_mutation(previous_); }
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  CoproductMutation previous_;
};

}  // namespace testing
#endif

}  // namespace qftalg
