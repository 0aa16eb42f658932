#pragma once

// The co-quasi-triangular structure ℛ, the twisted product it generates
// (Wick's theorem) and the chronological product T.

#include <span>

#include "qftalg/hopf.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

/// Operator mode contracts with the oriented Wightman symbol D+(x,y);
/// chronological mode with the symmetric Feynman symbol D(x,y).
enum class RMode { Operator, Chronological };

/// ℛ(φᵐ(x), φⁿ(y)) = δ_{m,n} n! S(x,y)ⁿ with S the mode's propagator symbol,
/// oriented from the first argument to the second.
PropPoly r_generators(const Generator& g, const Generator& h, RMode mode);

/// ℛ on monomials via the bicharacter laws
///   ℛ(ab, c) = Σ ℛ(a, c₍₁₎) ℛ(b, c₍₂₎),  ℛ(a, bc) = Σ ℛ(a₍₁₎, b) ℛ(a₍₂₎, c),
/// with ℛ(1, v) = ε(v) and ℛ(u, 1) = ε(u). Factors φ⁰ act as the unit.
/// Memoized per thread.
PropPoly r_bicharacter(const Monomial& u, const Monomial& v, RMode mode);

/// u ∘ v = Σ ℛ(u₍₁₎, v₍₁₎) u₍₂₎ v₍₂₎.
Element twisted_product(const Element& u, const Element& v, RMode mode);

/// T(a₁…a_p) = a₁ ∘ … ∘ a_p. Throws ModeError in operator mode.
Element chronological(std::span<const Generator> factors, RMode mode = RMode::Chronological);
Element chronological(const Monomial& m, RMode mode = RMode::Chronological);
/// T extended linearly.
Element chronological(const Element& u, RMode mode = RMode::Chronological);

/// t(u) = ε(T(u)).
PropPoly t_functional(const Monomial& m, RMode mode = RMode::Chronological);
PropPoly t_functional(const Element& u, RMode mode = RMode::Chronological);

/// Evaluates Σ t(u₍₁₎) u₍₂₎ and T(u) independently and returns the common
/// value. Throws IdentityViolation if they differ.
Element t_expansion_identity(const Element& u, RMode mode = RMode::Chronological);

}  // namespace qftalg
