#pragma once

// Executable checkers for the structural identities of H: coalgebra laws
// for Δ and Δ', the bialgebra morphism laws, the co-module co-algebra
// compatibility of (Δ', Δ) and the antipode axiom.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qftalg/hopf.hpp"

namespace qftalg {

struct LawFailure {
  std::string law;  // the sub-law, e.g. "coassociativity"
  std::vector<Element> inputs;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::string law_name;
  std::size_t instances_checked = 0;
  std::vector<LawFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Exhaustive monomials plus seeded random linear combinations with small
/// rational, propagator-free coefficients.
struct ElementFamily {
  std::vector<Element> exhaustive;
  std::vector<Element> random;

  /// Every monomial with at most max_generators occurrences and powers in
  /// [1, max_power] over the given points, the unit included.
  static ElementFamily exhaustive_monomials(const std::vector<PointId>& points, std::size_t max_generators,
                                            unsigned max_power);
  /// Appends `count` random elements; same seed, same elements.
  ElementFamily& add_random(std::size_t count, std::uint64_t seed, const std::vector<PointId>& points,
                            std::size_t max_generators, unsigned max_power);

  std::vector<Element> members() const;
  std::size_t size() const { return exhaustive.size() + random.size(); }
};

enum class CoproductKind { Delta, DeltaPrime };
enum class Execution { Serial, Parallel };

LawReport check_coalgebra(CoproductKind which, const ElementFamily& family, Execution exec = Execution::Parallel);
/// Δ(uv) = Δu Δv, ε(uv) = ε(u)ε(v) and Δ'(uv) = Δ'u Δ'v on all pairs of
/// exhaustive members plus pairs formed with the random members.
LawReport check_bialgebra(const ElementFamily& family, Execution exec = Execution::Parallel);
/// (Δ'⊗Id)Δ = (Id⊗Id⊗μ)(Id⊗τ⊗Id)(Δ⊗Δ)Δ', evaluated in B (Δ with Units::Keep).
LawReport check_comodule_coalgebra(const ElementFamily& family, Execution exec = Execution::Parallel);
/// μ(S⊗Id)Δu = ε(u)1 = μ(Id⊗S)Δu.
LawReport check_antipode(const ElementFamily& family, Execution exec = Execution::Parallel);

enum class Law { CoalgebraDelta, CoalgebraDeltaPrime, Bialgebra, Comodule, Antipode };

/// Points {x1,x2,x3}. Coalgebra and antipode: p <= 3, powers <= 3.
/// Bialgebra: p <= 2, powers <= 3. Co-module: p <= 3, powers <= 2.
ElementFamily default_family(Law law, std::uint64_t seed, std::size_t random_count = 100);

LawReport run_law(Law law, std::uint64_t seed, std::size_t random_count = 100,
                  Execution exec = Execution::Parallel);
std::vector<LawReport> check_all(std::uint64_t seed, std::size_t random_count = 100,
                                 Execution exec = Execution::Parallel);

}  // namespace qftalg
