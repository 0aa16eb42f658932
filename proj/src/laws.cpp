#include "qftalg/laws.hpp"

#include <array>
#include <functional>
#include <random>

#include "qftalg/format.hpp"

namespace qftalg {

// ---------------------------------------------------------------------------
// Families

ElementFamily ElementFamily::exhaustive_monomials(const std::vector<PointId>& points, std::size_t max_generators,
                                                  unsigned max_power) {
  std::vector<Monomial> gens;
  for (const auto& x : points) {
    for (unsigned n = 1; n <= max_power; ++n) gens.push_back(Monomial::generator(x, n));
  }
  ElementFamily family;
  // Multisets as non-decreasing index sequences.
  std::function<void(std::size_t, std::size_t, const Monomial&)> rec = [&](std::size_t start, std::size_t left,
                                                                          const Monomial& acc) {
    family.exhaustive.emplace_back(acc);
    if (left == 0) return;
    for (std::size_t g = start; g < gens.size(); ++g) rec(g, left - 1, acc * gens[g]);
  };
  rec(0, max_generators, Monomial());
  return family;
}

ElementFamily& ElementFamily::add_random(std::size_t count, std::uint64_t seed, const std::vector<PointId>& points,
                                         std::size_t max_generators, unsigned max_power) {
  // Raw engine output only, so the draws do not depend on the standard
  // library's distribution implementations.
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  for (std::size_t k = 0; k < count; ++k) {
    Element u;
    const std::size_t terms = 1 + below(3);
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m;
      const std::size_t occ = below(max_generators + 1);
      for (std::size_t i = 0; i < occ; ++i) {
        m = m * Monomial::generator(points[below(points.size())], 1 + static_cast<unsigned>(below(max_power)));
      }
      long num = static_cast<long>(below(7)) - 3;
      if (num == 0) num = 1;
      const long den = 1 + static_cast<long>(below(3));
      u.add_term(m, PropPoly(make_rational(num, den)));
    }
    random.push_back(std::move(u));
  }
  return *this;
}

std::vector<Element> ElementFamily::members() const {
  std::vector<Element> all = exhaustive;
  all.insert(all.end(), random.begin(), random.end());
  return all;
}

// ---------------------------------------------------------------------------

namespace {

using Failures = std::vector<LawFailure>;

// Runs check(i) for i in [0, n) and concatenates the failures in index
// order, so reports do not depend on the schedule.
LawReport run_instances(std::string name, std::size_t n, Execution exec,
                        const std::function<void(std::size_t, Failures&)>& check) {
  std::vector<Failures> per(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto& sink = per[static_cast<std::size_t>(i)];
    try {
      check(static_cast<std::size_t>(i), sink);
    } catch (const std::exception& e) {
      sink.push_back({"exception", {}, e.what(), ""});
    }
  }
  LawReport report{std::move(name), n, {}};
  for (auto& f : per) report.failures.insert(report.failures.end(), f.begin(), f.end());
  return report;
}

template <class T>
void expect_equal(Failures& sink, const char* law, std::vector<Element> inputs, const T& lhs, const T& rhs) {
  if (lhs == rhs) return;
  sink.push_back({law, std::move(inputs), to_string(lhs), to_string(rhs)});
}

Tensor apply_coproduct(CoproductKind which, const Element& u) {
  return which == CoproductKind::Delta ? coproduct(u) : coproduct_prime(u);
}

Tensor apply_coproduct(CoproductKind which, const Monomial& m) {
  return which == CoproductKind::Delta ? coproduct(m) : coproduct_prime(m);
}

}  // namespace

LawReport check_coalgebra(CoproductKind which, const ElementFamily& family, Execution exec) {
  const auto members = family.members();
  const std::string name = which == CoproductKind::Delta ? "coalgebra:Delta" : "coalgebra:DeltaPrime";
  auto split = [which](const Monomial& m) { return apply_coproduct(which, m); };
  return run_instances(name, members.size(), exec, [&](std::size_t i, Failures& sink) {
    const Element& u = members[i];
    const Tensor du = apply_coproduct(which, u);

    expect_equal(sink, "coassociativity", {u}, expand_slot(du, 0, split), expand_slot(du, 1, split));

    auto eps = [](const Monomial& m) { return counit(m); };
    expect_equal(sink, "left counit", {u}, contract_slot(du, 0, eps).to_element(), u);
    expect_equal(sink, "right counit", {u}, contract_slot(du, 1, eps).to_element(), u);

    const std::array<std::size_t, 2> swap{1, 0};
    expect_equal(sink, "cocommutativity", {u}, permute_slots(du, swap), du);
  });
}

LawReport check_bialgebra(const ElementFamily& family, Execution exec) {
  std::vector<std::pair<const Element*, const Element*>> pairs;
  for (const auto& a : family.exhaustive) {
    for (const auto& b : family.exhaustive) pairs.emplace_back(&a, &b);
  }
  const std::size_t r = family.random.size();
  for (std::size_t i = 0; i < r; ++i) {
    pairs.emplace_back(&family.random[i], &family.random[(i + 1) % r]);
    if (!family.exhaustive.empty()) {
      pairs.emplace_back(&family.random[i], &family.exhaustive[i % family.exhaustive.size()]);
    }
  }
  return run_instances("bialgebra", pairs.size(), exec, [&](std::size_t i, Failures& sink) {
    const Element& u = *pairs[i].first;
    const Element& v = *pairs[i].second;
    const Element uv = u * v;
    expect_equal(sink, "Delta morphism", {u, v}, coproduct(uv), slotwise_product(coproduct(u), coproduct(v)));
    expect_equal(sink, "counit morphism", {u, v}, counit(uv), counit(u) * counit(v));
    expect_equal(sink, "DeltaPrime morphism", {u, v}, coproduct_prime(uv),
                 slotwise_product(coproduct_prime(u), coproduct_prime(v)));
  });
}

LawReport check_comodule_coalgebra(const ElementFamily& family, Execution exec) {
  const auto members = family.members();
  auto psi = [](const Monomial& m) { return coproduct(m, Units::Keep); };
  auto prime = [](const Monomial& m) { return coproduct_prime(m); };
  return run_instances("comodule", members.size(), exec, [&](std::size_t i, Failures& sink) {
    const Element& u = members[i];
    const Tensor lhs = expand_slot(coproduct(u, Units::Keep), 0, prime);

    // (ψ⊗ψ)Δ'u has slots u'₍₁₎ u'₍₂₎ u''₍₁₎ u''₍₂₎; τ in the middle, then μ on the last two.
    Tensor rhs = expand_slot(expand_slot(coproduct_prime(u), 1, psi), 0, psi);
    const std::array<std::size_t, 4> middle_swap{0, 2, 1, 3};
    rhs = multiply_slots(permute_slots(rhs, middle_swap), 2, 3);
    expect_equal(sink, "comodule coalgebra", {u}, lhs, rhs);
  });
}

LawReport check_antipode(const ElementFamily& family, Execution exec) {
  const auto members = family.members();
  return run_instances("antipode", members.size(), exec, [&](std::size_t i, Failures& sink) {
    const Element& u = members[i];
    Element left;
    Element right;
    for (const auto& [slots, c] : coproduct(u).terms()) {
      left += (antipode(slots[0]) * Element(slots[1])) * c;
      right += (Element(slots[0]) * antipode(slots[1])) * c;
    }
    const Element unit_part = Element::scalar(counit(u));
    expect_equal(sink, "S * Id", {u}, left, unit_part);
    expect_equal(sink, "Id * S", {u}, right, unit_part);
  });
}

ElementFamily default_family(Law law, std::uint64_t seed, std::size_t random_count) {
  const std::vector<PointId> points{PointId("x1"), PointId("x2"), PointId("x3")};
  std::size_t max_generators = 3;
  unsigned max_power = 3;
  switch (law) {
    case Law::Bialgebra:
      max_generators = 2;
      break;
    case Law::Comodule:
      max_power = 2;
      break;
    default:
      break;
  }
  auto family = ElementFamily::exhaustive_monomials(points, max_generators, max_power);
  family.add_random(random_count, seed, points, max_generators, max_power);
  return family;
}

LawReport run_law(Law law, std::uint64_t seed, std::size_t random_count, Execution exec) {
  const auto family = default_family(law, seed, random_count);
  switch (law) {
    case Law::CoalgebraDelta:
      return check_coalgebra(CoproductKind::Delta, family, exec);
    case Law::CoalgebraDeltaPrime:
      return check_coalgebra(CoproductKind::DeltaPrime, family, exec);
    case Law::Bialgebra:
      return check_bialgebra(family, exec);
    case Law::Comodule:
      return check_comodule_coalgebra(family, exec);
    case Law::Antipode:
      return check_antipode(family, exec);
  }
  return {};
}

std::vector<LawReport> check_all(std::uint64_t seed, std::size_t random_count, Execution exec) {
  std::vector<LawReport> out;
  for (Law law : {Law::CoalgebraDelta, Law::CoalgebraDeltaPrime, Law::Bialgebra, Law::Comodule, Law::Antipode}) {
    out.push_back(run_law(law, seed, random_count, exec));
  }
  return out;
}

}  // namespace qftalg
