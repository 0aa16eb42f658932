#include "qftalg/hopf.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "qftalg/errors.hpp"
#include "memo.hpp"

namespace qftalg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::build(std::span<const std::pair<PointId, unsigned>> raw, bool keep_units) {
  std::vector<Generator> gens;
  gens.reserve(raw.size());
  for (const auto& [point, power] : raw) {
    if (power == 0 && !keep_units) continue;
    gens.push_back(Generator{point, power});
  }
  std::sort(gens.begin(), gens.end());
  Monomial m;
  for (const auto& g : gens) m.push(g, 1);
  return m;
}

void Monomial::push(const Generator& g, unsigned multiplicity) {
  if (!factors_.empty() && factors_.back().first == g) {
    factors_.back().second += multiplicity;
  } else {
    factors_.emplace_back(g, multiplicity);
  }
}

Monomial Monomial::normalize(std::span<const std::pair<PointId, unsigned>> raw) {
  return build(raw, false);
}

Monomial Monomial::unreduced(std::span<const std::pair<PointId, unsigned>> raw) {
  return build(raw, true);
}

Monomial Monomial::generator(const PointId& point, unsigned power) {
  Monomial m;
  if (power > 0) m.factors_.emplace_back(Generator{point, power}, 1);
  return m;
}

std::size_t Monomial::occurrence_count() const {
  std::size_t n = 0;
  for (const auto& f : factors_) n += f.second;
  return n;
}

unsigned Monomial::total_power() const {
  unsigned n = 0;
  for (const auto& [g, mult] : factors_) n += g.power * mult;
  return n;
}

bool Monomial::has_unit_factors() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.power == 0; });
}

bool Monomial::is_grouplike() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.first.power == 0; });
}

std::vector<Generator> Monomial::occurrences() const {
  std::vector<Generator> out;
  out.reserve(occurrence_count());
  for (const auto& [g, mult] : factors_) out.insert(out.end(), mult, g);
  return out;
}

Monomial Monomial::quotient() const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first.power > 0) m.factors_.push_back(f);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Monomial& m, PropPoly coeff) {
  if (!coeff.is_zero()) terms_.emplace(m, std::move(coeff));
}

void Element::add_term(const Monomial& m, const PropPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PropPoly Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PropPoly() : it->second;
}

std::size_t Element::max_occurrences() const {
  std::size_t p = 0;
  for (const auto& [m, c] : terms_) p = std::max(p, m.occurrence_count());
  return p;
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const PropPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap scaled;
  for (auto& [m, coeff] : terms_) {
    PropPoly p = coeff * c;
    if (!p.is_zero()) scaled.emplace(m, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor

Tensor Tensor::from_element(const Element& u) {
  Tensor t(1);
  for (const auto& [m, c] : u.terms()) t.add_term({m}, c);
  return t;
}

void Tensor::add_term(Slots slots, const PropPoly& coeff) {
  if (slots.size() != arity_) {
    throw std::logic_error("tensor arity mismatch: expected " + std::to_string(arity_) + ", got " +
                           std::to_string(slots.size()));
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(slots), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PropPoly Tensor::coefficient(const Slots& slots) const {
  auto it = terms_.find(slots);
  return it == terms_.end() ? PropPoly() : it->second;
}

Element Tensor::to_element() const {
  if (arity_ != 1) throw std::logic_error("to_element needs an arity-1 tensor");
  Element u;
  for (const auto& [slots, c] : terms_) u.add_term(slots.front(), c);
  return u;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (other.arity_ != arity_) throw std::logic_error("adding tensors of different arity");
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (other.arity_ != arity_) throw std::logic_error("subtracting tensors of different arity");
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

Tensor& Tensor::operator*=(const PropPoly& c) {
  TermMap scaled;
  for (const auto& [s, coeff] : terms_) {
    PropPoly p = coeff * c;
    if (!p.is_zero()) scaled.emplace(s, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

Tensor slotwise_product(const Tensor& a, const Tensor& b) {
  if (a.arity() != b.arity()) throw std::logic_error("slotwise product of tensors of different arity");
  Tensor out(a.arity());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      Tensor::Slots s(sa.size());
      for (std::size_t i = 0; i < sa.size(); ++i) s[i] = sa[i] * sb[i];
      out.add_term(std::move(s), ca * cb);
    }
  }
  return out;
}

Tensor outer_product(const Tensor& a, const Tensor& b) {
  Tensor out(a.arity() + b.arity());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      Tensor::Slots s = sa;
      s.insert(s.end(), sb.begin(), sb.end());
      out.add_term(std::move(s), ca * cb);
    }
  }
  return out;
}

Tensor permute_slots(const Tensor& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.arity()) throw std::logic_error("permutation size does not match arity");
  Tensor out(t.arity());
  for (const auto& [s, c] : t.terms()) {
    Tensor::Slots p(s.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p[i] = s[perm[i]];
    out.add_term(std::move(p), c);
  }
  return out;
}

Tensor expand_slot(const Tensor& t, std::size_t slot, const std::function<Tensor(const Monomial&)>& f) {
  std::map<Monomial, Tensor> cache;
  std::size_t inner_arity = 0;
  bool have_arity = false;
  for (const auto& [s, c] : t.terms()) {
    auto it = cache.find(s[slot]);
    if (it == cache.end()) it = cache.emplace(s[slot], f(s[slot])).first;
    if (!have_arity) {
      inner_arity = it->second.arity();
      have_arity = true;
    } else if (it->second.arity() != inner_arity) {
      throw std::logic_error("expand_slot: inconsistent arity");
    }
  }
  if (!have_arity) {
    // The zero tensor; the arity of f's image is unknown without a term.
    Tensor probe = f(Monomial());
    return Tensor(t.arity() - 1 + probe.arity());
  }
  Tensor out(t.arity() - 1 + inner_arity);
  for (const auto& [s, c] : t.terms()) {
    const Tensor& inner = cache.at(s[slot]);
    for (const auto& [is, ic] : inner.terms()) {
      Tensor::Slots merged;
      merged.reserve(out.arity());
      merged.insert(merged.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(slot));
      merged.insert(merged.end(), is.begin(), is.end());
      merged.insert(merged.end(), s.begin() + static_cast<std::ptrdiff_t>(slot) + 1, s.end());
      out.add_term(std::move(merged), c * ic);
    }
  }
  return out;
}

Tensor contract_slot(const Tensor& t, std::size_t slot, const std::function<PropPoly(const Monomial&)>& f) {
  Tensor out(t.arity() - 1);
  for (const auto& [s, c] : t.terms()) {
    PropPoly k = f(s[slot]);
    if (k.is_zero()) continue;
    Tensor::Slots rest = s;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(slot));
    out.add_term(std::move(rest), c * k);
  }
  return out;
}

Tensor multiply_slots(const Tensor& t, std::size_t first, std::size_t second) {
  Tensor out(t.arity() - 1);
  for (const auto& [s, c] : t.terms()) {
    Tensor::Slots merged = s;
    merged[first] = s[first] * s[second];
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(second));
    out.add_term(std::move(merged), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mutation hooks

#ifdef QFTALG_MUTATION_HOOKS
namespace testing {
namespace {
std::atomic<CoproductMutation> g_mutation{CoproductMutation::None};
}
void set_coproduct_mutation(CoproductMutation m) { g_mutation.store(m); }
CoproductMutation coproduct_mutation() { return g_mutation.load(); }
}  // namespace testing
#endif

namespace {

#ifdef QFTALG_MUTATION_HOOKS
testing::CoproductMutation active_mutation() { return testing::coproduct_mutation(); }
#endif

struct SplitTerm {
  Monomial left;
  Monomial right;
  Integer coeff;
};

// Δ of a single Wick power.
std::vector<SplitTerm> split_generator(const Generator& g, Units units) {
  std::vector<SplitTerm> out;
  if (g.power == 0) {
    if (units == Units::Keep) {
      Monomial unit_factor = Monomial::unreduced(std::vector{std::pair{g.point, 0u}});
      out.push_back({unit_factor, unit_factor, 1});
    } else {
      out.push_back({Monomial(), Monomial(), 1});
    }
    return out;
  }
  auto power_factor = [&](unsigned k) {
    if (k == 0 && units == Units::Keep) return Monomial::unreduced(std::vector{std::pair{g.point, 0u}});
    return Monomial::generator(g.point, k);
  };
  for (unsigned k = 0; k <= g.power; ++k) {
    Integer c = binomial(g.power, k);
#ifdef QFTALG_MUTATION_HOOKS
    auto mutation = active_mutation();
    if (mutation == testing::CoproductMutation::DropTopTerm && k == g.power) continue;
    if (mutation == testing::CoproductMutation::SkewBinomial) c += k;
#endif
    out.push_back({power_factor(k), power_factor(g.power - k), c});
  }
  return out;
}

std::vector<SplitTerm> split_primitive(const Generator& g) {
  Monomial m = Monomial::unreduced(std::vector{std::pair{g.point, g.power}});
  std::vector<SplitTerm> out{{m, Monomial(), 1}};
#ifdef QFTALG_MUTATION_HOOKS
  if (active_mutation() == testing::CoproductMutation::PrimeLeftOnly) return out;
#endif
  out.push_back({Monomial(), m, 1});
#ifdef QFTALG_MUTATION_HOOKS
  if (active_mutation() == testing::CoproductMutation::PrimeGrouplike) out.push_back({m, m, 1});
#endif
  return out;
}

// Multiplies out the per-occurrence splits of a monomial.
template <class Split>
Tensor multiply_splits(const Monomial& m, Split split) {
  std::map<std::pair<Monomial, Monomial>, Integer> acc;
  acc.emplace(std::pair{Monomial(), Monomial()}, Integer(1));
  for (const auto& g : m.occurrences()) {
    std::vector<SplitTerm> parts = split(g);
    std::map<std::pair<Monomial, Monomial>, Integer> next;
    for (const auto& [key, c] : acc) {
      for (const auto& part : parts) {
        Integer& slot = next[{key.first * part.left, key.second * part.right}];
        slot += c * part.coeff;
      }
    }
    acc = std::move(next);
  }
  Tensor out(2);
  for (const auto& [key, c] : acc) {
    if (c != 0) out.add_term({key.first, key.second}, PropPoly(Rational(c)));
  }
  return out;
}

Tensor trivial_splits(const Element& u) {
  Tensor t(2);
  for (const auto& [m, c] : u.terms()) {
    t.add_term({m, Monomial()}, c);
    t.add_term({Monomial(), m}, c);
  }
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra operations

Element normal_product(const Element& u, const Element& v) { return u * v; }

Element quotient(const Element& u) {
  Element out;
  for (const auto& [m, c] : u.terms()) out.add_term(m.quotient(), c);
  return out;
}

PropPoly counit(const Monomial& m) { return m.is_grouplike() ? PropPoly(1) : PropPoly(); }

PropPoly counit(const Element& u) {
  PropPoly total;
  for (const auto& [m, c] : u.terms()) {
    if (m.is_grouplike()) total += c;
  }
  return total;
}

Tensor coproduct(const Monomial& m, Units units) {
  return multiply_splits(m, [units](const Generator& g) { return split_generator(g, units); });
}

Tensor coproduct(const Element& u, Units units) {
  Tensor out(2);
  for (const auto& [m, c] : u.terms()) {
    Tensor t = coproduct(m, units);
    t *= c;
    out += t;
  }
  return out;
}

Tensor coproduct_prime(const Monomial& m) { return multiply_splits(m, split_primitive); }

Tensor coproduct_prime(const Element& u) {
  Tensor out(2);
  for (const auto& [m, c] : u.terms()) {
    Tensor t = coproduct_prime(m);
    t *= c;
    out += t;
  }
  return out;
}

Element project_to_kernel(const Element& u, KernelPolicy policy) {
  PropPoly e = counit(u);
  if (e.is_zero()) return u;
  if (policy == KernelPolicy::Strict) {
    throw NotInKernel("element has nonzero counit; reduced coproducts, T_c and T_R need ε(u) = 0");
  }
  return u - Element::scalar(e);
}

Tensor reduced_coproduct(const Element& u, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  return coproduct(v) - trivial_splits(v);
}

namespace {

// The reduced Δ' of a basis monomial. Every surviving term has two
// non-empty slots, so the unit has no reduced part.
Tensor reduced_prime_monomial(const Monomial& m) {
  if (m.is_unit()) return Tensor(2);
  return coproduct_prime(m) - trivial_splits(Element(m));
}

}  // namespace

Tensor reduced_prime(const Element& u, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  Tensor out(2);
  for (const auto& [m, c] : v.terms()) {
    Tensor t = reduced_prime_monomial(m);
    t *= c;
    out += t;
  }
  return out;
}

Tensor reduced_prime_iter(const Element& u, std::size_t n, KernelPolicy policy) {
  Element v = project_to_kernel(u, policy);
  Tensor acc = Tensor::from_element(v);
  for (std::size_t step = 0; step < n; ++step) {
    acc = expand_slot(acc, 0, reduced_prime_monomial);
  }
  return acc;
}

Element antipode(const Monomial& m_in) {
  // B is not a Hopf algebra (φ⁰ is group-like without an inverse); S acts on
  // the image in H.
  Monomial m = m_in.quotient();
  if (m.is_unit()) return Element::unit();
  thread_local std::map<Monomial, Element> memo;
  const bool cached = detail::memo_enabled();
  if (cached) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }

  Element s = -Element(m);
  Tensor reduced = coproduct(m) - trivial_splits(Element(m));
  for (const auto& [slots, c] : reduced.terms()) {
    // For the true Δ both slots have strictly lower total power than m. A
    // corrupted Δ may not, and recursing on m itself would never return.
    if (slots[0].total_power() >= m.total_power()) continue;
    s -= (antipode(slots[0]) * Element(slots[1])) * c;
  }
  if (cached) memo.emplace(m, s);
  return s;
}

Element antipode(const Element& u) {
  Element out;
  for (const auto& [m, c] : u.terms()) out += antipode(m) * c;
  return out;
}

}  // namespace qftalg
