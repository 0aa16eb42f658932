#include "qftalg/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "qftalg/errors.hpp"

namespace qftalg {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_plain_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

namespace {

Integer parse_integer(std::string_view digits, bool allow_sign) {
  std::string_view body = digits;
  if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed integer '" + std::string(digits) + "'");
  }
  Integer value;
  value.set_str(std::string(digits.front() == '+' ? digits.substr(1) : digits), 10);
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash), true);
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

PropSymbol PropSymbol::feynman(PointId a, PointId b) {
  if (b < a) std::swap(a, b);
  return PropSymbol(PropKind::Symmetric, std::move(a), std::move(b));
}

PropSymbol PropSymbol::wightman(PointId from, PointId to) {
  return PropSymbol(PropKind::Oriented, std::move(from), std::move(to));
}

SymbolPowers multiply_symbols(const SymbolPowers& a, const SymbolPowers& b) {
  SymbolPowers out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

PropPoly::PropPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(SymbolPowers{}, constant);
}

PropPoly PropPoly::symbol(const PropSymbol& s, unsigned power) {
  PropPoly p;
  SymbolPowers key;
  if (power > 0) key.emplace_back(s, power);
  p.terms_.emplace(std::move(key), Rational(1));
  return p;
}

PropPoly PropPoly::from_terms(const std::vector<std::pair<SymbolPowers, Rational>>& raw) {
  PropPoly p;
  for (const auto& [symbols, c] : raw) {
    SymbolPowers key;
    for (const auto& sp : symbols) {
      if (sp.second == 0) continue;
      key = multiply_symbols(key, SymbolPowers{sp});
    }
    p.add_term(key, c);
  }
  return p;
}

bool PropPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PropPoly::constant_term() const {
  auto it = terms_.find(SymbolPowers{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<PropSymbol> PropPoly::symbols() const {
  std::set<PropSymbol> out;
  for (const auto& [key, c] : terms_) {
    for (const auto& [s, e] : key) out.insert(s);
  }
  return out;
}

void PropPoly::normalize() {
  std::vector<std::pair<SymbolPowers, Rational>> raw(terms_.begin(), terms_.end());
  *this = from_terms(raw);
}

Rational PropPoly::evaluate(const std::map<PropSymbol, Rational>& assignment) const {
  Rational total = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (const auto& [s, e] : key) {
      auto it = assignment.find(s);
      if (it == assignment.end()) {
        throw MissingSymbol("no value assigned to propagator " +
                            std::string(s.kind() == PropKind::Symmetric ? "D(" : "Dplus(") +
                            s.source().label() + "," + s.target().label() + ")");
      }
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

void PropPoly::add_term(const SymbolPowers& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PropPoly& PropPoly::operator+=(const PropPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

PropPoly& PropPoly::operator-=(const PropPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

PropPoly operator*(const PropPoly& a, const PropPoly& b) {
  PropPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(multiply_symbols(ka, kb), ca * cb);
    }
  }
  return out;
}

PropPoly& PropPoly::operator*=(const PropPoly& other) {
  *this = *this * other;
  return *this;
}

PropPoly& PropPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [key, coeff] : terms_) coeff *= c;
  }
  return *this;
}

PropPoly operator-(PropPoly a) {
  for (auto& [key, coeff] : a.terms_) coeff = -coeff;
  return a;
}

}  // namespace qftalg
