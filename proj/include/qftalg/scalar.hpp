#pragma once

// Exact scalars: GMP rationals and the polynomial ring over formal
// propagator symbols D(x,y) (symmetric) and D+(x,y) (oriented).

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qftalg/point.hpp"

namespace qftalg {

using Integer = mpz_class;
/// GMP keeps every mpq_class result in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
/// Always "p/q", also for integers ("8/1"). Used by every JSON document.
std::string to_fraction_string(const Rational& r);
/// "p" for integers, "p/q" otherwise.
std::string to_plain_string(const Rational& r);
/// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

enum class PropKind : std::uint8_t { Symmetric, Oriented };

/// A propagator symbol. Symmetric symbols (the Feynman propagator D) are
/// stored with source <= target so that D(x,y) and D(y,x) are the same
/// value; oriented symbols (the Wightman function D+) keep their order.
class PropSymbol {
 public:
  static PropSymbol feynman(PointId a, PointId b);
  static PropSymbol wightman(PointId from, PointId to);

  PropKind kind() const { return kind_; }
  const PointId& source() const { return source_; }
  const PointId& target() const { return target_; }
  bool is_self_point() const { return source_ == target_; }

  friend bool operator==(const PropSymbol&, const PropSymbol&) = default;
  friend std::strong_ordering operator<=>(const PropSymbol&, const PropSymbol&) = default;

 private:
  PropSymbol(PropKind kind, PointId source, PointId target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}

  PropKind kind_;
  PointId source_;
  PointId target_;
};

/// A monomial in propagator symbols: sorted by symbol, exponents >= 1.
using SymbolPowers = std::vector<std::pair<PropSymbol, unsigned>>;

/// Multivariate polynomial with Rational coefficients. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class PropPoly {
 public:
  using TermMap = std::map<SymbolPowers, Rational>;

  PropPoly() = default;
  PropPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PropPoly(long constant) : PropPoly(Rational(constant)) {}  // NOLINT

  static PropPoly symbol(const PropSymbol& s, unsigned power = 1);
  /// Builds from arbitrary terms: merges like terms, sorts and merges the
  /// symbol lists, drops zero coefficients and zero exponents.
  static PropPoly from_terms(const std::vector<std::pair<SymbolPowers, Rational>>& raw);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the symbol-free term.
  Rational constant_term() const;
  const TermMap& terms() const& { return terms_; }
  // Range-for over a temporary's terms() would otherwise dangle.
  TermMap terms() && { return std::move(terms_); }
  std::set<PropSymbol> symbols() const;

  /// Re-establishes the canonical form. A no-op on any value built through
  /// the public interface.
  void normalize();

  /// Exact substitution. Throws MissingSymbol when a symbol of the
  /// polynomial has no value in the assignment.
  Rational evaluate(const std::map<PropSymbol, Rational>& assignment) const;

  PropPoly& operator+=(const PropPoly& other);
  PropPoly& operator-=(const PropPoly& other);
  PropPoly& operator*=(const PropPoly& other);
  PropPoly& operator*=(const Rational& c);

  friend PropPoly operator+(PropPoly a, const PropPoly& b) { return a += b; }
  friend PropPoly operator-(PropPoly a, const PropPoly& b) { return a -= b; }
  friend PropPoly operator*(const PropPoly& a, const PropPoly& b);
  friend PropPoly operator*(PropPoly a, const Rational& c) { return a *= c; }
  friend PropPoly operator*(const Rational& c, PropPoly a) { return a *= c; }
  friend PropPoly operator-(PropPoly a);

  friend bool operator==(const PropPoly&, const PropPoly&) = default;
  friend auto operator<=>(const PropPoly& a, const PropPoly& b) { return a.terms_ <=> b.terms_; }

 private:
  void add_term(const SymbolPowers& key, const Rational& c);

  TermMap terms_;
};

SymbolPowers multiply_symbols(const SymbolPowers& a, const SymbolPowers& b);

}  // namespace qftalg
