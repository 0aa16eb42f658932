#include "qftalg/expression.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "qftalg/errors.hpp"

namespace qftalg {

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) out += (out.empty() ? "" : ", ") + e;
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) + ": expected one of {" +
                         describe(expected) + "}, found " + found),
      offset(offset),
      expected(std::move(expected)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  Element expr() {
    skip_ws();
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    Element acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Element unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  Element primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(primary_tokens());
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::string word = identifier();
      if (word == "phi") return field();
      if (word == "D") return propagator(false);
      if (word == "Dplus") return propagator(true);
      pos_ = start;
      fail(primary_tokens());
    }
    fail(primary_tokens());
  }

  Element number() {
    Integer num = integer();
    Integer den = 1;
    if (accept('/')) {
      skip_ws();
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) throw SyntaxError(at, {"non-zero denominator"}, "'0'");
    }
    Rational r(num, den);
    r.canonicalize();
    return Element::scalar(PropPoly(r));
  }

  Element field() {
    unsigned power = 1;
    if (accept('^')) power = exponent();
    expect('(');
    PointId x = point();
    expect(')');
    return Element(Monomial::generator(x, power));
  }

  Element propagator(bool oriented) {
    expect('(');
    PointId a = point();
    expect(',');
    PointId b = point();
    expect(')');
    unsigned power = 1;
    if (accept('^')) power = exponent();
    PropSymbol s = oriented ? PropSymbol::wightman(a, b) : PropSymbol::feynman(a, b);
    return Element::scalar(PropPoly::symbol(s, power));
  }

  unsigned exponent() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      throw PowerError(pos_, "negative exponent at byte " + std::to_string(pos_));
    }
    const std::size_t at = pos_;
    Integer n = integer();
    if (!n.fits_uint_p()) throw PowerError(at, "exponent too large at byte " + std::to_string(at));
    return static_cast<unsigned>(n.get_ui());
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail({"integer"});
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  PointId point() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail({"point label"});
    return PointId(identifier());
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  static std::vector<std::string> primary_tokens() { return {"number", "'phi'", "'D'", "'Dplus'", "'('"}; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ >= text_.size() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace qftalg
