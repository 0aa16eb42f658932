#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qftalg {

struct MissingSymbol : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the reduced coproducts, T_c and T_R when ε(u) ≠ 0 under the strict policy.
struct NotInKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The chronological product is only defined in the commutative (Feynman) mode.
struct ModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes to the same value disagreed. Always an implementation bug.
struct IdentityViolation : std::runtime_error {
  IdentityViolation(const std::string& what, std::string lhs, std::string rhs)
      : std::runtime_error(what + "\n  lhs: " + lhs + "\n  rhs: " + rhs),
        lhs(std::move(lhs)), rhs(std::move(rhs)) {}
  std::string lhs;
  std::string rhs;
};

struct UnsupportedFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VertexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset;
  std::vector<std::string> expected;
};

struct PowerError : std::runtime_error {
  PowerError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset(offset) {}
  std::size_t offset;
};

}  // namespace qftalg
