#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qftalg {

/// An abstract spacetime point. Points carry no coordinates; the only
/// structure is the lexicographic order on labels, which every canonical
/// form in the library is built on.
class PointId {
 public:
  PointId() = default;
  // Throws std::invalid_argument unless the label matches [A-Za-z][A-Za-z0-9_]*.
  explicit PointId(std::string label);

  static bool is_valid_label(std::string_view label);

  const std::string& label() const { return label_; }

  friend bool operator==(const PointId&, const PointId&) = default;
  friend std::strong_ordering operator<=>(const PointId& a, const PointId& b) {
    return a.label_.compare(b.label_) <=> 0;
  }

 private:
  std::string label_;
};

}  // namespace qftalg
