#include "qftalg/point.hpp"

#include <cctype>
#include <stdexcept>

namespace qftalg {

PointId::PointId(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) {
    throw std::invalid_argument("invalid point label '" + label_ + "'");
  }
}

bool PointId::is_valid_label(std::string_view label) {
  if (label.empty() || !std::isalpha(static_cast<unsigned char>(label.front()))) return false;
  for (char c : label) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace qftalg
