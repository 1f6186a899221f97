#include "pslab/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pslab {

MultiplicativeCharacter::MultiplicativeCharacter(const FieldSpec& field, std::uint32_t index)
    : field_(&field), j_(index) {
  const std::uint32_t m = field.q() - 1;
  if (index >= m) {
    throw std::invalid_argument("character index " + std::to_string(index) +
                                " out of range [0, " + std::to_string(m - 1) + "]");
  }
  unit_.resize(m);
  for (std::uint32_t k = 0; k < m; ++k) {
    unit_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
  }
}

}  // namespace pslab
