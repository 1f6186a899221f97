#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pslab/ffield.hpp"

namespace pslab {

using cplx = std::complex<double>;

// Multiplicative character of F_q^x, encoded by its index j in [0, q-2]:
// chi(root^k) = exp(2 pi i * j k / (q-1)), with the convention chi(0) = 0.
//
// Values are kept as exact exponents mod (q-1) for as long as possible and
// converted to complex doubles only when a sum is actually accumulated.
// The character keeps a pointer to its field; the FieldSpec must outlive it.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(const FieldSpec& field, std::uint32_t index);

  const FieldSpec& field() const { return *field_; }
  std::uint32_t index() const { return j_; }
  bool trivial() const { return j_ == 0; }

  // (q-1) / gcd(j, q-1)
  std::uint32_t order() const {
    const std::uint32_t m = field_->q() - 1;
    return m / std::gcd(j_, m);
  }

  // Exact exponent of chi(x) in units of 2 pi/(q-1); x must be nonzero.
  std::uint32_t exponent(felt x) const {
    const std::uint32_t m = field_->q() - 1;
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(j_) * field_->dlog(x) % m);
  }

  cplx eval(felt x) const { return x == 0 ? cplx(0.0, 0.0) : unit_[exponent(x)]; }

  // exp(2 pi i e/(q-1)), table lookup; e arbitrary.
  cplx unit(std::uint64_t e) const { return unit_[e % unit_.size()]; }

  // chi(-1) = (-1)^j, exact.
  int at_minus_one() const {
    const std::uint32_t m = field_->q() - 1;
    return (static_cast<std::uint64_t>(j_) * (m / 2)) % m == 0 ? 1 : -1;
  }

 private:
  const FieldSpec* field_;
  std::uint32_t j_;
  std::vector<cplx> unit_;  // the (q-1)-th roots of unity
};

}  // namespace pslab
