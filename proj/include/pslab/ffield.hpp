#pragma once

#include <cstdint>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

// Value of an element of F_q, always reduced into [0, q).
using felt = std::uint32_t;

bool is_prime(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Prime field F_q together with its smallest primitive root and the full
// discrete-log table root^dlog(x) = x.  Immutable after construction, so it
// can be shared read-only between worker threads.
//
// The smallest primitive root is chosen so that character indices and all
// derived CSV output are reproducible across runs and implementations.
class FieldSpec {
 public:
  // Throws NonPrimeModulus unless q is a prime with 3 <= q.
  // Moduli above 10^6 are rejected (the table is O(q)).
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  felt root() const { return root_; }

  felt add(felt a, felt b) const {
    felt s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  felt sub(felt a, felt b) const { return a >= b ? a - b : a + q_ - b; }
  felt neg(felt a) const { return a == 0 ? 0 : q_ - a; }
  felt mul(felt a, felt b) const {
    return static_cast<felt>(static_cast<std::uint64_t>(a) * b % q_);
  }
  felt inv(felt a) const;             // throws DivisionByZero on 0
  felt div(felt a, felt b) const;     // throws DivisionByZero on b = 0

  // Exponent e in [0, q-2] with root^e = x.  Throws ZeroArgument on 0.
  std::uint32_t dlog(felt x) const;

  // root^e for any e (reduced mod q-1).
  felt root_pow(std::uint64_t e) const { return rootpow_[e % (q_ - 1)]; }

  felt reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<felt>(r);
  }

 private:
  std::uint32_t q_ = 0;
  felt root_ = 0;
  std::vector<std::uint32_t> dlog_;   // index 0 unused
  std::vector<felt> rootpow_;         // e in [0, q-2] -> root^e
};

inline FieldSpec make_field(std::uint32_t q) { return FieldSpec(q); }

}  // namespace pslab
