#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pslab/errors.hpp"
#include "pslab/ffield.hpp"

namespace pslab {

// Canonical representative of an element of PGL(2,F_q): the first nonzero
// entry in scan order (a,b,c,d) is scaled to 1.
struct ProjectiveMatrix {
  felt a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;
};

// Point of P^1(F_q), canonical form: last nonzero coordinate scaled to 1,
// so the q+1 points are [u:1] for u in F_q and [1:0].
struct ProjectivePoint {
  felt x = 0, y = 1;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

enum class SubgroupTag { T, wT, B_proper, generic };

const char* to_string(SubgroupTag tag);

// PGL(2,F_q): canonical forms, group operations, deterministic enumeration,
// and the four-way classification against the diagonal torus T, its Weyl
// translate wT, and the Borel B.
//
// Enumeration order is lexicographic in the canonical tuple (a,b,c,d); every
// vector indexed "per group element" in this project uses this order.  The
// group only needs mod-q arithmetic (no dlog), so any prime q >= 2 works.
class Pgl2 {
 public:
  explicit Pgl2(std::uint32_t prime_q);
  explicit Pgl2(const FieldSpec& field) : Pgl2(field.q()) {}

  static constexpr const char* kEnumOrderId = "pgl2-lex-abcd/v1";

  std::uint32_t q() const { return q_; }
  std::size_t size() const {
    const std::size_t n = q_;
    return n * n * n - n;
  }

  // Accepts arbitrary integers, reduces mod q; throws SingularMatrix when
  // the determinant vanishes.
  ProjectiveMatrix canonicalize(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t d) const;

  ProjectiveMatrix multiply(const ProjectiveMatrix& x, const ProjectiveMatrix& y) const;
  ProjectiveMatrix inverse(const ProjectiveMatrix& x) const;
  ProjectiveMatrix identity() const { return {1, 0, 0, 1}; }
  ProjectiveMatrix weyl() const { return {0, 1, q_ - 1, 0}; }  // w = (0 1; -1 0)

  // Determinant of the canonical representative.
  felt det(const ProjectiveMatrix& m) const {
    return submod(mulmod(m.a, m.d), mulmod(m.b, m.c));
  }

  ProjectiveMatrix element(std::size_t i) const;
  std::size_t index_of(const ProjectiveMatrix& m) const;

  SubgroupTag classify(const ProjectiveMatrix& m) const {
    if (m.b == 0 && m.c == 0) return SubgroupTag::T;
    if (m.a == 0 && m.d == 0) return SubgroupTag::wT;
    if (m.c == 0) return SubgroupTag::B_proper;  // b != 0 here
    return SubgroupTag::generic;
  }
  bool in_WT(const ProjectiveMatrix& m) const {
    return (m.b == 0 && m.c == 0) || (m.a == 0 && m.d == 0);
  }

  // P^1 points, indexed 0..q: index u -> [u:1], index q -> [1:0].
  std::size_t point_count() const { return static_cast<std::size_t>(q_) + 1; }
  ProjectivePoint point(std::size_t idx) const;
  ProjectivePoint point_from(std::int64_t x, std::int64_t y) const;
  std::size_t point_index(const ProjectivePoint& p) const {
    return p.y == 1 ? p.x : q_;
  }

  felt mulmod(felt a, felt b) const {
    return static_cast<felt>(static_cast<std::uint64_t>(a) * b % q_);
  }
  felt addmod(felt a, felt b) const {
    felt s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  felt submod(felt a, felt b) const { return a >= b ? a - b : a + q_ - b; }
  felt invmod(felt a) const { return inv_[a]; }

 private:
  felt reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<felt>(r);
  }
  ProjectiveMatrix scale_canonical(felt a, felt b, felt c, felt d) const;

  std::uint32_t q_;
  std::vector<felt> inv_;  // x^-1 for x in [1, q)
};

}  // namespace pslab
