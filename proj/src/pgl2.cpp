#include "pslab/pgl2.hpp"

#include <string>

namespace pslab {

const char* to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::T: return "T";
    case SubgroupTag::wT: return "wT";
    case SubgroupTag::B_proper: return "B";
    default: return "generic";
  }
}

Pgl2::Pgl2(std::uint32_t prime_q) : q_(prime_q) {
  if (q_ < 2 || !is_prime(q_)) {
    throw NonPrimeModulus("PGL(2) modulus must be prime, got " + std::to_string(prime_q));
  }
  inv_.assign(q_, 0);
  for (felt x = 1; x < q_; ++x) {
    inv_[x] = static_cast<felt>(pow_mod(x, q_ - 2, q_));
  }
}

ProjectiveMatrix Pgl2::scale_canonical(felt a, felt b, felt c, felt d) const {
  felt lead = a ? a : (b ? b : (c ? c : d));
  if (lead != 1) {
    const felt s = inv_[lead];
    a = mulmod(a, s);
    b = mulmod(b, s);
    c = mulmod(c, s);
    d = mulmod(d, s);
  }
  return {a, b, c, d};
}

ProjectiveMatrix Pgl2::canonicalize(std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t d) const {
  const felt ra = reduce(a), rb = reduce(b), rc = reduce(c), rd = reduce(d);
  if (submod(mulmod(ra, rd), mulmod(rb, rc)) == 0) {
    throw SingularMatrix("matrix has zero determinant mod " + std::to_string(q_));
  }
  return scale_canonical(ra, rb, rc, rd);
}

ProjectiveMatrix Pgl2::multiply(const ProjectiveMatrix& x, const ProjectiveMatrix& y) const {
  const felt a = addmod(mulmod(x.a, y.a), mulmod(x.b, y.c));
  const felt b = addmod(mulmod(x.a, y.b), mulmod(x.b, y.d));
  const felt c = addmod(mulmod(x.c, y.a), mulmod(x.d, y.c));
  const felt d = addmod(mulmod(x.c, y.b), mulmod(x.d, y.d));
  return scale_canonical(a, b, c, d);
}

ProjectiveMatrix Pgl2::inverse(const ProjectiveMatrix& x) const {
  // adjugate; the determinant is a projective scalar
  return scale_canonical(x.d, submod(0, x.b), submod(0, x.c), x.a);
}

// Enumeration layout: the a = 0 block (b = 1, c in [1,q), d in [0,q)) comes
// first, ordered by (c,d); then the a = 1 block ordered by (b,c,d) with
// d != b*c.  Both blocks are exactly the canonical tuples in lex order.
ProjectiveMatrix Pgl2::element(std::size_t i) const {
  const std::size_t zero_block = static_cast<std::size_t>(q_ - 1) * q_;
  if (i < zero_block) {
    const felt c = static_cast<felt>(1 + i / q_);
    const felt d = static_cast<felt>(i % q_);
    return {0, 1, c, d};
  }
  std::size_t t = i - zero_block;
  const std::size_t per_bc = q_ - 1;
  const felt b = static_cast<felt>(t / (static_cast<std::size_t>(q_) * per_bc));
  t %= static_cast<std::size_t>(q_) * per_bc;
  const felt c = static_cast<felt>(t / per_bc);
  const felt k = static_cast<felt>(t % per_bc);
  const felt skip = mulmod(b, c);  // d = b*c is singular
  const felt d = k < skip ? k : k + 1;
  return {1, b, c, d};
}

std::size_t Pgl2::index_of(const ProjectiveMatrix& m) const {
  const std::size_t zero_block = static_cast<std::size_t>(q_ - 1) * q_;
  if (m.a == 0) {
    return static_cast<std::size_t>(m.c - 1) * q_ + m.d;
  }
  const std::size_t per_bc = q_ - 1;
  const felt skip = mulmod(m.b, m.c);
  const felt rank = m.d < skip ? m.d : m.d - 1;
  return zero_block +
         (static_cast<std::size_t>(m.b) * q_ + m.c) * per_bc + rank;
}

ProjectivePoint Pgl2::point(std::size_t idx) const {
  if (idx < q_) return {static_cast<felt>(idx), 1};
  return {1, 0};
}

ProjectivePoint Pgl2::point_from(std::int64_t x, std::int64_t y) const {
  const felt rx = reduce(x), ry = reduce(y);
  if (rx == 0 && ry == 0) {
    throw std::invalid_argument("projective point needs a nonzero coordinate");
  }
  if (ry != 0) return {mulmod(rx, inv_[ry]), 1};
  return {1, 0};
}

}  // namespace pslab
