#include "pslab/ffield.hpp"

#include <string>

namespace pslab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

felt smallest_primitive_root(std::uint32_t q) {
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t r = 2; r < q; ++r) {
    bool generator = true;
    for (auto p : factors) {
      if (pow_mod(r, (q - 1) / p, q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return r;
  }
  return 0;  // unreachable for prime q >= 3
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q < 3 || !is_prime(q)) {
    throw NonPrimeModulus("field modulus must be a prime >= 3, got " + std::to_string(q));
  }
  if (q > 1000000) {
    throw std::invalid_argument("field modulus exceeds supported bound 10^6");
  }
  root_ = smallest_primitive_root(q);
  dlog_.assign(q, 0);
  rootpow_.assign(q - 1, 0);
  felt x = 1;
  for (std::uint32_t e = 0; e + 1 < q; ++e) {
    rootpow_[e] = x;
    dlog_[x] = e;
    x = mul(x, root_);
  }
}

felt FieldSpec::inv(felt a) const {
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(q_));
  return rootpow_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
}

felt FieldSpec::div(felt a, felt b) const {
  if (b == 0) throw DivisionByZero("division by 0 in F_" + std::to_string(q_));
  return mul(a, inv(b));
}

std::uint32_t FieldSpec::dlog(felt x) const {
  if (x == 0) throw ZeroArgument("dlog(0) undefined");
  return dlog_[x];
}

}  // namespace pslab
