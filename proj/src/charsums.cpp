#include "pslab/charsums.hpp"

#include <cmath>
#include <map>

namespace pslab {

cplx factored_char_sum(const MultiplicativeCharacter& chi,
                       std::span<const LinearFactor> factors) {
  const FieldSpec& F = chi.field();
  const std::uint32_t q = F.q();
  const std::uint64_t m = q - 1;

  // exponents normalised once into [0, q-2]
  std::vector<std::uint64_t> e(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::int64_t r = factors[i].exponent % static_cast<std::int64_t>(m);
    e[i] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  }

  cplx acc(0.0, 0.0);
  for (felt n = 0; n < q; ++n) {
    std::uint64_t s = 0;
    bool dead = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const felt x = F.add(factors[i].beta, F.mul(factors[i].alpha, n));
      if (x == 0) {
        dead = true;
        break;
      }
      s += e[i] * F.dlog(x) % m;
    }
    if (dead) continue;
    acc += chi.unit(static_cast<std::uint64_t>(chi.index()) * (s % m) % m);
  }
  return acc;
}

cplx factored_char_sum(const FactoredSum& s) {
  return factored_char_sum(*s.chi, s.factors);
}

namespace {

// root -> lifted multiplicity, exponents taken mod ord(chi)
std::map<felt, std::uint64_t> root_multiplicities(const MultiplicativeCharacter& chi,
                                                  std::span<const LinearFactor> factors) {
  const FieldSpec& F = chi.field();
  const std::int64_t ord = chi.order();
  std::map<felt, std::uint64_t> mult;
  for (const auto& f : factors) {
    if (f.alpha == 0) {
      if (f.beta == 0) {
        throw DegenerateFactor("zero polynomial factor has no root data");
      }
      continue;  // constant factor
    }
    const std::int64_t r = f.exponent % ord;
    const std::uint64_t lifted = static_cast<std::uint64_t>(r < 0 ? r + ord : r);
    if (lifted == 0) continue;
    const felt root = F.mul(F.neg(f.beta), F.inv(f.alpha));
    mult[root] += lifted;
  }
  return mult;
}

}  // namespace

bool has_simple_root(const MultiplicativeCharacter& chi,
                     std::span<const LinearFactor> factors) {
  for (const auto& [root, m] : root_multiplicities(chi, factors)) {
    (void)root;
    if (m == 1) return true;
  }
  return false;
}

bool has_simple_root(const FactoredSum& s) { return has_simple_root(*s.chi, s.factors); }

WeilReport weil_check(const MultiplicativeCharacter& chi,
                      std::span<const LinearFactor> factors) {
  WeilReport r;
  r.sum_abs = std::abs(factored_char_sum(chi, factors));
  try {
    const auto mult = root_multiplicities(chi, factors);
    r.distinct_roots = mult.size();
    for (const auto& [root, m] : mult) {
      (void)root;
      if (m == 1) {
        r.applicable = true;
        break;
      }
    }
  } catch (const DegenerateFactor&) {
    r.applicable = false;
  }
  const std::uint32_t q = chi.field().q();
  if (r.applicable) {
    r.bound = (static_cast<double>(r.distinct_roots) - 1.0) * std::sqrt(q);
    r.pass = r.sum_abs <= r.bound + 1e-9 * q;
  } else {
    r.pass = true;  // nothing asserted
  }
  return r;
}

WeilReport weil_check(const FactoredSum& s) { return weil_check(*s.chi, s.factors); }

std::string factors_to_string(std::span<const LinearFactor> factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(factors[i].alpha);
    out += ',';
    out += std::to_string(factors[i].beta);
    out += ',';
    out += std::to_string(factors[i].exponent);
  }
  return out;
}

}  // namespace pslab
