#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pslab/characters.hpp"

namespace pslab {

// One factor chi^exponent(alpha*n + beta) of a complete character sum.
// alpha = 0 with beta != 0 is a constant factor; alpha = beta = 0 is the
// zero polynomial and is rejected where root data is needed.
struct LinearFactor {
  felt alpha = 1;
  felt beta = 0;
  std::int64_t exponent = 1;
};

// sum over n in F_q of prod_i chi^{e_i}(alpha_i n + beta_i), with any
// vanishing factor killing its term.
struct FactoredSum {
  const MultiplicativeCharacter* chi = nullptr;
  std::vector<LinearFactor> factors;
};

// Exact brute-force evaluation over all n.  Exponents accumulate mod (q-1)
// per term, so the result is bytewise independent of factor order.
cplx factored_char_sum(const MultiplicativeCharacter& chi,
                       std::span<const LinearFactor> factors);
cplx factored_char_sum(const FactoredSum& s);

// Root multiplicities of prod (alpha_i n + beta_i)^{e_i} with each exponent
// lifted to its nonnegative residue mod ord(chi); true iff some root has
// multiplicity exactly 1.  Throws DegenerateFactor on a zero-polynomial
// factor.  Trivial chi lifts every exponent to 0, so the answer is false.
bool has_simple_root(const MultiplicativeCharacter& chi,
                     std::span<const LinearFactor> factors);
bool has_simple_root(const FactoredSum& s);

struct WeilReport {
  double sum_abs = 0.0;
  double bound = 0.0;          // (m-1) sqrt(q), m = distinct roots
  std::size_t distinct_roots = 0;
  bool applicable = false;     // simple root present and chi nontrivial
  bool pass = false;           // no violated claim
};

WeilReport weil_check(const MultiplicativeCharacter& chi,
                      std::span<const LinearFactor> factors);
WeilReport weil_check(const FactoredSum& s);

// "alpha,beta,exp;..." rendering used by the weil CSV.
std::string factors_to_string(std::span<const LinearFactor> factors);

}  // namespace pslab
