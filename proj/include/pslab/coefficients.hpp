#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "pslab/principal_series.hpp"

namespace pslab {

enum class CoeffSource { direct, charsum };

// Matrix coefficient c(g) = <rho(g)v, v> of the torus-fixed newvector,
// tabulated over the whole group in enumeration order.
struct CoefficientFunction {
  std::uint32_t q = 0;
  std::uint32_t j = 0;
  CoeffSource source = CoeffSource::direct;
  std::vector<cplx> values;
};

// <rho(g)v, v>, conjugate-linear in the first slot.
cplx coeff_direct(const RepresentationModel& model, const Eigen::VectorXcd& v,
                  const ProjectiveMatrix& g);

// Closed evaluation (q-1)^{-1} chi^{-1}(det g) sum_n chi((c+an)(d+bn)) chi^{-1}(n),
// summed over n in F_q^x with chi(0) = 0 killing degenerate terms.  Stated for
// g outside WT; throws DomainWT there (the exact values are 1 on T and
// chi(-1) on wT).  Works on any representative: scaling (a,b,c,d) cancels.
cplx coeff_charsum(const MultiplicativeCharacter& chi, felt a, felt b, felt c, felt d);
cplx coeff_charsum(const MultiplicativeCharacter& chi, const ProjectiveMatrix& g);

// |sum_n chi((c+an)(d+bn)) chi^{-1}(n)| = (q-1)|c(g)|, without the det phase.
double coeff_charsum_scaled_abs(const MultiplicativeCharacter& chi,
                                const ProjectiveMatrix& g);

CoefficientFunction tabulate_coefficients(const RepresentationModel& model,
                                          const Eigen::VectorXcd& v, CoeffSource source,
                                          unsigned threads);

struct BoundsReport {
  double max_off_wt_scaled = 0.0;  // max over g not in WT of (q-1)|c(g)|
  double weil_bound = 0.0;         // 2 sqrt(q)
  std::size_t count_T = 0;
  std::size_t count_wT = 0;
  double worst_T_dev = 0.0;   // max |c(g) - 1| on T
  double worst_wT_dev = 0.0;  // max |c(g) - chi(-1)| on wT
  bool all_pass = false;
};

// Full sweep of the group: c = 1 on T and c = chi(-1) on wT through the
// representation itself (tolerance tol_exact), and (q-1)|c| <= 2 sqrt(q) off
// WT through the character sum.
BoundsReport verify_bounds(const RepresentationModel& model, const Eigen::VectorXcd& v,
                           unsigned threads, double tol_exact = 1e-12);

struct CrossOracleReport {
  std::size_t checked = 0;
  double max_abs_diff = 0.0;
  bool exhaustive = false;
  bool pass = false;
};

// coeff_direct vs coeff_charsum on g outside WT; exhaustive for q <= 31,
// otherwise a deterministic 10^4-element sample seeded by (q, j).
CrossOracleReport cross_oracle_check(const RepresentationModel& model,
                                     const Eigen::VectorXcd& v, double tol,
                                     unsigned threads);

}  // namespace pslab
