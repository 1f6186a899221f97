#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pslab/coefficients.hpp"
#include "pslab/principal_series.hpp"

namespace pslab {

// Complex-valued function on PGL(2,F_q), indexed by the canonical group
// enumeration.  All integrals, norms and convolutions use the probability
// Haar measure (mass 1/|H| per element).
struct GroupFunction {
  std::uint32_t q = 0;
  std::vector<cplx> values;

  std::size_t size() const { return values.size(); }
};

GroupFunction constant_function(const Pgl2& G, cplx value);

// (f1 * f2)(g) = (1/|H|) sum_h f1(h) f2(h^-1 g).  Throws SizeMismatch.
GroupFunction convolve(const Pgl2& G, const GroupFunction& f1, const GroupFunction& f2,
                       unsigned threads);

// Same convolution evaluated only at the given output indices.
std::vector<cplx> convolve_at(const Pgl2& G, const GroupFunction& f1,
                              const GroupFunction& f2,
                              std::span<const std::size_t> out_indices, unsigned threads);

struct SchurReport {
  cplx lhs;
  cplx rhs;
  double tol = 0.0;
  bool pass = false;
};

// (1/|H|) sum_h <rho(h)v1,v2> conj(<rho(h)v3,v4>)  vs  <v1,v3> conj(<v2,v4>)/dim.
// Inner products conjugate-linear in the first slot.  For the steinberg model
// the inputs must lie in the complement of the constants (dim = q is used).
SchurReport schur_check(const RepresentationModel& model, const Eigen::VectorXcd& v1,
                        const Eigen::VectorXcd& v2, const Eigen::VectorXcd& v3,
                        const Eigen::VectorXcd& v4, unsigned threads, double tol = 1e-9);

struct KfDecomposition {
  GroupFunction kf;  // conj(c(g)) on all of H
  GroupFunction k1;  // kf restricted to WT
  GroupFunction k2;  // kf - k1
};

KfDecomposition decompose_kf(const RepresentationModel& model, const Eigen::VectorXcd& v,
                             CoeffSource source, unsigned threads);

struct IdempotentReport {
  double residual_kf = 0.0;  // sup |kf - dim (kf*kf)| over checked outputs
  double residual_k1 = 0.0;  // sup |k1 - (q(q+1)/2)(k1*k1)|
  bool pass_kf = false;
  bool pass_k1 = false;
  bool sampled = false;      // full convolution for q <= 13, else 10^3 outputs
};

IdempotentReport idempotent_checks(const Pgl2& G, const GroupFunction& kf,
                                   const GroupFunction& k1, std::uint32_t dim,
                                   double tol, unsigned threads);

// Numerical rank of span{rho(g)v}: columns are added in enumeration order and
// the sample doubles until the rank saturates (or the group is exhausted).
// Singular values below 1e-8 of the largest are treated as zero.
int orbit_span_dim(const RepresentationModel& model, const Eigen::VectorXcd& v);

double sup_norm(const GroupFunction& f);
std::size_t support_size(const GroupFunction& f, double tol = 0.0);

}  // namespace pslab
