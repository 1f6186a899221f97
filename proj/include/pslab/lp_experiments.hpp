#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pslab/harmonic.hpp"

namespace pslab {

// Piecewise-linear exponent with breakpoint at p = 6:
//   1/2 - 2/p   for p >= 6 (including infinity),
//   1/4 - 1/2p  for 2 <= p <= 6.
// Throws OutOfDomain below 2.
double delta_exponent(double p);

// ((1/|H|) sum |f|^p)^(1/p); sup norm for p = infinity.  p >= 1 required.
double lp_norm(const GroupFunction& f, double p);

// |c(g)| is constant on double cosets TgT, so the full distribution of the
// coefficient collapses to q+4 classes: T, wT, the four single-zero-entry
// classes of size (q-1)^2, and one class of size (q-1)^2 per cross-ratio
// invariant a d / (b c) in F_q^x \ {1}.  Class values are evaluated at one
// representative each via the character sum.
struct CoefficientProfile {
  std::uint32_t q = 0;
  std::uint32_t j = 0;
  std::vector<double> abs_value;        // |c| per class
  std::vector<std::size_t> multiplicity;
  std::vector<std::string> label;
};

CoefficientProfile coefficient_profile(const FieldSpec& field,
                                       const MultiplicativeCharacter& chi);

// L^p norm of Phi = sqrt(dim) * conj(c) straight from the class profile.
double profile_lp_norm(const CoefficientProfile& profile, double p);

// Phi tabulated over the whole group (used to validate the profile path and
// for small-q experiments).
GroupFunction build_phi(const RepresentationModel& model, const Eigen::VectorXcd& v,
                        unsigned threads);

struct LpRecord {
  std::uint32_t q = 0;
  std::uint32_t j = 0;
  double p = 0.0;
  double norm = 0.0;
};

struct FitResult {
  double p = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  double expected_slope = 0.0;
  std::string expected_model;  // "delta" for p >= 6, "finite-model" below
  std::uint32_t window_qmin = 0;
  std::uint32_t window_qmax = 0;
  double max_char_deviation = 0.0;  // only populated by all-chars scans
};

struct LpScanConfig {
  std::vector<std::uint32_t> primes;   // ascending, all >= 5
  std::vector<double> p_values;
  std::uint32_t char_index = 1;
  bool all_chars = false;
  std::uint32_t fit_qmin = 29;         // small-q transients excluded from fits
};

struct LpScanResult {
  std::vector<LpRecord> records;       // sorted by (q, j, p)
  std::vector<FitResult> fits;
};

// Norms per (q, p) plus least-squares fits of log norm against log q.
// Throws InsufficientData with fewer than 4 primes (before or after the fit
// window is applied).
LpScanResult scan_and_fit(const LpScanConfig& cfg, unsigned threads);

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace pslab
