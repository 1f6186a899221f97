#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pslab/lp_experiments.hpp"

namespace pslab {

struct VerifyConfig {
  std::vector<std::uint32_t> qs;  // primes, ascending
  std::uint32_t char_index = 1;
  bool all_chars = false;
  double tol = 1e-9;
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyCase {
  std::uint32_t q = 0;
  std::uint32_t j = 0;
  std::vector<CheckResult> checks;
  double idempotent_residual_kf = 0.0;
  double idempotent_residual_k1 = 0.0;
  int dim_principal = 0;
  int dim_steinberg = 0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  bool pass = false;
};

// Runs the full per-(q, j) verification battery: Lemma-matrix bounds,
// coefficient cross-oracle, Schur mean, random-vector Schur identities,
// convolution idempotents, orbit dimensions.  Human-readable progress goes
// to `log`.
VerifyReport run_verify(const VerifyConfig& cfg, std::ostream& log);

void write_verify_json(std::ostream& os, const VerifyReport& report);

void write_coeff_table(std::ostream& os, const FieldSpec& field,
                       const MultiplicativeCharacter& chi, unsigned threads, bool json);

void write_schur_table(std::ostream& os, const FieldSpec& field,
                       const MultiplicativeCharacter& chi, unsigned threads, double tol,
                       bool json);

void write_weil_table(std::ostream& os, const FieldSpec& field,
                      const MultiplicativeCharacter& chi, bool json);

void write_dims_table(std::ostream& os, const FieldSpec& field,
                      const MultiplicativeCharacter& chi, bool json);

void write_lp_scan(std::ostream& os, const LpScanResult& result, bool json);

void write_lp_fits_json(std::ostream& os, const LpScanResult& result,
                        const LpScanConfig& cfg);

}  // namespace pslab
