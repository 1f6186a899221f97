#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "pslab/format.hpp"
#include "pslab/runner.hpp"

namespace {

using namespace pslab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

unsigned env_threads() {
  if (const char* env = std::getenv("PSLAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // resolve to hardware concurrency
}

struct CommonOpts {
  std::uint32_t q = 0;
  std::uint32_t qmin = 0;
  std::uint32_t qmax = 0;
  std::uint32_t char_index = 1;
  bool all_chars = false;
  double tol = 1e-9;
  std::string format = "csv";
  std::string out;
  unsigned threads = env_threads();
};

void add_common(CLI::App* cmd, CommonOpts& o, bool range) {
  if (range) {
    cmd->add_option("--q", o.q, "single prime modulus");
    cmd->add_option("--qmin", o.qmin, "lower end of the prime range");
    cmd->add_option("--qmax", o.qmax, "upper end of the prime range");
  } else {
    cmd->add_option("--q", o.q, "prime modulus")->required();
  }
  cmd->add_option("--char", o.char_index, "character index j (default 1)");
  cmd->add_flag("--all-chars", o.all_chars, "use every character of order > 2");
  cmd->add_option("--tol", o.tol, "comparison tolerance (default 1e-9)");
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--threads", o.threads, "worker count (default: PSLAB_THREADS or all cores)");
}

std::vector<std::uint32_t> resolve_primes(const CommonOpts& o) {
  std::vector<std::uint32_t> qs;
  if (o.q) {
    qs.push_back(o.q);
  } else if (o.qmin && o.qmax) {
    qs = primes_in_range(o.qmin, o.qmax);
  }
  if (qs.empty()) {
    throw CLI::ValidationError("--q or --qmin/--qmax must select at least one prime");
  }
  for (auto q : qs) {
    if (!is_prime(q) || q < 5) {
      throw NonPrimeModulus("q must be a prime >= 5, got " + std::to_string(q));
    }
  }
  return qs;
}

// Validates (q, j) and returns the character; rejects reducible inductions.
MultiplicativeCharacter checked_character(const FieldSpec& field, std::uint32_t j) {
  MultiplicativeCharacter chi(field, j);
  if (chi.order() <= 2) {
    throw ReducibleInduction("character (q=" + std::to_string(field.q()) +
                             ", j=" + std::to_string(j) +
                             ") has order <= 2; pick a non-quadratic character");
  }
  return chi;
}

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void fail_marker(const std::string& what) { stream() << "# FAILED: " << what << "\n"; }

 private:
  std::ofstream file_;
};

int cmd_verify(const CommonOpts& o) {
  VerifyConfig cfg;
  cfg.qs = resolve_primes(o);
  cfg.char_index = o.char_index;
  cfg.all_chars = o.all_chars;
  cfg.tol = o.tol;
  cfg.threads = o.threads;
  for (auto q : cfg.qs) {
    const FieldSpec field(q);
    if (!cfg.all_chars) checked_character(field, cfg.char_index);
  }

  const VerifyReport report = run_verify(cfg, std::cout);
  if (!o.out.empty()) {
    OutputTarget target(o.out);
    write_verify_json(target.stream(), report);
    if (!report.pass) target.fail_marker("verify");
  }
  std::cout << (report.pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_table(const CommonOpts& o, const std::string& which) {
  const FieldSpec field(o.q);
  const bool json = o.format == "json";
  OutputTarget target(o.out);
  std::vector<std::uint32_t> js;
  if (o.all_chars) {
    for (std::uint32_t j = 1; j < field.q() - 1; ++j) {
      if (MultiplicativeCharacter(field, j).order() > 2) js.push_back(j);
    }
  } else {
    js.push_back(checked_character(field, o.char_index).index());
  }
  for (auto j : js) {
    const MultiplicativeCharacter chi = checked_character(field, j);
    if (which == "coeff-table") {
      write_coeff_table(target.stream(), field, chi, o.threads, json);
    } else if (which == "schur") {
      write_schur_table(target.stream(), field, chi, o.threads, o.tol, json);
    } else if (which == "weil") {
      write_weil_table(target.stream(), field, chi, json);
    } else {
      write_dims_table(target.stream(), field, chi, json);
    }
  }
  return kExitOk;
}

int cmd_lp_scan(const CommonOpts& o, const std::string& p_list, const std::string& fits_out,
                std::uint32_t fit_qmin) {
  LpScanConfig cfg;
  cfg.primes = resolve_primes(o);
  cfg.char_index = o.char_index;
  cfg.all_chars = o.all_chars;
  cfg.fit_qmin = fit_qmin;
  std::stringstream ss(p_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "inf") {
      cfg.p_values.push_back(std::numeric_limits<double>::infinity());
    } else {
      std::size_t pos = 0;
      const double p = std::stod(tok, &pos);
      if (pos != tok.size() || p < 1.0) {
        throw CLI::ValidationError("bad p value '" + tok + "'");
      }
      cfg.p_values.push_back(p);
    }
  }

  const LpScanResult result = scan_and_fit(cfg, o.threads);

  OutputTarget target(o.out);
  write_lp_scan(target.stream(), result, o.format == "json");
  if (!fits_out.empty()) {
    std::ofstream ff(fits_out);
    if (!ff) throw CLI::ValidationError("cannot open fits output " + fits_out);
    write_lp_fits_json(ff, result, cfg);
  } else if (!o.out.empty()) {
    std::ofstream ff(o.out + ".fits.json");
    write_lp_fits_json(ff, result, cfg);
  } else {
    write_lp_fits_json(std::cout, result, cfg);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pslab: finite-model verification of principal-series matrix coefficients,"
               " character-sum bounds, and L^p growth exponents on PGL(2,F_q)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pslab::kVersion));

  CommonOpts vo, co, so, wo, dvo, lo;
  auto* verify = app.add_subcommand("verify", "run the full verification battery");
  add_common(verify, vo, true);

  auto* coeff = app.add_subcommand("coeff-table", "matrix coefficient over the whole group");
  add_common(coeff, co, false);

  auto* schur = app.add_subcommand("schur", "Schur orthogonality samples");
  add_common(schur, so, false);

  auto* weil = app.add_subcommand("weil", "Weil-bound conformance per double coset");
  add_common(weil, wo, false);

  auto* dims = app.add_subcommand("dims", "orbit span dimensions of the newvectors");
  add_common(dims, dvo, false);

  auto* lp = app.add_subcommand("lp-scan", "L^p norms of Phi and exponent fits");
  add_common(lp, lo, true);
  std::string p_list = "2,4,6,8,inf";
  std::string fits_out;
  std::uint32_t fit_qmin = 29;
  lp->add_option("--p", p_list, "comma-separated p values, 'inf' allowed");
  lp->add_option("--fits-out", fits_out, "path for the fit summary JSON");
  lp->add_option("--fit-qmin", fit_qmin, "smallest q used by the exponent fits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo);
    if (coeff->parsed()) return cmd_table(co, "coeff-table");
    if (schur->parsed()) return cmd_table(so, "schur");
    if (weil->parsed()) return cmd_table(wo, "weil");
    if (dims->parsed()) return cmd_table(dvo, "dims");
    if (lp->parsed()) return cmd_lp_scan(lo, p_list, fits_out, fit_qmin);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const pslab::NonPrimeModulus& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const pslab::ReducibleInduction& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const pslab::InsufficientData& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfigError;
}
