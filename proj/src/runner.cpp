#include "pslab/runner.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include <json.hpp>

#include "pslab/format.hpp"

namespace pslab {

namespace {

using nlohmann::json;

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::VectorXcd random_unit_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = cplx(2.0 * unit_interval(rng) - 1.0, 2.0 * unit_interval(rng) - 1.0);
  }
  v.normalize();
  return v;
}

std::vector<std::uint32_t> chars_for(const FieldSpec& field, const VerifyConfig& cfg) {
  std::vector<std::uint32_t> js;
  if (cfg.all_chars) {
    for (std::uint32_t j = 1; j < field.q() - 1; ++j) {
      if (MultiplicativeCharacter(field, j).order() > 2) js.push_back(j);
    }
  } else {
    js.push_back(cfg.char_index);
  }
  return js;
}

double schur_mean_c2(const RepresentationModel& model, const Eigen::VectorXcd& v,
                     unsigned threads) {
  if (model.q() <= 31) {
    const auto c = tabulate_coefficients(model, v, CoeffSource::charsum, threads);
    double s = 0.0;
    for (const auto& z : c.values) s += std::norm(z);
    return s / static_cast<double>(c.values.size());
  }
  const auto prof = coefficient_profile(model.field(), model.character());
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < prof.abs_value.size(); ++i) {
    s += static_cast<double>(prof.multiplicity[i]) * prof.abs_value[i] * prof.abs_value[i];
    n += prof.multiplicity[i];
  }
  return s / static_cast<double>(n);
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& cfg, std::ostream& log) {
  VerifyReport report;
  report.pass = true;

  for (const std::uint32_t q : cfg.qs) {
    const FieldSpec field(q);
    const RepresentationModel st = RepresentationModel::steinberg(field);
    const Eigen::VectorXcd stv = st.steinberg_newvector();
    const int dim_st = orbit_span_dim(st, stv);

    for (const std::uint32_t j : chars_for(field, cfg)) {
      const MultiplicativeCharacter chi(field, j);
      const RepresentationModel model = RepresentationModel::principal_series(field, chi);
      const Eigen::VectorXcd v = model.invariant_vector();

      VerifyCase vc;
      vc.q = q;
      vc.j = j;
      auto add = [&](std::string name, bool pass, std::string detail) {
        vc.checks.push_back({std::move(name), pass, std::move(detail)});
      };

      const BoundsReport b = verify_bounds(model, v, cfg.threads);
      add("lemma-matrix-bounds", b.all_pass,
          "max_scaled=" + fmt_g12(b.max_off_wt_scaled) + " bound=" + fmt_g12(b.weil_bound) +
              " worst_T=" + fmt_g12(b.worst_T_dev) + " worst_wT=" + fmt_g12(b.worst_wT_dev));

      const CrossOracleReport x = cross_oracle_check(model, v, cfg.tol, cfg.threads);
      add("coefficient-cross-oracle", x.pass,
          std::string(x.exhaustive ? "exhaustive" : "sampled") +
              " checked=" + std::to_string(x.checked) +
              " maxdiff=" + fmt_g12(x.max_abs_diff));

      const double mean_c2 = schur_mean_c2(model, v, cfg.threads);
      const double schur_expect = 1.0 / (static_cast<double>(q) + 1.0);
      add("schur-mean", std::abs(mean_c2 - schur_expect) <= cfg.tol,
          "mean|c|^2=" + fmt_g12(mean_c2) + " expect=" + fmt_g12(schur_expect));

      if (q <= 31) {
        bool ok = true;
        double worst = 0.0;
        for (int rep = 0; rep < 2; ++rep) {
          const std::uint64_t base = 0x736368757200ULL ^ (std::uint64_t(q) << 16) ^
                                     (std::uint64_t(j) << 4) ^ std::uint64_t(rep);
          const auto n = static_cast<Eigen::Index>(q) + 1;
          const SchurReport s = schur_check(model, random_unit_vector(n, base),
                                            random_unit_vector(n, base + 1),
                                            random_unit_vector(n, base + 2),
                                            random_unit_vector(n, base + 3),
                                            cfg.threads, cfg.tol);
          worst = std::max(worst, std::abs(s.lhs - s.rhs));
          ok = ok && s.pass;
        }
        add("schur-random-vectors", ok, "worst=" + fmt_g12(worst));
      }

      const KfDecomposition kd = decompose_kf(model, v, CoeffSource::charsum, cfg.threads);
      const IdempotentReport idr =
          idempotent_checks(model.group(), kd.kf, kd.k1, q + 1, 1e-8, cfg.threads);
      vc.idempotent_residual_kf = idr.residual_kf;
      vc.idempotent_residual_k1 = idr.residual_k1;
      add("convolution-idempotents", idr.pass_kf && idr.pass_k1,
          std::string(idr.sampled ? "sampled" : "full") +
              " r_kf=" + fmt_g12(idr.residual_kf) + " r_k1=" + fmt_g12(idr.residual_k1));

      vc.dim_principal = orbit_span_dim(model, v);
      vc.dim_steinberg = dim_st;
      const bool dims_ok = vc.dim_principal == static_cast<int>(q) + 1 &&
                           vc.dim_steinberg == static_cast<int>(q);
      add("orbit-dimensions", dims_ok,
          "principal=" + std::to_string(vc.dim_principal) +
              " steinberg=" + std::to_string(vc.dim_steinberg) +
              " bound=" + std::to_string(q + 1));

      vc.pass = true;
      for (const auto& c : vc.checks) vc.pass = vc.pass && c.pass;
      report.pass = report.pass && vc.pass;

      log << "q=" << q << " j=" << j << (vc.pass ? "  PASS" : "  FAIL") << "\n";
      for (const auto& c : vc.checks) {
        log << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail
            << ")\n";
      }
      report.cases.push_back(std::move(vc));
    }
  }
  return report;
}

void write_verify_json(std::ostream& os, const VerifyReport& report) {
  json out;
  out["tool"] = "pslab";
  out["version"] = kVersion;
  out["enum_order"] = Pgl2::kEnumOrderId;
  out["pass"] = report.pass;
  out["cases"] = json::array();
  for (const auto& vc : report.cases) {
    json c;
    c["q"] = vc.q;
    c["j"] = vc.j;
    c["pass"] = vc.pass;
    c["idempotent"] = {{"q", vc.q},
                       {"j", vc.j},
                       {"residual_kf", vc.idempotent_residual_kf},
                       {"residual_k1", vc.idempotent_residual_k1}};
    c["dims"] = {{"principal", vc.dim_principal}, {"steinberg", vc.dim_steinberg}};
    c["checks"] = json::array();
    for (const auto& ck : vc.checks) {
      c["checks"].push_back({{"name", ck.name}, {"pass", ck.pass}, {"detail", ck.detail}});
    }
    out["cases"].push_back(std::move(c));
  }
  os << out.dump(2) << "\n";
}

void write_coeff_table(std::ostream& os, const FieldSpec& field,
                       const MultiplicativeCharacter& chi, unsigned threads, bool json_fmt) {
  const RepresentationModel model = RepresentationModel::principal_series(field, chi);
  const Eigen::VectorXcd v = model.invariant_vector();
  const CoefficientFunction c =
      tabulate_coefficients(model, v, CoeffSource::charsum, threads);
  const Pgl2& G = model.group();
  const double scale = static_cast<double>(field.q() - 1);

  if (!json_fmt) {
    write_output_header(os, "coeff-table q=" + std::to_string(field.q()) +
                                " j=" + std::to_string(chi.index()));
    os << "q,j,element,class,re,im,abs,scaled_abs\n";
  }
  json rows = json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const ProjectiveMatrix g = G.element(i);
    const std::string el = std::to_string(g.a) + ":" + std::to_string(g.b) + ":" +
                           std::to_string(g.c) + ":" + std::to_string(g.d);
    const char* cls = to_string(G.classify(g));
    const double a = std::abs(c.values[i]);
    if (json_fmt) {
      rows.push_back({{"q", field.q()},
                      {"j", chi.index()},
                      {"element", el},
                      {"class", cls},
                      {"re", c.values[i].real()},
                      {"im", c.values[i].imag()},
                      {"abs", a},
                      {"scaled_abs", scale * a}});
    } else {
      os << field.q() << ',' << chi.index() << ',' << el << ',' << cls << ','
         << fmt_g12(c.values[i].real()) << ',' << fmt_g12(c.values[i].imag()) << ','
         << fmt_g12(a) << ',' << fmt_g12(scale * a) << "\n";
    }
  }
  if (json_fmt) os << rows.dump(2) << "\n";
}

void write_schur_table(std::ostream& os, const FieldSpec& field,
                       const MultiplicativeCharacter& chi, unsigned threads, double tol,
                       bool json_fmt) {
  const RepresentationModel model = RepresentationModel::principal_series(field, chi);
  const Eigen::VectorXcd v = model.invariant_vector();
  const auto n = static_cast<Eigen::Index>(field.q()) + 1;

  std::vector<SchurReport> rows;
  // newvector case, then an orthogonal pairing, then random quadruples
  rows.push_back(schur_check(model, v, v, v, v, threads, tol));
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(n);
  e0[0] = 1.0;  // v vanishes at the cd = 0 sections, so <v, e0> = 0
  rows.push_back(schur_check(model, v, v, e0, v, threads, tol));
  for (int rep = 0; rep < 6; ++rep) {
    const std::uint64_t base = 0x7363737600ULL ^ (std::uint64_t(field.q()) << 16) ^
                               (std::uint64_t(chi.index()) << 4) ^ std::uint64_t(rep);
    rows.push_back(schur_check(model, random_unit_vector(n, base),
                               random_unit_vector(n, base + 1),
                               random_unit_vector(n, base + 2),
                               random_unit_vector(n, base + 3), threads, tol));
  }

  if (!json_fmt) {
    write_output_header(os, "schur q=" + std::to_string(field.q()) +
                                " j=" + std::to_string(chi.index()));
    os << "q,j,lhs_re,lhs_im,rhs_re,rhs_im,pass\n";
  }
  json jrows = json::array();
  for (const auto& r : rows) {
    if (json_fmt) {
      jrows.push_back({{"q", field.q()},
                       {"j", chi.index()},
                       {"lhs_re", r.lhs.real()},
                       {"lhs_im", r.lhs.imag()},
                       {"rhs_re", r.rhs.real()},
                       {"rhs_im", r.rhs.imag()},
                       {"pass", r.pass}});
    } else {
      os << field.q() << ',' << chi.index() << ',' << fmt_g12(r.lhs.real()) << ','
         << fmt_g12(r.lhs.imag()) << ',' << fmt_g12(r.rhs.real()) << ','
         << fmt_g12(r.rhs.imag()) << ',' << (r.pass ? "true" : "false") << "\n";
    }
  }
  if (json_fmt) os << jrows.dump(2) << "\n";
}

void write_weil_table(std::ostream& os, const FieldSpec& field,
                      const MultiplicativeCharacter& chi, bool json_fmt) {
  const std::uint32_t q = field.q();
  // one representative per off-WT double coset; same classes as the profile
  std::vector<ProjectiveMatrix> reps = {
      {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
  for (felt r = 2; r < q; ++r) reps.push_back({1, 1, 1, r});

  if (!json_fmt) {
    write_output_header(os, "weil q=" + std::to_string(q) +
                                " j=" + std::to_string(chi.index()));
    os << "q,j,factors,sum_abs,bound,applicable,pass\n";
  }
  json jrows = json::array();
  for (const auto& g : reps) {
    const std::vector<LinearFactor> factors = {
        {g.a, g.c, 1}, {g.b, g.d, 1}, {1, 0, -1}};
    const WeilReport w = weil_check(chi, factors);
    const std::string fs = factors_to_string(factors);
    if (json_fmt) {
      jrows.push_back({{"q", q},
                       {"j", chi.index()},
                       {"factors", fs},
                       {"sum_abs", w.sum_abs},
                       {"bound", w.bound},
                       {"applicable", w.applicable},
                       {"pass", w.pass}});
    } else {
      os << q << ',' << chi.index() << ',' << fs << ',' << fmt_g12(w.sum_abs) << ','
         << fmt_g12(w.bound) << ',' << (w.applicable ? "true" : "false") << ','
         << (w.pass ? "true" : "false") << "\n";
    }
  }
  if (json_fmt) os << jrows.dump(2) << "\n";
}

void write_dims_table(std::ostream& os, const FieldSpec& field,
                      const MultiplicativeCharacter& chi, bool json_fmt) {
  const std::uint32_t q = field.q();
  const RepresentationModel ps = RepresentationModel::principal_series(field, chi);
  const RepresentationModel st = RepresentationModel::steinberg(field);
  const int dim_ps = orbit_span_dim(ps, ps.invariant_vector());
  const int dim_st = orbit_span_dim(st, st.steinberg_newvector());
  const int bound = static_cast<int>(q) + 1;

  struct Row {
    const char* model;
    int dim;
  } rows[] = {{"principal_series", dim_ps}, {"steinberg", dim_st}};

  if (!json_fmt) {
    write_output_header(os, "dims q=" + std::to_string(q) +
                                " j=" + std::to_string(chi.index()));
    os << "q,j,model,dim,bound,pass\n";
  }
  json jrows = json::array();
  for (const auto& r : rows) {
    const bool pass = r.dim <= bound;
    if (json_fmt) {
      jrows.push_back({{"q", q},
                       {"j", chi.index()},
                       {"model", r.model},
                       {"dim", r.dim},
                       {"bound", bound},
                       {"pass", pass}});
    } else {
      os << q << ',' << chi.index() << ',' << r.model << ',' << r.dim << ',' << bound
         << ',' << (pass ? "true" : "false") << "\n";
    }
  }
  if (json_fmt) os << jrows.dump(2) << "\n";
}

void write_lp_scan(std::ostream& os, const LpScanResult& result, bool json_fmt) {
  if (json_fmt) {
    json rows = json::array();
    for (const auto& r : result.records) {
      rows.push_back({{"q", r.q},
                      {"j", r.j},
                      {"p", std::isinf(r.p) ? json("inf") : json(r.p)},
                      {"norm", r.norm},
                      {"log_q", std::log(static_cast<double>(r.q))},
                      {"log_norm", std::log(r.norm)}});
    }
    os << rows.dump(2) << "\n";
    return;
  }
  std::uint32_t qmin = 0, qmax = 0;
  if (!result.records.empty()) {
    qmin = result.records.front().q;
    qmax = result.records.back().q;
  }
  write_output_header(os, "lp-scan qmin=" + std::to_string(qmin) +
                              " qmax=" + std::to_string(qmax));
  os << "q,j,p,norm,log_q,log_norm\n";
  for (const auto& r : result.records) {
    os << r.q << ',' << r.j << ',' << fmt_p(r.p) << ',' << fmt_g12(r.norm) << ','
       << fmt_g12(std::log(static_cast<double>(r.q))) << ','
       << fmt_g12(std::log(r.norm)) << "\n";
  }
}

void write_lp_fits_json(std::ostream& os, const LpScanResult& result,
                        const LpScanConfig& cfg) {
  json out;
  out["tool"] = "pslab";
  out["version"] = kVersion;
  out["enum_order"] = Pgl2::kEnumOrderId;
  out["fit_qmin"] = cfg.fit_qmin;
  out["all_chars"] = cfg.all_chars;
  out["fits"] = json::array();
  for (const auto& f : result.fits) {
    json jf;
    jf["p"] = std::isinf(f.p) ? json("inf") : json(f.p);
    jf["slope"] = f.slope;
    jf["intercept"] = f.intercept;
    jf["r2"] = f.r2;
    jf["expected_slope"] = f.expected_slope;
    jf["expected_model"] = f.expected_model;
    jf["window"] = {{"qmin", f.window_qmin}, {"qmax", f.window_qmax}};
    if (cfg.all_chars) jf["max_char_deviation"] = f.max_char_deviation;
    out["fits"].push_back(std::move(jf));
  }
  os << out.dump(2) << "\n";
}

}  // namespace pslab
