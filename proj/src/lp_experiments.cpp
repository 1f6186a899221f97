#include "pslab/lp_experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pslab/parallel.hpp"

namespace pslab {

double delta_exponent(double p) {
  if (std::isnan(p) || p < 2.0) {
    throw OutOfDomain("delta is defined on [2, infinity]");
  }
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  if (ip <= 1.0 / 6.0) return 0.5 - 2.0 * ip;
  return 0.25 - 0.5 * ip;
}

double lp_norm(const GroupFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw OutOfDomain("lp_norm needs p >= 1 or p = infinity");
  }
  if (std::isinf(p)) return sup_norm(f);
  double s = 0.0;
  for (const auto& z : f.values) s += std::pow(std::abs(z), p);
  return std::pow(s / static_cast<double>(f.size()), 1.0 / p);
}

CoefficientProfile coefficient_profile(const FieldSpec& field,
                                       const MultiplicativeCharacter& chi) {
  const std::uint32_t q = field.q();
  const std::size_t torus = q - 1;
  const std::size_t cell = torus * torus;

  CoefficientProfile prof;
  prof.q = q;
  prof.j = chi.index();
  auto push = [&](double absval, std::size_t mult, std::string lab) {
    prof.abs_value.push_back(absval);
    prof.multiplicity.push_back(mult);
    prof.label.push_back(std::move(lab));
  };

  push(1.0, torus, "T");
  push(1.0, torus, "wT");  // |chi(-1)| = 1

  const auto abs_at = [&](felt a, felt b, felt c, felt d) {
    return std::abs(coeff_charsum(chi, a, b, c, d));
  };
  push(abs_at(0, 1, 1, 1), cell, "a0");
  push(abs_at(1, 0, 1, 1), cell, "b0");
  push(abs_at(1, 1, 0, 1), cell, "c0");
  push(abs_at(1, 1, 1, 0), cell, "d0");
  for (felt r = 2; r < q; ++r) {
    // ad/(bc) = r, representative (1 1; 1 r); r = 1 would be singular
    push(abs_at(1, 1, 1, r), cell, "r" + std::to_string(r));
  }

  std::size_t total = 0;
  for (auto m : prof.multiplicity) total += m;
  if (total != static_cast<std::size_t>(q) * q * q - q) {
    throw std::logic_error("double-coset multiplicities do not exhaust the group");
  }
  return prof;
}

double profile_lp_norm(const CoefficientProfile& profile, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw OutOfDomain("lp_norm needs p >= 1 or p = infinity");
  }
  const double scale = std::sqrt(static_cast<double>(profile.q) + 1.0);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double a : profile.abs_value) m = std::max(m, scale * a);
    return m;
  }
  const std::size_t order =
      static_cast<std::size_t>(profile.q) * profile.q * profile.q - profile.q;
  double s = 0.0;
  for (std::size_t i = 0; i < profile.abs_value.size(); ++i) {
    s += static_cast<double>(profile.multiplicity[i]) *
         std::pow(scale * profile.abs_value[i], p);
  }
  return std::pow(s / static_cast<double>(order), 1.0 / p);
}

GroupFunction build_phi(const RepresentationModel& model, const Eigen::VectorXcd& v,
                        unsigned threads) {
  const CoefficientFunction c =
      tabulate_coefficients(model, v, CoeffSource::charsum, threads);
  GroupFunction phi{model.q(), std::vector<cplx>(c.values.size())};
  const double scale = std::sqrt(static_cast<double>(model.irreducible_dim()));
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    phi.values[i] = scale * std::conj(c.values[i]);
  }
  return phi;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = std::max(2u, lo); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

namespace {

struct Fit {
  double slope = 0.0, intercept = 0.0, r2 = 1.0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  Fit f;
  const double den = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fit = f.slope * x[i] + f.intercept;
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  // a flat series is fit perfectly by its mean
  f.r2 = ss_tot <= 1e-20 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

std::vector<std::uint32_t> valid_char_indices(const FieldSpec& field) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 1; j < field.q() - 1; ++j) {
    if (MultiplicativeCharacter(field, j).order() > 2) out.push_back(j);
  }
  return out;
}

}  // namespace

LpScanResult scan_and_fit(const LpScanConfig& cfg, unsigned threads) {
  if (cfg.primes.size() < 4) {
    throw InsufficientData("exponent fits need at least 4 primes");
  }
  for (auto q : cfg.primes) {
    if (q < 5 || !is_prime(q)) {
      throw InsufficientData("scan primes must be primes >= 5, got " + std::to_string(q));
    }
  }
  if (cfg.p_values.empty()) {
    throw InsufficientData("no p values requested");
  }

  struct PerPrime {
    std::vector<LpRecord> records;
  };
  std::vector<PerPrime> per_prime(cfg.primes.size());

  parallel_blocks(cfg.primes.size(), 1, threads,
                  [&](std::size_t b, std::size_t lo, std::size_t hi) {
    (void)b;
    for (std::size_t k = lo; k < hi; ++k) {
      const std::uint32_t q = cfg.primes[k];
      const FieldSpec field(q);
      std::vector<std::uint32_t> js;
      if (cfg.all_chars) {
        js = valid_char_indices(field);
      } else {
        const MultiplicativeCharacter chi(field, cfg.char_index);
        if (chi.order() <= 2) continue;  // char_rule skips quadratic/trivial
        js.push_back(cfg.char_index);
      }
      for (auto j : js) {
        const MultiplicativeCharacter chi(field, j);
        const CoefficientProfile prof = coefficient_profile(field, chi);
        for (double p : cfg.p_values) {
          per_prime[k].records.push_back({q, j, p, profile_lp_norm(prof, p)});
        }
      }
    }
  });

  LpScanResult out;
  for (auto& pp : per_prime) {
    out.records.insert(out.records.end(), pp.records.begin(), pp.records.end());
  }
  std::sort(out.records.begin(), out.records.end(), [](const LpRecord& a, const LpRecord& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.j != b.j) return a.j < b.j;
    return a.p < b.p;
  });

  for (double p : cfg.p_values) {
    // per-q mean over the characters in the scan (a single j by default)
    std::map<std::uint32_t, std::pair<double, std::size_t>> mean;
    std::map<std::uint32_t, std::pair<double, double>> extent;
    for (const auto& rec : out.records) {
      if (rec.p != p || rec.q < cfg.fit_qmin) continue;
      auto& m = mean[rec.q];
      m.first += rec.norm;
      m.second += 1;
      auto [it, fresh] = extent.try_emplace(rec.q, rec.norm, rec.norm);
      if (!fresh) {
        it->second.first = std::min(it->second.first, rec.norm);
        it->second.second = std::max(it->second.second, rec.norm);
      }
    }
    if (mean.size() < 4) {
      throw InsufficientData("fewer than 4 primes inside the fit window");
    }
    std::vector<double> xs, ys;
    FitResult fr;
    fr.p = p;
    fr.window_qmin = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [q, acc] : mean) {
      xs.push_back(std::log(static_cast<double>(q)));
      ys.push_back(std::log(acc.first / static_cast<double>(acc.second)));
      fr.window_qmin = std::min(fr.window_qmin, q);
      fr.window_qmax = std::max(fr.window_qmax, q);
    }
    const Fit f = least_squares(xs, ys);
    fr.slope = f.slope;
    fr.intercept = f.intercept;
    fr.r2 = f.r2;
    if (std::isinf(p) || p >= 6.0) {
      fr.expected_slope = delta_exponent(p);
      fr.expected_model = "delta";
    } else {
      fr.expected_slope = std::max(0.0, 0.5 - 2.0 / p);
      fr.expected_model = "finite-model";
    }
    for (const auto& [q, mm] : extent) {
      (void)q;
      const double mid = (mm.first + mm.second) / 2.0;
      if (mid > 0.0) {
        fr.max_char_deviation =
            std::max(fr.max_char_deviation, (mm.second - mm.first) / mid);
      }
    }
    out.fits.push_back(fr);
  }
  return out;
}

}  // namespace pslab
