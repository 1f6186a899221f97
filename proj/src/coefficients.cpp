#include "pslab/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pslab/parallel.hpp"

namespace pslab {

namespace {

bool zero_pattern_in_WT(felt a, felt b, felt c, felt d) {
  return (b == 0 && c == 0) || (a == 0 && d == 0);
}

// Accumulates sum_n chi((c+an)(d+bn)) chi^{-1}(n) over n in F_q^x.  Terms
// with a vanishing linear factor drop out (chi(0) = 0).  Exponent arithmetic
// is exact; rounding enters once per surviving term.
cplx raw_charsum(const MultiplicativeCharacter& chi, felt a, felt b, felt c, felt d) {
  const FieldSpec& F = chi.field();
  const std::uint32_t q = F.q();
  const std::uint32_t m = q - 1;
  cplx acc(0.0, 0.0);
  for (felt n = 1; n < q; ++n) {
    const felt t1 = F.add(c, F.mul(a, n));
    if (t1 == 0) continue;
    const felt t2 = F.add(d, F.mul(b, n));
    if (t2 == 0) continue;
    const std::uint64_t e =
        (std::uint64_t)F.dlog(t1) + F.dlog(t2) + m - F.dlog(n);
    acc += chi.unit((std::uint64_t)chi.index() * e % m);
  }
  return acc;
}

}  // namespace

cplx coeff_direct(const RepresentationModel& model, const Eigen::VectorXcd& v,
                  const ProjectiveMatrix& g) {
  return model.apply(g, v).dot(v);
}

cplx coeff_charsum(const MultiplicativeCharacter& chi, felt a, felt b, felt c, felt d) {
  if (zero_pattern_in_WT(a, b, c, d)) {
    throw DomainWT("character-sum formula is stated off WT; use the closed values");
  }
  const FieldSpec& F = chi.field();
  const std::uint32_t m = F.q() - 1;
  const felt det = F.sub(F.mul(a, d), F.mul(b, c));
  const cplx det_phase = chi.unit(m - chi.exponent(det));
  return det_phase * raw_charsum(chi, a, b, c, d) / static_cast<double>(m);
}

cplx coeff_charsum(const MultiplicativeCharacter& chi, const ProjectiveMatrix& g) {
  return coeff_charsum(chi, g.a, g.b, g.c, g.d);
}

double coeff_charsum_scaled_abs(const MultiplicativeCharacter& chi,
                                const ProjectiveMatrix& g) {
  return std::abs(raw_charsum(chi, g.a, g.b, g.c, g.d));
}

CoefficientFunction tabulate_coefficients(const RepresentationModel& model,
                                          const Eigen::VectorXcd& v, CoeffSource source,
                                          unsigned threads) {
  const Pgl2& G = model.group();
  const MultiplicativeCharacter& chi = model.character();
  CoefficientFunction out;
  out.q = model.q();
  out.j = chi.index();
  out.source = source;
  out.values.assign(G.size(), cplx(0.0, 0.0));
  const int chi_m1 = chi.at_minus_one();
  parallel_blocks(G.size(), 4096, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const ProjectiveMatrix g = G.element(i);
      if (source == CoeffSource::direct) {
        out.values[i] = coeff_direct(model, v, g);
      } else {
        switch (G.classify(g)) {
          case SubgroupTag::T: out.values[i] = cplx(1.0, 0.0); break;
          case SubgroupTag::wT: out.values[i] = cplx(chi_m1, 0.0); break;
          default: out.values[i] = coeff_charsum(chi, g);
        }
      }
    }
  });
  return out;
}

BoundsReport verify_bounds(const RepresentationModel& model, const Eigen::VectorXcd& v,
                           unsigned threads, double tol_exact) {
  const Pgl2& G = model.group();
  const MultiplicativeCharacter& chi = model.character();
  const std::uint32_t q = model.q();
  const cplx on_wT(chi.at_minus_one(), 0.0);

  const std::size_t n = G.size();
  const std::size_t bs = 8192;
  const std::size_t nb = block_count(n, bs);
  std::vector<double> blk_max(nb, 0.0), blk_t(nb, 0.0), blk_wt(nb, 0.0);
  std::vector<std::size_t> blk_ct(nb, 0), blk_cwt(nb, 0);

  parallel_blocks(n, bs, threads, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const ProjectiveMatrix g = G.element(i);
      switch (G.classify(g)) {
        case SubgroupTag::T:
          ++blk_ct[b];
          blk_t[b] = std::max(blk_t[b], std::abs(coeff_direct(model, v, g) - cplx(1.0, 0.0)));
          break;
        case SubgroupTag::wT:
          ++blk_cwt[b];
          blk_wt[b] = std::max(blk_wt[b], std::abs(coeff_direct(model, v, g) - on_wT));
          break;
        default:
          blk_max[b] = std::max(blk_max[b], coeff_charsum_scaled_abs(chi, g));
      }
    }
  });

  BoundsReport r;
  r.weil_bound = 2.0 * std::sqrt(static_cast<double>(q));
  for (std::size_t b = 0; b < nb; ++b) {
    r.max_off_wt_scaled = std::max(r.max_off_wt_scaled, blk_max[b]);
    r.worst_T_dev = std::max(r.worst_T_dev, blk_t[b]);
    r.worst_wT_dev = std::max(r.worst_wT_dev, blk_wt[b]);
    r.count_T += blk_ct[b];
    r.count_wT += blk_cwt[b];
  }
  r.all_pass = r.worst_T_dev <= tol_exact && r.worst_wT_dev <= tol_exact &&
               r.max_off_wt_scaled <= r.weil_bound + 1e-9 &&
               r.count_T == q - 1 && r.count_wT == q - 1;
  return r;
}

CrossOracleReport cross_oracle_check(const RepresentationModel& model,
                                     const Eigen::VectorXcd& v, double tol,
                                     unsigned threads) {
  const Pgl2& G = model.group();
  const MultiplicativeCharacter& chi = model.character();
  const std::size_t n = G.size();

  std::vector<std::size_t> sample;
  const bool exhaustive = model.q() <= 31;
  if (!exhaustive) {
    std::mt19937_64 rng(0x70736c6162ULL ^ (static_cast<std::uint64_t>(model.q()) << 20) ^
                        chi.index());
    sample.resize(10000);
    for (auto& s : sample) s = rng() % n;
  }
  const std::size_t total = exhaustive ? n : sample.size();

  const std::size_t bs = 4096;
  const std::size_t nb = block_count(total, bs);
  std::vector<double> blk_max(nb, 0.0);
  std::vector<std::size_t> blk_checked(nb, 0);
  parallel_blocks(total, bs, threads, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const ProjectiveMatrix g = G.element(exhaustive ? k : sample[k]);
      if (G.in_WT(g)) continue;
      const double d = std::abs(coeff_direct(model, v, g) - coeff_charsum(chi, g));
      blk_max[b] = std::max(blk_max[b], d);
      ++blk_checked[b];
    }
  });

  CrossOracleReport r;
  r.exhaustive = exhaustive;
  for (std::size_t b = 0; b < nb; ++b) {
    r.max_abs_diff = std::max(r.max_abs_diff, blk_max[b]);
    r.checked += blk_checked[b];
  }
  r.pass = r.max_abs_diff <= tol;
  return r;
}

}  // namespace pslab
