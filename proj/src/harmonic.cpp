#include "pslab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pslab/parallel.hpp"

namespace pslab {

GroupFunction constant_function(const Pgl2& G, cplx value) {
  return {G.q(), std::vector<cplx>(G.size(), value)};
}

namespace {

void check_sizes(const Pgl2& G, const GroupFunction& f1, const GroupFunction& f2) {
  if (f1.q != f2.q || f1.q != G.q() || f1.size() != G.size() || f2.size() != G.size()) {
    throw SizeMismatch("group functions live on different groups");
  }
}

// inverses of all elements, precomputed once per convolution
std::vector<ProjectiveMatrix> all_inverses(const Pgl2& G, unsigned threads) {
  std::vector<ProjectiveMatrix> inv(G.size());
  parallel_blocks(G.size(), 8192, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) inv[i] = G.inverse(G.element(i));
  });
  return inv;
}

}  // namespace

GroupFunction convolve(const Pgl2& G, const GroupFunction& f1, const GroupFunction& f2,
                       unsigned threads) {
  check_sizes(G, f1, f2);
  const std::size_t n = G.size();
  const auto inv = all_inverses(G, threads);
  GroupFunction out{G.q(), std::vector<cplx>(n)};
  const double w = 1.0 / static_cast<double>(n);
  parallel_blocks(n, 256, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t gi = lo; gi < hi; ++gi) {
      const ProjectiveMatrix g = G.element(gi);
      cplx acc(0.0, 0.0);
      for (std::size_t h = 0; h < n; ++h) {
        acc += f1.values[h] * f2.values[G.index_of(G.multiply(inv[h], g))];
      }
      out.values[gi] = acc * w;
    }
  });
  return out;
}

std::vector<cplx> convolve_at(const Pgl2& G, const GroupFunction& f1,
                              const GroupFunction& f2,
                              std::span<const std::size_t> out_indices, unsigned threads) {
  check_sizes(G, f1, f2);
  const std::size_t n = G.size();
  const auto inv = all_inverses(G, threads);
  std::vector<cplx> out(out_indices.size());
  const double w = 1.0 / static_cast<double>(n);
  parallel_blocks(out_indices.size(), 16, threads,
                  [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const ProjectiveMatrix g = G.element(out_indices[k]);
      cplx acc(0.0, 0.0);
      for (std::size_t h = 0; h < n; ++h) {
        acc += f1.values[h] * f2.values[G.index_of(G.multiply(inv[h], g))];
      }
      out[k] = acc * w;
    }
  });
  return out;
}

SchurReport schur_check(const RepresentationModel& model, const Eigen::VectorXcd& v1,
                        const Eigen::VectorXcd& v2, const Eigen::VectorXcd& v3,
                        const Eigen::VectorXcd& v4, unsigned threads, double tol) {
  const Pgl2& G = model.group();
  const std::size_t n = G.size();
  const std::size_t bs = 2048;
  const std::size_t nb = block_count(n, bs);
  std::vector<cplx> partial(nb, cplx(0.0, 0.0));
  parallel_blocks(n, bs, threads, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = lo; i < hi; ++i) {
      const MonomialAction act = model.action(G.element(i));
      const cplx m12 = model.apply(act, v1).dot(v2);
      const cplx m34 = model.apply(act, v3).dot(v4);
      acc += m12 * std::conj(m34);
    }
    partial[b] = acc;
  });
  cplx lhs(0.0, 0.0);
  for (const auto& p : partial) lhs += p;
  lhs /= static_cast<double>(n);

  SchurReport r;
  r.lhs = lhs;
  r.rhs = v1.dot(v3) * std::conj(v2.dot(v4)) / static_cast<double>(model.irreducible_dim());
  r.tol = tol;
  r.pass = std::abs(r.lhs - r.rhs) <= tol;
  return r;
}

KfDecomposition decompose_kf(const RepresentationModel& model, const Eigen::VectorXcd& v,
                             CoeffSource source, unsigned threads) {
  const Pgl2& G = model.group();
  const CoefficientFunction c = tabulate_coefficients(model, v, source, threads);
  KfDecomposition d;
  d.kf = {G.q(), std::vector<cplx>(G.size())};
  d.k1 = {G.q(), std::vector<cplx>(G.size(), cplx(0.0, 0.0))};
  d.k2 = {G.q(), std::vector<cplx>(G.size())};
  for (std::size_t i = 0; i < G.size(); ++i) {
    d.kf.values[i] = std::conj(c.values[i]);
    if (G.in_WT(G.element(i))) d.k1.values[i] = d.kf.values[i];
    d.k2.values[i] = d.kf.values[i] - d.k1.values[i];
  }
  return d;
}

IdempotentReport idempotent_checks(const Pgl2& G, const GroupFunction& kf,
                                   const GroupFunction& k1, std::uint32_t dim,
                                   double tol, unsigned threads) {
  const std::uint32_t q = G.q();
  const double index_const = static_cast<double>(q) * (q + 1) / 2.0;

  IdempotentReport r;
  r.sampled = q > 13;
  std::vector<std::size_t> idx;
  if (r.sampled) {
    std::mt19937_64 rng(0x6b66736d70ULL ^ q);
    idx.resize(1000);
    for (auto& i : idx) i = rng() % G.size();
  } else {
    idx.resize(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  }

  const auto conv_kf = convolve_at(G, kf, kf, idx, threads);
  const auto conv_k1 = convolve_at(G, k1, k1, idx, threads);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    r.residual_kf = std::max(
        r.residual_kf, std::abs(kf.values[idx[k]] - static_cast<double>(dim) * conv_kf[k]));
    r.residual_k1 =
        std::max(r.residual_k1, std::abs(k1.values[idx[k]] - index_const * conv_k1[k]));
  }
  r.pass_kf = r.residual_kf <= tol;
  r.pass_k1 = r.residual_k1 <= tol;
  return r;
}

int orbit_span_dim(const RepresentationModel& model, const Eigen::VectorXcd& v) {
  if (v.norm() == 0.0) return 0;
  const Pgl2& G = model.group();
  const std::size_t n = G.size();
  const Eigen::Index dim = v.size();

  auto rank_of_sample = [&](std::size_t cols) {
    Eigen::MatrixXcd m(dim, static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < cols; ++i) {
      m.col(static_cast<Eigen::Index>(i)) = model.apply(G.element(i), v);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv[i] > 1e-8 * sv[0]) ++rank;
    }
    return rank;
  };

  std::size_t cols = std::min<std::size_t>(n, 4 * static_cast<std::size_t>(dim));
  int rank = rank_of_sample(cols);
  while (cols < n) {
    const std::size_t next = std::min(n, cols * 2);
    const int r2 = rank_of_sample(next);
    if (r2 == rank && cols >= static_cast<std::size_t>(dim)) return rank;
    rank = r2;
    cols = next;
  }
  return rank;
}

double sup_norm(const GroupFunction& f) {
  double m = 0.0;
  for (const auto& z : f.values) m = std::max(m, std::abs(z));
  return m;
}

std::size_t support_size(const GroupFunction& f, double tol) {
  std::size_t n = 0;
  for (const auto& z : f.values) {
    if (std::abs(z) > tol) ++n;
  }
  return n;
}

}  // namespace pslab
