#include "pslab/principal_series.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace pslab {

RepresentationModel::RepresentationModel(const FieldSpec& field,
                                         std::optional<MultiplicativeCharacter> chi,
                                         RepKind kind)
    : field_(&field), chi_(std::move(chi)), kind_(kind), group_(field.q()) {}

RepresentationModel RepresentationModel::principal_series(
    const FieldSpec& field, const MultiplicativeCharacter& chi) {
  if (chi.order() <= 2) {
    throw ReducibleInduction("character index " + std::to_string(chi.index()) +
                             " has order " + std::to_string(chi.order()) +
                             " <= 2; induced representation is reducible");
  }
  return RepresentationModel(field, chi, RepKind::principal_series);
}

RepresentationModel RepresentationModel::steinberg(const FieldSpec& field) {
  return RepresentationModel(field, std::nullopt, RepKind::steinberg);
}

ProjectiveMatrix RepresentationModel::section(std::size_t point_idx) const {
  const std::uint32_t q = field_->q();
  if (point_idx < q) {
    return {1, 0, static_cast<felt>(point_idx), 1};
  }
  return group_.weyl();
}

MonomialAction RepresentationModel::action(const ProjectiveMatrix& g) const {
  const std::uint32_t q = field_->q();
  const auto& F = *field_;
  MonomialAction act;
  act.target.resize(q + 1);
  act.phase_exp.assign(q + 1, 0);
  for (std::size_t x = 0; x <= q; ++x) {
    const ProjectiveMatrix s = section(x);
    // m = s * g, unreduced (any projective scale cancels in the cocycle)
    const felt ma = F.add(F.mul(s.a, g.a), F.mul(s.b, g.c));
    const felt mb = F.add(F.mul(s.a, g.b), F.mul(s.b, g.d));
    const felt mc = F.add(F.mul(s.c, g.a), F.mul(s.d, g.c));
    const felt md = F.add(F.mul(s.c, g.b), F.mul(s.d, g.d));
    const std::size_t y = md != 0 ? F.mul(mc, F.inv(md)) : q;
    const ProjectiveMatrix t = section(y);
    // b = m * adj(section(y)); sections have det 1, so this is m * s(y)^-1
    // and is exactly upper triangular.
    const felt ba = F.sub(F.mul(ma, t.d), F.mul(mb, t.c));
    const felt bd = F.sub(F.mul(md, t.a), F.mul(mc, t.b));
    assert(F.sub(F.mul(mc, t.d), F.mul(md, t.c)) == 0);
    act.target[x] = static_cast<std::uint32_t>(y);
    if (kind_ == RepKind::principal_series) {
      act.phase_exp[x] = chi_->exponent(F.mul(ba, F.inv(bd)));
    }
  }
  return act;
}

Eigen::VectorXcd RepresentationModel::apply(const MonomialAction& act,
                                            const Eigen::VectorXcd& v) const {
  const auto n = static_cast<Eigen::Index>(act.target.size());
  Eigen::VectorXcd out(n);
  if (kind_ == RepKind::principal_series) {
    for (Eigen::Index x = 0; x < n; ++x) {
      out[x] = chi_->unit(act.phase_exp[x]) * v[act.target[x]];
    }
  } else {
    for (Eigen::Index x = 0; x < n; ++x) {
      out[x] = v[act.target[x]];
    }
  }
  return out;
}

Eigen::MatrixXcd RepresentationModel::rep_matrix(const ProjectiveMatrix& g) const {
  const MonomialAction act = action(g);
  const auto n = static_cast<Eigen::Index>(act.target.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const cplx phase = kind_ == RepKind::principal_series
                           ? chi_->unit(act.phase_exp[x])
                           : cplx(1.0, 0.0);
    m(x, act.target[x]) = phase;
  }
  return m;
}

Eigen::VectorXcd RepresentationModel::invariant_vector() const {
  if (kind_ != RepKind::principal_series) {
    throw ReducibleInduction("invariant_vector is defined on the principal-series model");
  }
  const std::uint32_t q = field_->q();
  const std::uint32_t m = q - 1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(q + 1);
  for (felt u = 1; u < q; ++u) {
    // chi(det/cd) at the section of [u:1] is chi(1/u) = chi^{-1}(u)
    v[u] = chi_->unit(m - chi_->exponent(u)) * scale;
  }
  // v[0] = v[q] = 0 (sections with cd = 0); first nonzero coordinate is
  // v[1] = 1/sqrt(q-1), already positive real.
  return v;
}

Eigen::VectorXcd RepresentationModel::steinberg_newvector() const {
  if (kind_ != RepKind::steinberg) {
    throw std::logic_error("steinberg_newvector is defined on the steinberg model");
  }
  const std::uint32_t q = field_->q();
  const Eigen::Index n = q + 1;
  // B fixes the coset of the identity (point [0:1]) and permutes the rest
  // transitively, so the B-fixed part of the permutation module is spanned by
  // the two orbit indicators; remove the constants and normalise.
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(n, cplx(-1.0 / n, 0.0));
  v[0] += 1.0;
  v /= v.norm();
  if (v[0].real() < 0) v = -v;
  return v;
}

}  // namespace pslab
