#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "pslab/characters.hpp"
#include "pslab/pgl2.hpp"

namespace pslab {

enum class RepKind { principal_series, steinberg };

// Right translation by a fixed g acts on the induced space as a monomial
// matrix: (rho(g)f)(x) = phase(x) * f(target(x)).  Phases are stored as exact
// exponents in units of 2 pi/(q-1).
struct MonomialAction {
  std::vector<std::uint32_t> target;
  std::vector<std::uint32_t> phase_exp;
};

// Finite models used throughout:
//
//   principal_series: functions f on PGL(2,F_q) with f(bg) = chi(a/d) f(g)
//     for upper-triangular b = (a *; 0 d), acted on by right translation
//     (rho(g)f)(x) = f(xg).  Dimension q+1.  Requires chi of order > 2,
//     otherwise the induced space splits (ReducibleInduction).
//
//   steinberg: the permutation action on P^1(F_q) (trivial cocycle); the
//     irreducible q-dimensional piece is the orthogonal complement of the
//     constants inside this ambient space.
//
// Basis and section: coset B\G is identified with P^1 via the bottom row.
// Point [u:1] gets the section matrix (1 0; u 1) and [1:0] gets w; both have
// determinant 1, so sections invert exactly via the adjugate.  The cocycle
// sign/transpose convention is pinned by requiring <rho(t)v, v> = 1 on the
// diagonal torus T, which holds for this choice.
//
// Inner products everywhere are conjugate-linear in the FIRST argument
// (Eigen's dot), which is what makes the rep-theoretic coefficient agree
// with the closed character-sum evaluation.
class RepresentationModel {
 public:
  static RepresentationModel principal_series(const FieldSpec& field,
                                              const MultiplicativeCharacter& chi);
  static RepresentationModel steinberg(const FieldSpec& field);

  RepKind kind() const { return kind_; }
  const FieldSpec& field() const { return *field_; }
  const Pgl2& group() const { return group_; }
  const MultiplicativeCharacter& character() const { return *chi_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint32_t char_index() const { return chi_ ? chi_->index() : 0; }

  int ambient_dim() const { return static_cast<int>(q()) + 1; }
  int irreducible_dim() const {
    return kind_ == RepKind::principal_series ? ambient_dim() : ambient_dim() - 1;
  }

  ProjectiveMatrix section(std::size_t point_idx) const;

  MonomialAction action(const ProjectiveMatrix& g) const;
  Eigen::VectorXcd apply(const MonomialAction& act, const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd apply(const ProjectiveMatrix& g, const Eigen::VectorXcd& v) const {
    return apply(action(g), v);
  }
  Eigen::MatrixXcd rep_matrix(const ProjectiveMatrix& g) const;

  // The unique T-fixed unit vector of the principal series; its value at the
  // section of [u:1] is chi^{-1}(u)/sqrt(q-1) and it vanishes where the
  // bottom-row product cd is zero.  First nonzero coordinate is positive real.
  Eigen::VectorXcd invariant_vector() const;

  // The unique B-fixed unit vector orthogonal to the constants (Steinberg
  // kind); first nonzero coordinate positive real.
  Eigen::VectorXcd steinberg_newvector() const;

 private:
  RepresentationModel(const FieldSpec& field, std::optional<MultiplicativeCharacter> chi,
                      RepKind kind);

  const FieldSpec* field_;
  std::optional<MultiplicativeCharacter> chi_;
  RepKind kind_;
  Pgl2 group_;
};

}  // namespace pslab
