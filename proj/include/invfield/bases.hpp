#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "invfield/group.hpp"
#include "invfield/harmonics.hpp"
#include "invfield/rng.hpp"
#include "invfield/types.hpp"

namespace invfield {

/// Which homogeneous space realizes the module.
///
///  - S2:  H_ell with ell even, realized in L^2(S^2) (dimension ell + 1).
///  - S3:  H_ell (x) H_ell under SO(4), realized in L^2(S^3) (dimension (ell + 1)^2).
///  - SU2: H_ell as the span of one column of matrix coefficients on SU(2).
///         Even ell gives the middle column, a real module; odd ell is
///         quaternionic and has only a J-paired basis with J^2 = -1 and no
///         realization by conjugation-closed functions.
enum class Space { S2, S3, SU2 };

struct SpaceTag {
  Space space = Space::S2;
  int ell = 0;  // SU(2) degree

  int dim() const;
  /// J^2 = +1 on the module.
  bool real_type() const;
};

std::string to_string(Space space);
Space parse_space(const std::string& name);

/// Orthonormal basis of one irreducible module, stored as a unitary `change`
/// whose column i holds basis vector i in the reference coordinates (e_s for
/// S2/SU2, e_s (x) e_t for S3).
///
/// Basis vectors are ordered by pairing label k = h, ..., 1, [0], -1, ..., -h
/// with h = dim / 2; the zero label exists only in odd dimension. Index i and
/// index dim - 1 - i are conjugate partners: J v_k = v_{-k}.
class SelfConjBasis {
 public:
  SelfConjBasis(SpaceTag tag, CMatrix change, std::vector<std::array<int, 2>> torus_weights = {});

  const SpaceTag& tag() const { return tag_; }
  int dim() const { return static_cast<int>(change_.cols()); }
  int half() const { return dim() / 2; }
  bool has_zero() const { return dim() % 2 == 1; }
  const CMatrix& change() const { return change_; }

  int index_of(int label) const;
  int label_of(int index) const;
  int partner(int index) const { return dim() - 1 - index; }

  /// Doubled torus weights (2 k1, 2 k2) of each basis vector when the basis
  /// is torus-adapted; empty otherwise. For S2/SU2 the second entry is 0.
  const std::vector<std::array<int, 2>>& torus_weights() const { return torus_weights_; }
  bool torus_adapted() const { return !torus_weights_.empty(); }

 private:
  SpaceTag tag_;
  CMatrix change_;
  std::vector<std::array<int, 2>> torus_weights_;
};

/// Representation matrix of g in the reference coordinates of the space.
/// Throws InvalidArgument when the group does not act on the space.
CMatrix reference_rep(const SpaceTag& tag, const GroupElement& g);

/// K with J z = K conj(z) in reference coordinates.
CMatrix module_conjugation(const SpaceTag& tag);

/// Unitary A taking coordinates (z_h..z_1, [z_0], z_-1..z_-h) to
/// ((z_k + z_-k)/sqrt2 for k = h..1, [z_0], (z_k - z_-k)/(i sqrt2) for k = 1..h).
CMatrix realify_matrix(int dim);

/// The torus-adapted self-conjugated basis h_k = gamma_k f_k. Phases:
/// gamma = 1 on positive labels, the conjugate partner carries the sign that
/// J produces, and the zero label of S2 with odd ell/2 carries i.
SelfConjBasis torus_adapted_selfconj_basis(const SpaceTag& tag);

/// Basis with change U = A^* O A applied to `reference`, where O is a real
/// orthogonal matrix.
SelfConjBasis rotate_selfconj_basis(const SelfConjBasis& reference, const RMatrix& orthogonal);

/// As rotate_selfconj_basis with O drawn by sign-fixed QR of a real
/// Gaussian matrix.
SelfConjBasis random_selfconj_basis(const SelfConjBasis& reference, RngStream& rng);

/// Left translate w_k = g0 v_k.
SelfConjBasis translated_basis(const SelfConjBasis& reference, const GroupElement& g0);

/// D(g) in the basis: change^* D_ref(g) change, entry (i, k) = <g v_k, v_i>.
CMatrix basis_rep_matrix(const SelfConjBasis& basis, const GroupElement& g);

/// A D(g) A^*. Real orthogonal for modules of real type; returned complex so
/// callers can inspect the imaginary residue.
CMatrix realified_rep(const SelfConjBasis& basis, const GroupElement& g);

/// max_k |J v_k - v_{-k}|. For quaternionic modules J v_{-k} = -v_k is
/// expected instead on negative labels.
double pairing_defect(const SelfConjBasis& basis);

double unitarity_defect(const CMatrix& m);

/// A random group element of the kind acting on the space.
GroupElement haar_sample_for(const SpaceTag& tag, RngStream& rng);
GroupElement identity_for(const SpaceTag& tag);

/// Evaluation point: S2Point for S2, SU2Element for S3 and SU2.
using Point = std::variant<S2Point, SU2Element>;

/// Value of basis vector `index` as a function on the space. S2 functions
/// are orthonormal for the area measure, S3/SU2 functions for the normalized
/// Haar measure.
cplx basis_function(const SelfConjBasis& basis, int index, const Point& point);

/// All basis functions at one point.
CVector basis_functions(const SelfConjBasis& basis, const Point& point);

/// S2 only: M with v_i = sum_m M(m + L, i) Y_{L m}, L = ell / 2. Unitary.
/// The reference function of e_{L+k} is conj(gamma_0) Y_{L,k}.
CMatrix s2_harmonic_map(const SelfConjBasis& basis);

}  // namespace invfield
