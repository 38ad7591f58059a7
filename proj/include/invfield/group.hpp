#pragma once

#include <variant>

#include "invfield/rng.hpp"
#include "invfield/types.hpp"

namespace invfield {

/// Element of SU(2) in the (a, b) chart,
///
///     g = [  a        b    ]
///         [ -conj(b)  conj(a) ],   |a|^2 + |b|^2 = 1.
///
/// The pair is renormalized on construction; the 2x2 form is only
/// materialized on request.
class SU2Element {
 public:
  SU2Element() = default;  // identity
  /// Throws InvalidArgument("degenerate group element") for (0, 0).
  SU2Element(cplx a, cplx b);

  cplx a() const { return a_; }
  cplx b() const { return b_; }

  Eigen::Matrix2cd matrix() const;
  SU2Element operator-() const { return SU2Element(-a_, -b_); }

  static SU2Element identity() { return SU2Element(); }

 private:
  cplx a_{1.0, 0.0};
  cplx b_{0.0, 0.0};
};

SU2Element compose(const SU2Element& g, const SU2Element& h);
SU2Element inverse(const SU2Element& g);
/// t_theta = diag(e^{i theta}, e^{-i theta}).
SU2Element torus_element(double theta);
/// Haar-distributed element: a normalized 4-dimensional standard Gaussian.
SU2Element haar_sample(RngStream& rng);

/// Covering map SU(2) -> SO(3), X -> g X g^* on traceless Hermitian matrices
/// expressed in the Pauli basis. t_theta maps to the rotation by -2 theta
/// about the z axis.
Eigen::Matrix3d rotation_matrix(const SU2Element& g);

/// Lift of the ZYZ Euler rotation Rz(alpha) Ry(beta) Rz(gamma) (one of the
/// two preimages). Used only to accept witnesses from the command line.
SU2Element from_euler_zyz(double alpha, double beta, double gamma);

double max_abs_diff(const SU2Element& g, const SU2Element& h);

/// SO(4) = SU(2) x SU(2) / {(1,1), (-1,-1)}. Equality ignores the
/// simultaneous sign flip.
struct SO4Element {
  SU2Element g1;
  SU2Element g2;

  static SO4Element identity() { return {}; }
};

SO4Element compose(const SO4Element& g, const SO4Element& h);
SO4Element inverse(const SO4Element& g);
SO4Element haar_sample_so4(RngStream& rng);
bool equivalent(const SO4Element& g, const SO4Element& h, double tol = 1e-14);

using GroupElement = std::variant<SU2Element, SO4Element>;

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

}  // namespace invfield
