#pragma once

#include <vector>

#include "invfield/group.hpp"
#include "invfield/types.hpp"

namespace invfield {

/// Point of the unit sphere in colatitude/longitude, theta in [0, pi].
struct S2Point {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d cartesian() const;
  static S2Point from_cartesian(const Eigen::Vector3d& v);
};

/// Spherical harmonic Y_{L m}(theta, phi), orthonormal for the area measure,
/// with the Condon-Shortley phase: Y_{L,-m} = (-1)^m conj(Y_{L m}).
/// Evaluated with the fully normalized associated Legendre recurrence.
cplx eval_s2(int L, int m, double theta, double phi);

/// Y_{L m} for m = -L..L (entry m + L).
CVector eval_s2_degree(int L, double theta, double phi);

/// sqrt(ell + 1) <x e_j, e_i>: orthonormal matrix-coefficient functions on
/// S^3 = SU(2) for the normalized Haar measure.
cplx eval_s3(int ell, int i, int j, const SU2Element& x);

/// A representative x(p) in SU(2) with rotation_matrix(x) * e_z = p, namely
/// t_{-phi/2} * (cos(theta/2), -sin(theta/2)).
SU2Element s2_section(const S2Point& p);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

}  // namespace invfield
