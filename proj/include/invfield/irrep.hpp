#pragma once

#include <vector>

#include "invfield/group.hpp"
#include "invfield/types.hpp"

namespace invfield {

/// Element of the irreducible SU(2)-module H_ell: a homogeneous polynomial
/// of degree ell in (z1, z2), stored in the monomial basis
/// p_s = z1^s z2^(ell - s), s = 0..ell.
class HomogeneousPoly {
 public:
  explicit HomogeneousPoly(int degree);
  HomogeneousPoly(int degree, std::vector<cplx> coeffs);

  /// p_s
  static HomogeneousPoly monomial(int degree, int s);
  /// e_s = sqrt(binom(ell, s)) p_s, the orthonormal torus basis.
  static HomogeneousPoly basis_vector(int degree, int s);

  int degree() const { return degree_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx& operator[](int s) { return coeffs_[s]; }
  cplx operator[](int s) const { return coeffs_[s]; }

  /// Value at (z1, z2).
  cplx operator()(cplx z1, cplx z2) const;

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator*=(cplx scale);
  friend HomogeneousPoly operator+(HomogeneousPoly p, const HomogeneousPoly& q) { return p += q; }
  friend HomogeneousPoly operator*(cplx scale, HomogeneousPoly p) { return p *= scale; }

  /// Coefficients in the orthonormal basis e_s.
  CVector orthonormal_coords() const;
  static HomogeneousPoly from_orthonormal_coords(const CVector& coords);

  double max_abs() const;

 private:
  int degree_;
  std::vector<cplx> coeffs_;
};

/// Product of two homogeneous polynomials (degrees add).
HomogeneousPoly multiply(const HomogeneousPoly& p, const HomogeneousPoly& q);

double binomial(int n, int k);

/// (g p)(z1, z2) = p(a z1 - conj(b) z2, b z1 + conj(a) z2), obtained by
/// expanding the substituted linear forms.
HomogeneousPoly act(const SU2Element& g, const HomogeneousPoly& p);

/// SU(2)-invariant inner product, <p_s, p_r> = delta_{sr} / binom(ell, s);
/// linear in the first argument.
cplx inner(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// <g e_s, e_j> from the closed binomial sum
///   (c_s / c_j) sum_{h + k = j} binom(s,h) binom(ell-s,k) a^h conj(a)^(ell-s-k) b^k (-conj(b))^(s-h).
cplx matrix_coeff(int ell, const SU2Element& g, int s, int j);

/// Representation matrix in the basis e_0..e_ell; entry (j, s) = <g e_s, e_j>.
CMatrix rep_matrix(int ell, const SU2Element& g);

/// Kronecker product rep_matrix(ell, g1) (x) rep_matrix(ell, g2); index of
/// e_s (x) e_t is s * (ell + 1) + t.
CMatrix tensor_rep_matrix(int ell, const SO4Element& g);

/// Antilinear equivariant conjugation (J p)(z1, z2) = conj(p(-conj(z2), conj(z1))).
/// J p_s = (-1)^s p_{ell-s} and J^2 = (-1)^ell.
HomogeneousPoly conjugation_j(const HomogeneousPoly& p);

/// Matrix K with J z = K conj(z) in e-coordinates: K(ell - s, s) = (-1)^s.
CMatrix conjugation_matrix(int ell);

/// Components of H_ell (x) H_k: ell + k - 2j for j = 0..min(ell, k).
std::vector<int> clebsch_gordan_components(int ell, int k);

/// D(P, Q) = dP/dz1 dQ/dz2 - dP/dz2 dQ/dz1, a polynomial of degree 2 ell - 2.
HomogeneousPoly jacobian_pair(const HomogeneousPoly& P, const HomogeneousPoly& Q);

}  // namespace invfield
