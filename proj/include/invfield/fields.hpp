#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "invfield/bases.hpp"

namespace invfield {

/// Coefficients a_k of a field in one module, stored by basis index (the
/// pairing label order of SelfConjBasis). Holds the basis it refers to.
class CoefficientVector {
 public:
  CoefficientVector(std::shared_ptr<const SelfConjBasis> basis, CVector values);

  const SelfConjBasis& basis() const { return *basis_; }
  const std::shared_ptr<const SelfConjBasis>& basis_ptr() const { return basis_; }
  const CVector& values() const { return values_; }
  CVector& values() { return values_; }

  cplx at_label(int k) const { return values_(basis_->index_of(k)); }

  /// max |a_-k - conj(a_k)|, including |Im a_0|.
  double reality_defect() const;

 private:
  std::shared_ptr<const SelfConjBasis> basis_;
  CVector values_;
};

/// X + iY with X, Y independent N(0, variance / 2).
cplx complex_gaussian(RngStream& rng, double variance);

CoefficientVector sample_invariant_gaussian(std::shared_ptr<const SelfConjBasis> basis, double c,
                                            RngStream& rng);

/// Law of the coefficients a_k, k > 0.
struct Marginal {
  enum class Kind { Gaussian, UniformDisc, TwoPoint };
  Kind kind = Kind::Gaussian;
  double param = 1.0;  // c, r or rho

  static Marginal gaussian(double c) { return {Kind::Gaussian, c}; }
  static Marginal uniform_disc(double r) { return {Kind::UniformDisc, r}; }
  static Marginal two_point(double rho) { return {Kind::TwoPoint, rho}; }

  /// E|a_k|^2 for k > 0.
  double second_moment() const;
};

/// Independent a_k for k > 0 from the marginal, a_-k = conj(a_k), and a real
/// a_0 (odd dimension) with E[a_0^2] = E|a_k|^2:
///   gaussian(c):      a_k complex Gaussian of variance c, a_0 ~ N(0, c);
///   uniform_disc(r):  a_k uniform on the disc of radius r, a_0 uniform on
///                     [-w, w] with w = r sqrt(3/2);
///   two_point(rho):   a_k = rho e^{i phi} with uniform phi, a_0 = +-rho.
CoefficientVector sample_independent(std::shared_ptr<const SelfConjBasis> basis, const Marginal& marginal,
                                     RngStream& rng);

/// a^g = D(g^{-1}) a.
CoefficientVector rotate_coeffs(const GroupElement& g, const CoefficientVector& a);

struct BijouxSample {
  int ell = 0;
  CVector alpha;
  CVector Z;
  CMatrix B;  // B(i, j) = alpha_i Z_j
};

/// Z_j independent complex Gaussian with E|Z_j|^2 = 1, d = ell + 1 >= 2.
BijouxSample bijoux_sample(int ell, const CVector& alpha, RngStream& rng);

/// sqrt(d) tr(B D(g)).
cplx bijoux_eval(const BijouxSample& sample, const SU2Element& g);

/// sum_k a_k v_k(point).
cplx synthesize(const CoefficientVector& a, const Point& point);

using S2Field = std::function<cplx(const S2Point&)>;

/// Product grid: Gauss-Legendre in cos(theta) with L + 1 nodes times 2L + 2
/// uniform longitudes. Integrates spherical polynomials of degree <= 2L + 1
/// exactly.
struct S2Grid {
  std::vector<S2Point> points;
  std::vector<double> weights;
};
S2Grid s2_grid(int L);

/// Coefficients <T, Y_{lm}> for l = 0..L; entry l holds m = -l..l at m + l.
std::vector<CVector> analyze_s2(const S2Field& field, int L);

/// Coefficients a_i = <T, v_i> of one S2 module. The grid of degree G
/// (default ell/2) is exact for fields band-limited to degree 2G + 1 - ell/2.
CoefficientVector analyze_s2(const S2Field& field, std::shared_ptr<const SelfConjBasis> basis,
                             int grid_degree = -1);

}  // namespace invfield
