#include "invfield/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gsl/gsl_integration.h>

#include "invfield/irrep.hpp"

namespace invfield {

Eigen::Vector3d S2Point::cartesian() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

S2Point S2Point::from_cartesian(const Eigen::Vector3d& v) {
  const Eigen::Vector3d u = v.normalized();
  return {std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

namespace {

// Fully normalized associated Legendre values p_{l,m}(cos theta) for fixed
// m >= 0 and l = m..L, including the Condon-Shortley sign.
double normalized_legendre(int L, int m, double theta) {
  const double x = std::cos(theta);
  const double sx = std::sin(theta);
  double pmm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * sx;
  if (L == m) return pmm;
  double prev = pmm;
  double cur = x * std::sqrt(2.0 * m + 3.0) * pmm;
  for (int l = m + 2; l <= L; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
    const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
    const double next = a * (x * cur - b * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

cplx eval_s2(int L, int m, double theta, double phi) {
  require(L >= 0, "spherical harmonic degree must be nonnegative");
  require(std::abs(m) <= L, "spherical harmonic order |m| exceeds the degree");
  const int am = std::abs(m);
  const cplx y = normalized_legendre(L, am, theta) * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

CVector eval_s2_degree(int L, double theta, double phi) {
  CVector out(2 * L + 1);
  for (int m = -L; m <= L; ++m) out(m + L) = eval_s2(L, m, theta, phi);
  return out;
}

cplx eval_s3(int ell, int i, int j, const SU2Element& x) {
  return std::sqrt(static_cast<double>(ell + 1)) * matrix_coeff(ell, x, j, i);
}

SU2Element s2_section(const S2Point& p) {
  const SU2Element tilt(std::cos(p.theta / 2.0), -std::sin(p.theta / 2.0));
  return compose(torus_element(-p.phi / 2.0), tilt);
}

QuadratureRule gauss_legendre(int n) {
  require(n >= 1, "quadrature needs at least one node");
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
  if (table == nullptr) throw std::runtime_error("failed to allocate Gauss-Legendre table");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(-1.0, 1.0, i, &rule.nodes[i], &rule.weights[i], table);
  gsl_integration_glfixed_table_free(table);
  return rule;
}

}  // namespace invfield
