#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invfield {

using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients; coeffs[k] is the
/// coefficient of x^k. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients and two polynomials are equal iff their vectors are.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;

  /// Exact evaluation at a rational point.
  Rational evaluate(const Rational& x) const;
  /// The double x is converted exactly, the polynomial evaluated exactly and
  /// the result rounded once.
  double evaluate(double x) const;

  ExactPoly& operator+=(const ExactPoly& other);
  friend ExactPoly operator+(ExactPoly p, const ExactPoly& q) { return p += q; }
  friend ExactPoly operator-(const ExactPoly& p, const ExactPoly& q);
  friend ExactPoly operator*(const ExactPoly& p, const ExactPoly& q);
  friend bool operator==(const ExactPoly& p, const ExactPoly& q) { return p.coeffs_ == q.coeffs_; }

  static ExactPoly constant(const Rational& c);
  /// x^k
  static ExactPoly power(int k);
  /// (1 - x)^k
  static ExactPoly one_minus_x_power(int k);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Homogeneous polynomial of degree `degree` in (X, Y) = (|a|^2, |b|^2);
/// coeffs[k] multiplies X^k Y^(degree - k).
struct HomogeneousExact {
  int degree = 0;
  std::vector<Rational> coeffs;

  /// Highest power of X with a nonzero coefficient (-1 if zero).
  int leading_x_exponent() const;
  /// Restriction to the circle X + Y = 1, written in x = X.
  ExactPoly on_circle() const;
};

/// |<g e_s, e_j>|^2 as a homogeneous form in (|a|^2, |b|^2). Built from the
/// squared signed binomial sum over max(0, s + j - ell) <= h <= min(s, j).
HomogeneousExact p_poly_homogeneous(int ell, int s, int j);

/// |<g e_s, e_j>|^2 as an exact polynomial in x = |a|^2 (|b|^2 = 1 - x).
ExactPoly p_poly(int ell, int s, int j);

/// Exact binomial coefficient.
boost::multiprecision::cpp_int binomial_exact(int n, int k);

}  // namespace invfield
