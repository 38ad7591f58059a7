#include "invfield/exact_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "invfield/types.hpp"

namespace invfield {

using boost::multiprecision::cpp_int;

cpp_int binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational ExactPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ExactPoly::evaluate(double x) const {
  require(std::isfinite(x), "cannot evaluate at a non-finite point");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // x = m * 2^53 * 2^(e - 53) with m * 2^53 an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational exact(scaled);
  const int shift = exponent - 53;
  if (shift >= 0)
    exact *= Rational(cpp_int(1) << shift);
  else
    exact /= Rational(cpp_int(1) << (-shift));
  return evaluate(exact).convert_to<double>();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

ExactPoly operator-(const ExactPoly& p, const ExactPoly& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[k] -= q.coeffs_[k];
  return ExactPoly(std::move(c));
}

ExactPoly operator*(const ExactPoly& p, const ExactPoly& q) {
  if (p.is_zero() || q.is_zero()) return ExactPoly();
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::power(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c[k] = 1;
  return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::one_minus_x_power(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c[i] = Rational((i % 2 == 0 ? 1 : -1) * binomial_exact(k, i));
  return ExactPoly(std::move(c));
}

std::string ExactPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    Rational c = coeffs_[k];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    os << c;
    if (k >= 1) os << "*x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

int HomogeneousExact::leading_x_exponent() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != 0) return k;
  return -1;
}

ExactPoly HomogeneousExact::on_circle() const {
  ExactPoly out;
  for (int k = 0; k <= degree; ++k) {
    if (coeffs[k] == 0) continue;
    out += ExactPoly::constant(coeffs[k]) * ExactPoly::power(k) *
           ExactPoly::one_minus_x_power(degree - k);
  }
  return out;
}

HomogeneousExact p_poly_homogeneous(int ell, int s, int j) {
  require(ell >= 0, "degree must be nonnegative");
  require(s >= 0 && s <= ell && j >= 0 && j <= ell, "p_poly index out of range");

  // Inner sum: sum_h sign * binom(s,h) binom(ell-s,j-h) |a|^(ell-s-j+2h) |b|^(s+j-2h).
  // Squaring pairs h, h' into X^(ell-s-j+h+h') Y^(s+j-h-h').
  const int h_lo = std::max(0, s + j - ell);
  const int h_hi = std::min(s, j);
  std::vector<cpp_int> term;
  for (int h = h_lo; h <= h_hi; ++h) {
    cpp_int t = binomial_exact(s, h) * binomial_exact(ell - s, j - h);
    if ((s - h) % 2 != 0) t = -t;
    term.push_back(t);
  }

  HomogeneousExact out;
  out.degree = ell;
  out.coeffs.assign(static_cast<std::size_t>(ell) + 1, Rational(0));
  const Rational scale(binomial_exact(ell, s), binomial_exact(ell, j));  // c_s^2 / c_j^2
  for (int h = h_lo; h <= h_hi; ++h)
    for (int hp = h_lo; hp <= h_hi; ++hp)
      out.coeffs[ell - s - j + h + hp] += Rational(term[h - h_lo] * term[hp - h_lo]);
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

ExactPoly p_poly(int ell, int s, int j) { return p_poly_homogeneous(ell, s, j).on_circle(); }

}  // namespace invfield
