#include "invfield/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace invfield {

namespace {

using lcplx = std::complex<long double>;

long double binomial_ld(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

void check_degree(int ell) { require(ell >= 0, "degree must be nonnegative"); }

void check_index(int ell, int s, const char* name) {
  require(s >= 0 && s <= ell, std::string("index ") + name + " out of range for degree " +
                                  std::to_string(ell));
}

std::vector<lcplx> powers(lcplx x, int n) {
  std::vector<lcplx> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0L;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * x;
  return out;
}

// Power tables shared by every entry of one representation matrix.
struct CoeffTables {
  int ell;
  std::vector<lcplx> a, abar, b, mbbar;
  std::vector<long double> c;  // sqrt(binom(ell, s))

  CoeffTables(int ell_, const SU2Element& g) : ell(ell_) {
    const lcplx ga(g.a().real(), g.a().imag());
    const lcplx gb(g.b().real(), g.b().imag());
    a = powers(ga, ell);
    abar = powers(std::conj(ga), ell);
    b = powers(gb, ell);
    mbbar = powers(-std::conj(gb), ell);
    c.resize(static_cast<std::size_t>(ell) + 1);
    for (int s = 0; s <= ell; ++s) c[s] = std::sqrt(binomial_ld(ell, s));
  }

  cplx entry(int s, int j) const {
    lcplx sum = 0.0L;
    const int h_lo = std::max(0, j - (ell - s));
    const int h_hi = std::min(s, j);
    for (int h = h_lo; h <= h_hi; ++h) {
      const int k = j - h;
      sum += binomial_ld(s, h) * binomial_ld(ell - s, k) * a[h] * abar[ell - s - k] * b[k] *
             mbbar[s - h];
    }
    sum *= c[s] / c[j];
    return cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  }
};

}  // namespace

double binomial(int n, int k) { return static_cast<double>(binomial_ld(n, k)); }

HomogeneousPoly::HomogeneousPoly(int degree) : degree_(degree) {
  check_degree(degree);
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, cplx(0.0));
}

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<cplx> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  check_degree(degree);
  require(coeffs_.size() == static_cast<std::size_t>(degree) + 1,
          "coefficient count must be degree + 1");
}

HomogeneousPoly HomogeneousPoly::monomial(int degree, int s) {
  HomogeneousPoly p(degree);
  check_index(degree, s, "s");
  p[s] = 1.0;
  return p;
}

HomogeneousPoly HomogeneousPoly::basis_vector(int degree, int s) {
  HomogeneousPoly p = monomial(degree, s);
  p[s] = std::sqrt(binomial(degree, s));
  return p;
}

cplx HomogeneousPoly::operator()(cplx z1, cplx z2) const {
  cplx sum = 0.0;
  for (int s = 0; s <= degree_; ++s)
    sum += coeffs_[s] * std::pow(z1, s) * std::pow(z2, degree_ - s);
  return sum;
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  require(other.degree_ == degree_, "degree mismatch");
  for (int s = 0; s <= degree_; ++s) coeffs_[s] += other.coeffs_[s];
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

CVector HomogeneousPoly::orthonormal_coords() const {
  CVector z(degree_ + 1);
  for (int s = 0; s <= degree_; ++s) z(s) = coeffs_[s] / std::sqrt(binomial(degree_, s));
  return z;
}

HomogeneousPoly HomogeneousPoly::from_orthonormal_coords(const CVector& coords) {
  const int degree = static_cast<int>(coords.size()) - 1;
  HomogeneousPoly p(degree);
  for (int s = 0; s <= degree; ++s) p[s] = coords(s) * std::sqrt(binomial(degree, s));
  return p;
}

double HomogeneousPoly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

HomogeneousPoly multiply(const HomogeneousPoly& p, const HomogeneousPoly& q) {
  HomogeneousPoly r(p.degree() + q.degree());
  for (int s = 0; s <= p.degree(); ++s)
    for (int t = 0; t <= q.degree(); ++t) r[s + t] += p[s] * q[t];
  return r;
}

HomogeneousPoly act(const SU2Element& g, const HomogeneousPoly& p) {
  const int ell = p.degree();
  // The two substituted linear forms, as degree-1 polynomials (index = power of z1).
  const HomogeneousPoly first(1, {-std::conj(g.b()), g.a()});
  const HomogeneousPoly second(1, {std::conj(g.a()), g.b()});

  std::vector<HomogeneousPoly> first_pow{HomogeneousPoly(0, {1.0})};
  std::vector<HomogeneousPoly> second_pow{HomogeneousPoly(0, {1.0})};
  for (int i = 1; i <= ell; ++i) {
    first_pow.push_back(multiply(first_pow.back(), first));
    second_pow.push_back(multiply(second_pow.back(), second));
  }

  HomogeneousPoly out(ell);
  for (int s = 0; s <= ell; ++s) {
    if (p[s] == cplx(0.0)) continue;
    out += p[s] * multiply(first_pow[s], second_pow[ell - s]);
  }
  return out;
}

cplx inner(const HomogeneousPoly& p, const HomogeneousPoly& q) {
  require(p.degree() == q.degree(), "inner product of polynomials of different degree");
  cplx sum = 0.0;
  for (int s = 0; s <= p.degree(); ++s)
    sum += p[s] * std::conj(q[s]) / binomial(p.degree(), s);
  return sum;
}

cplx matrix_coeff(int ell, const SU2Element& g, int s, int j) {
  check_degree(ell);
  check_index(ell, s, "s");
  check_index(ell, j, "j");
  return CoeffTables(ell, g).entry(s, j);
}

CMatrix rep_matrix(int ell, const SU2Element& g) {
  check_degree(ell);
  const CoeffTables tables(ell, g);
  CMatrix d(ell + 1, ell + 1);
  for (int s = 0; s <= ell; ++s)
    for (int j = 0; j <= ell; ++j) d(j, s) = tables.entry(s, j);
  return d;
}

CMatrix tensor_rep_matrix(int ell, const SO4Element& g) {
  const CMatrix d1 = rep_matrix(ell, g.g1);
  const CMatrix d2 = rep_matrix(ell, g.g2);
  const int n = ell + 1;
  CMatrix out(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.block(i * n, j * n, n, n) = d1(i, j) * d2;
  return out;
}

HomogeneousPoly conjugation_j(const HomogeneousPoly& p) {
  const int ell = p.degree();
  HomogeneousPoly out(ell);
  for (int s = 0; s <= ell; ++s) out[ell - s] = (s % 2 == 0 ? 1.0 : -1.0) * std::conj(p[s]);
  return out;
}

CMatrix conjugation_matrix(int ell) {
  check_degree(ell);
  CMatrix k = CMatrix::Zero(ell + 1, ell + 1);
  for (int s = 0; s <= ell; ++s) k(ell - s, s) = (s % 2 == 0) ? 1.0 : -1.0;
  return k;
}

std::vector<int> clebsch_gordan_components(int ell, int k) {
  require(ell >= 0 && k >= 0, "degrees must be nonnegative");
  std::vector<int> out;
  for (int j = 0; j <= std::min(ell, k); ++j) out.push_back(ell + k - 2 * j);
  return out;
}

HomogeneousPoly jacobian_pair(const HomogeneousPoly& P, const HomogeneousPoly& Q) {
  require(P.degree() == Q.degree(), "jacobian_pair needs polynomials of equal degree");
  const int ell = P.degree();
  require(ell >= 1, "jacobian_pair is undefined for constants (degree 0)");

  auto d1 = [ell](const HomogeneousPoly& f) {
    HomogeneousPoly out(ell - 1);
    for (int s = 1; s <= ell; ++s) out[s - 1] = static_cast<double>(s) * f[s];
    return out;
  };
  auto d2 = [ell](const HomogeneousPoly& f) {
    HomogeneousPoly out(ell - 1);
    for (int s = 0; s < ell; ++s) out[s] = static_cast<double>(ell - s) * f[s];
    return out;
  };

  HomogeneousPoly lhs = multiply(d1(P), d2(Q));
  const HomogeneousPoly rhs = multiply(d2(P), d1(Q));
  for (int s = 0; s <= lhs.degree(); ++s) lhs[s] -= rhs[s];
  return lhs;
}

}  // namespace invfield
