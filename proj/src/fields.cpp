#include "invfield/fields.hpp"

#include <cmath>
#include <numbers>

#include "invfield/irrep.hpp"

namespace invfield {

CoefficientVector::CoefficientVector(std::shared_ptr<const SelfConjBasis> basis, CVector values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  require(basis_ != nullptr, "coefficient vector needs a basis");
  require(values_.size() == basis_->dim(), "coefficient count does not match the basis dimension");
}

double CoefficientVector::reality_defect() const {
  double worst = 0.0;
  const int d = basis_->dim();
  for (int i = 0; i < d; ++i)
    worst = std::max(worst, std::abs(values_(basis_->partner(i)) - std::conj(values_(i))));
  return worst;
}

cplx complex_gaussian(RngStream& rng, double variance) {
  require(variance >= 0.0, "variance must be nonnegative");
  const double s = std::sqrt(variance / 2.0);
  const double x = rng.normal();
  const double y = rng.normal();
  return {s * x, s * y};
}

double Marginal::second_moment() const {
  switch (kind) {
    case Kind::Gaussian: return param;
    case Kind::UniformDisc: return param * param / 2.0;
    case Kind::TwoPoint: return param * param;
  }
  return 0.0;
}

namespace {

void check_marginal(const Marginal& m) {
  require(std::isfinite(m.param), "marginal parameter must be finite");
  if (m.kind == Marginal::Kind::Gaussian)
    require(m.param >= 0.0, "gaussian variance must be nonnegative");
  else
    require(m.param > 0.0, "marginal radius must be positive");
}

cplx draw_positive(const Marginal& m, RngStream& rng) {
  switch (m.kind) {
    case Marginal::Kind::Gaussian: return complex_gaussian(rng, m.param);
    case Marginal::Kind::UniformDisc: {
      const double rad = m.param * std::sqrt(rng.uniform());
      return std::polar(rad, 2.0 * std::numbers::pi * rng.uniform());
    }
    case Marginal::Kind::TwoPoint: return std::polar(m.param, 2.0 * std::numbers::pi * rng.uniform());
  }
  return 0.0;
}

double draw_zero(const Marginal& m, RngStream& rng) {
  switch (m.kind) {
    case Marginal::Kind::Gaussian: return std::sqrt(m.param) * rng.normal();
    case Marginal::Kind::UniformDisc:
      return m.param * std::sqrt(1.5) * (2.0 * rng.uniform() - 1.0);
    case Marginal::Kind::TwoPoint: return rng.uniform() < 0.5 ? -m.param : m.param;
  }
  return 0.0;
}

}  // namespace

CoefficientVector sample_independent(std::shared_ptr<const SelfConjBasis> basis, const Marginal& marginal,
                                     RngStream& rng) {
  require(basis != nullptr, "coefficient vector needs a basis");
  require(basis->tag().real_type(), "real fields need a module of real type");
  check_marginal(marginal);
  const int d = basis->dim();
  CVector a(d);
  for (int i = 0; i < basis->half(); ++i) {
    a(i) = draw_positive(marginal, rng);
    a(basis->partner(i)) = std::conj(a(i));
  }
  if (basis->has_zero()) a(basis->half()) = draw_zero(marginal, rng);
  return CoefficientVector(std::move(basis), std::move(a));
}

CoefficientVector sample_invariant_gaussian(std::shared_ptr<const SelfConjBasis> basis, double c,
                                            RngStream& rng) {
  require(c >= 0.0, "variance c must be nonnegative");
  return sample_independent(std::move(basis), Marginal::gaussian(c), rng);
}

CoefficientVector rotate_coeffs(const GroupElement& g, const CoefficientVector& a) {
  const CMatrix D = basis_rep_matrix(a.basis(), inverse(g));
  return CoefficientVector(a.basis_ptr(), D * a.values());
}

BijouxSample bijoux_sample(int ell, const CVector& alpha, RngStream& rng) {
  const int d = ell + 1;
  require(d >= 2, "bijoux field needs dimension d >= 2");
  require(alpha.size() == d, "alpha must have ell + 1 entries");
  BijouxSample s;
  s.ell = ell;
  s.alpha = alpha;
  s.Z.resize(d);
  for (int j = 0; j < d; ++j) s.Z(j) = complex_gaussian(rng, 1.0);
  s.B = alpha * s.Z.transpose();
  return s;
}

cplx bijoux_eval(const BijouxSample& sample, const SU2Element& g) {
  const double d = static_cast<double>(sample.ell + 1);
  return std::sqrt(d) * (sample.B * rep_matrix(sample.ell, g)).trace();
}

cplx synthesize(const CoefficientVector& a, const Point& point) {
  return a.values().transpose() * basis_functions(a.basis(), point);
}

S2Grid s2_grid(int L) {
  require(L >= 0, "band limit must be nonnegative");
  const QuadratureRule gl = gauss_legendre(L + 1);
  const int nphi = 2 * L + 2;
  S2Grid grid;
  for (std::size_t a = 0; a < gl.nodes.size(); ++a) {
    const double theta = std::acos(gl.nodes[a]);
    for (int b = 0; b < nphi; ++b) {
      grid.points.push_back({theta, 2.0 * std::numbers::pi * b / nphi});
      grid.weights.push_back(gl.weights[a] * 2.0 * std::numbers::pi / nphi);
    }
  }
  return grid;
}

std::vector<CVector> analyze_s2(const S2Field& field, int L) {
  const S2Grid grid = s2_grid(L);
  std::vector<CVector> out;
  for (int l = 0; l <= L; ++l) out.push_back(CVector::Zero(2 * l + 1));
  for (std::size_t p = 0; p < grid.points.size(); ++p) {
    const cplx t = field(grid.points[p]) * grid.weights[p];
    for (int l = 0; l <= L; ++l)
      out[l] += t * eval_s2_degree(l, grid.points[p].theta, grid.points[p].phi).conjugate();
  }
  return out;
}

CoefficientVector analyze_s2(const S2Field& field, std::shared_ptr<const SelfConjBasis> basis,
                             int grid_degree) {
  require(basis != nullptr, "coefficient vector needs a basis");
  require(basis->tag().space == Space::S2, "quadrature analysis is defined for S2 bases only");
  if (grid_degree < 0) grid_degree = basis->tag().ell / 2;
  const S2Grid grid = s2_grid(grid_degree);
  CVector a = CVector::Zero(basis->dim());
  for (std::size_t p = 0; p < grid.points.size(); ++p)
    a += field(grid.points[p]) * grid.weights[p] * basis_functions(*basis, grid.points[p]).conjugate();
  return CoefficientVector(std::move(basis), std::move(a));
}

}  // namespace invfield
