#include "invfield/group.hpp"

#include <algorithm>
#include <cmath>

namespace invfield {

SU2Element::SU2Element(cplx a, cplx b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("degenerate group element");
  a_ = a / norm;
  b_ = b / norm;
}

Eigen::Matrix2cd SU2Element::matrix() const {
  Eigen::Matrix2cd m;
  m << a_, b_, -std::conj(b_), std::conj(a_);
  return m;
}

SU2Element compose(const SU2Element& g, const SU2Element& h) {
  // First row of the 2x2 product; the second row follows from the chart.
  return SU2Element(g.a() * h.a() - g.b() * std::conj(h.b()),
                    g.a() * h.b() + g.b() * std::conj(h.a()));
}

SU2Element inverse(const SU2Element& g) { return SU2Element(std::conj(g.a()), -g.b()); }

SU2Element torus_element(double theta) { return SU2Element(std::polar(1.0, theta), 0.0); }

SU2Element haar_sample(RngStream& rng) {
  for (;;) {
    const double x1 = rng.normal(), x2 = rng.normal(), x3 = rng.normal(), x4 = rng.normal();
    if (x1 == 0.0 && x2 == 0.0 && x3 == 0.0 && x4 == 0.0) continue;
    return SU2Element(cplx(x1, x2), cplx(x3, x4));
  }
}

Eigen::Matrix3d rotation_matrix(const SU2Element& g) {
  const cplx I(0.0, 1.0);
  Eigen::Matrix2cd pauli[3];
  pauli[0] << 0.0, 1.0, 1.0, 0.0;
  pauli[1] << 0.0, -I, I, 0.0;
  pauli[2] << 1.0, 0.0, 0.0, -1.0;
  const Eigen::Matrix2cd m = g.matrix();
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (pauli[i] * m * pauli[j] * m.adjoint()).trace().real();
  return r;
}

SU2Element from_euler_zyz(double alpha, double beta, double gamma) {
  const SU2Element ry(std::cos(beta / 2.0), -std::sin(beta / 2.0));
  return compose(compose(torus_element(-alpha / 2.0), ry), torus_element(-gamma / 2.0));
}

double max_abs_diff(const SU2Element& g, const SU2Element& h) {
  return std::max(std::abs(g.a() - h.a()), std::abs(g.b() - h.b()));
}

SO4Element compose(const SO4Element& g, const SO4Element& h) {
  return {compose(g.g1, h.g1), compose(g.g2, h.g2)};
}

SO4Element inverse(const SO4Element& g) { return {inverse(g.g1), inverse(g.g2)}; }

SO4Element haar_sample_so4(RngStream& rng) {
  SU2Element g1 = haar_sample(rng);
  SU2Element g2 = haar_sample(rng);
  return {g1, g2};
}

bool equivalent(const SO4Element& g, const SO4Element& h, double tol) {
  const double same = std::max(max_abs_diff(g.g1, h.g1), max_abs_diff(g.g2, h.g2));
  const double flipped = std::max(max_abs_diff(g.g1, -h.g1), max_abs_diff(g.g2, -h.g2));
  return std::min(same, flipped) <= tol;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.index() != h.index()) throw InvalidArgument("cannot compose elements of different groups");
  if (const auto* su2 = std::get_if<SU2Element>(&g)) return compose(*su2, std::get<SU2Element>(h));
  return compose(std::get<SO4Element>(g), std::get<SO4Element>(h));
}

GroupElement inverse(const GroupElement& g) {
  return std::visit([](const auto& x) -> GroupElement { return inverse(x); }, g);
}

}  // namespace invfield
