#include "invfield/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invfield/irrep.hpp"

namespace invfield {

namespace {

using Weight = std::array<int, 2>;

void validate(const SpaceTag& tag) {
  require(tag.ell >= 0, "degree must be nonnegative");
  if (tag.space == Space::S2) {
    require(tag.ell % 2 == 0, "quaternionic module has no self-conjugated basis");
    require(tag.ell >= 2, "module dimension must be at least 2");
  } else {
    require(tag.ell >= 1, "module dimension must be at least 2");
  }
}

// gamma_0 for the zero label of H_ell, ell = 2m.
cplx zero_phase(int m) { return m % 2 == 0 ? cplx(1.0, 0.0) : cplx(0.0, 1.0); }

double sign(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

// Reference functions f_r(x) of the e-coordinates, evaluated at one point.
CVector reference_functions(const SpaceTag& tag, const Point& point) {
  const int ell = tag.ell;
  const int n = ell + 1;
  if (tag.space == Space::S3) {
    const auto* x = std::get_if<SU2Element>(&point);
    require(x != nullptr, "S3 functions are evaluated at SU2 elements");
    const CMatrix D = rep_matrix(ell, *x);
    const double norm = std::sqrt(static_cast<double>(n));
    CVector f(n * n);
    // sqrt(ell+1) <e_s, x J e_t>, J e_t = (-1)^t e_{ell-t}
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) f(s * n + t) = norm * sign(t) * std::conj(D(s, ell - t));
    return f;
  }

  SU2Element x;
  double norm = std::sqrt(static_cast<double>(n));
  if (tag.space == Space::S2) {
    const auto* p = std::get_if<S2Point>(&point);
    require(p != nullptr, "S2 functions are evaluated at S2 points");
    x = s2_section(*p);
    norm /= std::sqrt(4.0 * std::numbers::pi);
  } else {
    require(ell % 2 == 0, "quaternionic module has no function realization");
    const auto* g = std::get_if<SU2Element>(&point);
    require(g != nullptr, "SU2 functions are evaluated at SU2 elements");
    x = *g;
  }
  const int m = ell / 2;
  const cplx g0 = std::conj(zero_phase(m));
  const CMatrix D = rep_matrix(ell, x);
  CVector f(n);
  // sqrt(ell+1) <e_s, x gamma_0 e_m>
  for (int s = 0; s < n; ++s) f(s) = norm * g0 * std::conj(D(s, m));
  return f;
}

}  // namespace

int SpaceTag::dim() const {
  return space == Space::S3 ? (ell + 1) * (ell + 1) : ell + 1;
}

bool SpaceTag::real_type() const { return space == Space::S3 || ell % 2 == 0; }

std::string to_string(Space space) {
  switch (space) {
    case Space::S2: return "s2";
    case Space::S3: return "s3";
    case Space::SU2: return "su2";
  }
  return "?";
}

Space parse_space(const std::string& name) {
  if (name == "s2") return Space::S2;
  if (name == "s3") return Space::S3;
  if (name == "su2") return Space::SU2;
  throw InvalidArgument("unknown space '" + name + "' (expected s2, s3 or su2)");
}

SelfConjBasis::SelfConjBasis(SpaceTag tag, CMatrix change, std::vector<Weight> torus_weights)
    : tag_(tag), change_(std::move(change)), torus_weights_(std::move(torus_weights)) {
  validate(tag_);
  require(change_.rows() == tag_.dim() && change_.cols() == tag_.dim(),
          "basis change has the wrong size for the module");
  require(unitarity_defect(change_) < 1e-10, "basis change is not unitary");
  require(torus_weights_.empty() || static_cast<int>(torus_weights_.size()) == dim(),
          "torus weights do not match the dimension");
}

int SelfConjBasis::index_of(int label) const {
  const int h = half();
  require(std::abs(label) <= h && (label != 0 || has_zero()), "pairing label out of range");
  if (label > 0) return h - label;
  if (label == 0) return h;
  return dim() - 1 - h - label;
}

int SelfConjBasis::label_of(int index) const {
  require(index >= 0 && index < dim(), "basis index out of range");
  const int h = half();
  if (index < h) return h - index;
  if (has_zero() && index == h) return 0;
  return -(index - (dim() - 1 - h));
}

CMatrix reference_rep(const SpaceTag& tag, const GroupElement& g) {
  if (tag.space == Space::S3) {
    const auto* x = std::get_if<SO4Element>(&g);
    require(x != nullptr, "group element does not act on this space (expected SO(4))");
    return tensor_rep_matrix(tag.ell, *x);
  }
  const auto* x = std::get_if<SU2Element>(&g);
  require(x != nullptr, "group element does not act on this space (expected SU(2))");
  return rep_matrix(tag.ell, *x);
}

CMatrix module_conjugation(const SpaceTag& tag) {
  const CMatrix k = conjugation_matrix(tag.ell);
  if (tag.space != Space::S3) return k;
  const int n = tag.ell + 1;
  CMatrix out = CMatrix::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      out(s * n + t, (tag.ell - s) * n + (tag.ell - t)) = k(s, tag.ell - s) * k(t, tag.ell - t);
  return out;
}

CMatrix realify_matrix(int dim) {
  require(dim >= 2, "realifying matrix needs dimension at least 2");
  const int h = dim / 2;
  const double r = 1.0 / std::sqrt(2.0);
  const cplx ri = cplx(0.0, -r);  // 1 / (i sqrt2)
  CMatrix A = CMatrix::Zero(dim, dim);
  for (int row = 0; row < h; ++row) {
    A(row, row) = r;
    A(row, dim - 1 - row) = r;
  }
  if (dim % 2 == 1) A(h, h) = 1.0;
  for (int k = 1; k <= h; ++k) {
    const int row = dim - h + k - 1;
    A(row, h - k) = ri;
    A(row, dim - 1 - h + k) = -ri;
  }
  return A;
}

SelfConjBasis torus_adapted_selfconj_basis(const SpaceTag& tag) {
  validate(tag);
  const int ell = tag.ell;
  const int d = tag.dim();
  const int h = d / 2;
  CMatrix change = CMatrix::Zero(d, d);
  std::vector<Weight> weights(d);

  if (tag.space == Space::S3) {
    const int n = ell + 1;
    std::vector<Weight> pos;  // (s1, s2) with positive doubled weight
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2) {
        const int q1 = 2 * s1 - ell;
        const int q2 = 2 * s2 - ell;
        if (q1 > 0 || (q1 == 0 && q2 > 0)) pos.push_back({s1, s2});
      }
    std::sort(pos.begin(), pos.end(), [](const Weight& x, const Weight& y) { return x > y; });
    for (int i = 0; i < h; ++i) {
      const auto [s1, s2] = pos[i];
      change(s1 * n + s2, i) = 1.0;
      weights[i] = {2 * s1 - ell, 2 * s2 - ell};
      const int j = d - 1 - i;
      change((ell - s1) * n + (ell - s2), j) = sign(s1 + s2);
      weights[j] = {ell - 2 * s1, ell - 2 * s2};
    }
    if (d % 2 == 1) {
      change((ell / 2) * n + ell / 2, h) = 1.0;
      weights[h] = {0, 0};
    }
    return SelfConjBasis(tag, std::move(change), std::move(weights));
  }

  if (ell % 2 == 0) {
    const int m = ell / 2;
    for (int k = 1; k <= h; ++k) {
      change(m + k, h - k) = 1.0;
      weights[h - k] = {2 * k, 0};
      change(m - k, d - 1 - h + k) = sign(m + k);
      weights[d - 1 - h + k] = {-2 * k, 0};
    }
    change(m, h) = zero_phase(m);
    weights[h] = {0, 0};
    return SelfConjBasis(tag, std::move(change), std::move(weights));
  }

  // Odd degree on SU(2): J-paired, J v_k = v_-k and J v_-k = -v_k.
  for (int k = 1; k <= h; ++k) {
    const int s = (ell - 1) / 2 + k;
    change(s, h - k) = 1.0;
    weights[h - k] = {2 * s - ell, 0};
    change(ell - s, d - h + k - 1) = sign(s);
    weights[d - h + k - 1] = {ell - 2 * s, 0};
  }
  return SelfConjBasis(tag, std::move(change), std::move(weights));
}

SelfConjBasis rotate_selfconj_basis(const SelfConjBasis& reference, const RMatrix& orthogonal) {
  require(reference.tag().real_type(), "only modules of real type carry self-conjugated bases");
  const int d = reference.dim();
  require(orthogonal.rows() == d && orthogonal.cols() == d, "orthogonal matrix has the wrong size");
  require((orthogonal * orthogonal.transpose() - RMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10,
          "matrix is not orthogonal");
  const CMatrix A = realify_matrix(d);
  const CMatrix U = A.adjoint() * orthogonal.cast<cplx>() * A;
  return SelfConjBasis(reference.tag(), reference.change() * U);
}

SelfConjBasis random_selfconj_basis(const SelfConjBasis& reference, RngStream& rng) {
  const int d = reference.dim();
  RMatrix gauss(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) gauss(i, j) = rng.normal();
  Eigen::HouseholderQR<RMatrix> qr(gauss);
  RMatrix Q = qr.householderQ();
  const RMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (R(j, j) < 0) Q.col(j) *= -1.0;
  return rotate_selfconj_basis(reference, Q);
}

SelfConjBasis translated_basis(const SelfConjBasis& reference, const GroupElement& g0) {
  return SelfConjBasis(reference.tag(), reference_rep(reference.tag(), g0) * reference.change());
}

CMatrix basis_rep_matrix(const SelfConjBasis& basis, const GroupElement& g) {
  return basis.change().adjoint() * reference_rep(basis.tag(), g) * basis.change();
}

CMatrix realified_rep(const SelfConjBasis& basis, const GroupElement& g) {
  const CMatrix A = realify_matrix(basis.dim());
  return A * basis_rep_matrix(basis, g) * A.adjoint();
}

double pairing_defect(const SelfConjBasis& basis) {
  const CMatrix jv = module_conjugation(basis.tag()) * basis.change().conjugate();
  const bool real = basis.tag().real_type();
  double worst = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    const double s = (!real && basis.label_of(i) < 0) ? -1.0 : 1.0;
    worst = std::max(worst, (jv.col(i) - s * basis.change().col(basis.partner(i))).norm());
  }
  return worst;
}

double unitarity_defect(const CMatrix& m) {
  return (m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

GroupElement haar_sample_for(const SpaceTag& tag, RngStream& rng) {
  if (tag.space == Space::S3) return haar_sample_so4(rng);
  return haar_sample(rng);
}

GroupElement identity_for(const SpaceTag& tag) {
  if (tag.space == Space::S3) return SO4Element::identity();
  return SU2Element::identity();
}

cplx basis_function(const SelfConjBasis& basis, int index, const Point& point) {
  require(index >= 0 && index < basis.dim(), "basis index out of range");
  return basis.change().col(index).transpose() * reference_functions(basis.tag(), point);
}

CVector basis_functions(const SelfConjBasis& basis, const Point& point) {
  return basis.change().transpose() * reference_functions(basis.tag(), point);
}

CMatrix s2_harmonic_map(const SelfConjBasis& basis) {
  require(basis.tag().space == Space::S2, "harmonic map is defined for S2 bases only");
  const int L = basis.tag().ell / 2;
  // The reference function of e_{L+k} is conj(gamma_0) Y_{L,k}.
  return std::conj(zero_phase(L)) * basis.change();
}

}  // namespace invfield
