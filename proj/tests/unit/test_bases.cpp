#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "invfield/bases.hpp"
#include "invfield/fields.hpp"

using namespace invfield;

namespace {

const std::vector<SpaceTag> real_tags{{Space::S2, 2}, {Space::S2, 4}, {Space::S2, 6}, {Space::S2, 8},
                                      {Space::SU2, 2}, {Space::SU2, 4}, {Space::S3, 1}, {Space::S3, 2}};

Point random_point(const SpaceTag& tag, RngStream& rng) {
  if (tag.space == Space::S2)
    return S2Point{std::acos(2 * rng.uniform() - 1), 2 * std::numbers::pi * rng.uniform()};
  return haar_sample(rng);
}

// g^{-1} x for the left action on each space.
Point act_inverse(const GroupElement& g, const Point& x) {
  if (const auto* p = std::get_if<S2Point>(&x)) {
    const Eigen::Vector3d v = rotation_matrix(inverse(std::get<SU2Element>(g))) * p->cartesian();
    return S2Point::from_cartesian(v);
  }
  const SU2Element& y = std::get<SU2Element>(x);
  if (const auto* h = std::get_if<SU2Element>(&g)) return compose(inverse(*h), y);
  const SO4Element& h = std::get<SO4Element>(g);
  return compose(compose(inverse(h.g1), y), h.g2);
}

}  // namespace

TEST_CASE("dimensions and labels") {
  CHECK(SpaceTag{Space::S2, 6}.dim() == 7);
  CHECK(SpaceTag{Space::S3, 2}.dim() == 9);
  CHECK(SpaceTag{Space::SU2, 3}.dim() == 4);
  CHECK(SpaceTag{Space::S3, 1}.real_type());
  CHECK_FALSE(SpaceTag{Space::SU2, 1}.real_type());
  CHECK(parse_space("su2") == Space::SU2);
  CHECK(to_string(Space::S3) == "s3");
  CHECK_THROWS_AS(parse_space("s4"), InvalidArgument);

  const SelfConjBasis b = torus_adapted_selfconj_basis({Space::S2, 4});
  const std::vector<int> labels{2, 1, 0, -1, -2};
  for (int i = 0; i < 5; ++i) {
    CHECK(b.label_of(i) == labels[i]);
    CHECK(b.index_of(labels[i]) == i);
    CHECK(b.label_of(b.partner(i)) == -labels[i]);
  }
  const SelfConjBasis q = torus_adapted_selfconj_basis({Space::SU2, 3});
  CHECK_FALSE(q.has_zero());
  CHECK(q.label_of(2) == -1);
  CHECK_THROWS_AS(q.index_of(0), InvalidArgument);
}

TEST_CASE("invalid modules are rejected") {
  CHECK_THROWS_WITH_AS(torus_adapted_selfconj_basis({Space::S2, 3}),
                       "quaternionic module has no self-conjugated basis", InvalidArgument);
  CHECK_THROWS_AS(torus_adapted_selfconj_basis({Space::SU2, 0}), InvalidArgument);
  CMatrix bad = CMatrix::Identity(3, 3);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(SelfConjBasis({Space::S2, 2}, bad), InvalidArgument);
}

TEST_CASE("realifying matrix") {
  const CMatrix A = realify_matrix(3);
  const double r = 1 / std::sqrt(2.0);
  const cplx i(0, 1);
  CMatrix expected(3, 3);
  expected << r, 0, r, 0, 1, 0, -i * r, 0, i * r;
  CHECK(testing::max_abs(A - expected) < 1e-15);
  CVector z(3);
  z << cplx(1, 1), 0, cplx(1, -1);
  const CVector x = A * z;
  CHECK(std::abs(x(0) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(x(1)) < 1e-15);
  CHECK(std::abs(x(2) - std::sqrt(2.0)) < 1e-15);
  for (int d = 2; d <= 9; ++d) CHECK(unitarity_defect(realify_matrix(d)) < 1e-15);
}

TEST_CASE("torus-adapted bases are self-conjugated") {
  for (const auto& tag : real_tags) {
    const SelfConjBasis b = torus_adapted_selfconj_basis(tag);
    CHECK(b.dim() == tag.dim());
    CHECK(unitarity_defect(b.change()) < 1e-13);
    CHECK(pairing_defect(b) < 1e-13);
  }
  for (int ell : {1, 3, 5}) {
    const SelfConjBasis q = torus_adapted_selfconj_basis({Space::SU2, ell});
    CHECK(pairing_defect(q) < 1e-13);
  }
}

TEST_CASE("torus acts diagonally with the recorded weights") {
  for (const auto& tag : real_tags) {
    const SelfConjBasis b = torus_adapted_selfconj_basis(tag);
    REQUIRE(b.torus_adapted());
    const double t1 = 0.37, t2 = -1.21;
    const GroupElement t = tag.space == Space::S3 ? GroupElement(SO4Element{torus_element(t1), torus_element(t2)})
                                                  : GroupElement(torus_element(t1));
    const CMatrix D = basis_rep_matrix(b, t);
    CHECK(testing::max_abs(D - CMatrix(D.diagonal().asDiagonal())) < 1e-13);
    for (int i = 0; i < b.dim(); ++i) {
      const auto w = b.torus_weights()[i];
      const double angle = w[0] * t1 + (tag.space == Space::S3 ? w[1] * t2 : 0.0);
      // The characters come in conjugate pairs, and match e^{+- i angle}
      // with one sign for the whole basis.
      const cplx expected = std::polar(1.0, angle);
      CHECK(std::min(std::abs(D(i, i) - expected), std::abs(D(i, i) - std::conj(expected))) < 1e-13);
      CHECK(std::abs(D(b.partner(i), b.partner(i)) - std::conj(D(i, i))) < 1e-13);
      const auto wp = b.torus_weights()[b.partner(i)];
      CHECK(wp[0] == -w[0]);
      CHECK(wp[1] == -w[1]);
    }
  }
}

TEST_CASE("realified representation is a rotation") {
  RngStream rng(5, 1);
  for (const auto& tag : real_tags) {
    const SelfConjBasis ref = torus_adapted_selfconj_basis(tag);
    const SelfConjBasis b = random_selfconj_basis(ref, rng);
    for (int t = 0; t < 3; ++t) {
      const CMatrix R = realified_rep(b, haar_sample_for(tag, rng));
      CHECK(R.imag().cwiseAbs().maxCoeff() < 1e-12);
      const RMatrix Rr = R.real();
      CHECK((Rr.transpose() * Rr - RMatrix::Identity(b.dim(), b.dim())).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(Rr.determinant() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("random and translated bases stay self-conjugated") {
  RngStream rng(8, 0);
  for (const auto& tag : real_tags) {
    const SelfConjBasis ref = torus_adapted_selfconj_basis(tag);
    const SelfConjBasis r = random_selfconj_basis(ref, rng);
    CHECK(unitarity_defect(r.change()) < 1e-12);
    CHECK(pairing_defect(r) < 1e-12);
    CHECK_FALSE(r.torus_adapted());
    const GroupElement g0 = haar_sample_for(tag, rng);
    const SelfConjBasis w = translated_basis(ref, g0);
    CHECK(pairing_defect(w) < 1e-12);
    // D_w(g) = D_v(g0^{-1} g g0).
    const GroupElement g = haar_sample_for(tag, rng);
    const CMatrix lhs = basis_rep_matrix(w, g);
    const CMatrix rhs = basis_rep_matrix(ref, compose(compose(inverse(g0), g), g0));
    CHECK(testing::max_abs(lhs - rhs) < 1e-12);
  }
  const SelfConjBasis ref = torus_adapted_selfconj_basis({Space::S2, 4});
  CHECK_THROWS_AS(rotate_selfconj_basis(ref, RMatrix::Identity(4, 4)), InvalidArgument);
  RMatrix notorth = RMatrix::Identity(5, 5);
  notorth(0, 1) = 0.5;
  CHECK_THROWS_AS(rotate_selfconj_basis(ref, notorth), InvalidArgument);
}

TEST_CASE("group mismatch is reported") {
  const SelfConjBasis b = torus_adapted_selfconj_basis({Space::S2, 2});
  CHECK_THROWS_WITH_AS(basis_rep_matrix(b, SO4Element{}),
                       "group element does not act on this space (expected SU(2))", InvalidArgument);
  const SelfConjBasis c = torus_adapted_selfconj_basis({Space::S3, 1});
  CHECK_THROWS_WITH_AS(basis_rep_matrix(c, SU2Element{}),
                       "group element does not act on this space (expected SO(4))", InvalidArgument);
}

TEST_CASE("basis functions transform by the representation") {
  RngStream rng(12, 4);
  for (const auto& tag : real_tags) {
    const SelfConjBasis b = random_selfconj_basis(torus_adapted_selfconj_basis(tag), rng);
    for (int t = 0; t < 3; ++t) {
      const GroupElement g = haar_sample_for(tag, rng);
      const Point x = random_point(tag, rng);
      const CVector moved = basis_functions(b, act_inverse(g, x));
      const CVector expected = basis_rep_matrix(b, g).transpose() * basis_functions(b, x);
      CHECK(testing::max_abs(moved - expected) < 1e-11);
    }
  }
}

TEST_CASE("conjugate partners are conjugate functions") {
  RngStream rng(13, 4);
  for (const auto& tag : real_tags) {
    const SelfConjBasis b = random_selfconj_basis(torus_adapted_selfconj_basis(tag), rng);
    for (int t = 0; t < 5; ++t) {
      const CVector f = basis_functions(b, random_point(tag, rng));
      for (int i = 0; i < b.dim(); ++i) CHECK(std::abs(f(b.partner(i)) - std::conj(f(i))) < 1e-12);
    }
  }
  CHECK_THROWS_AS(basis_functions(torus_adapted_selfconj_basis({Space::SU2, 1}), SU2Element{}),
                  InvalidArgument);
  CHECK_THROWS_AS(basis_functions(torus_adapted_selfconj_basis({Space::S2, 2}), SU2Element{}),
                  InvalidArgument);
}

TEST_CASE("S2 basis functions through the harmonic map") {
  RngStream rng(14, 0);
  for (int ell : {2, 4, 6, 10}) {
    const SelfConjBasis b = random_selfconj_basis(torus_adapted_selfconj_basis({Space::S2, ell}), rng);
    const CMatrix M = s2_harmonic_map(b);
    CHECK(unitarity_defect(M) < 1e-12);
    const int L = ell / 2;
    for (int t = 0; t < 5; ++t) {
      const S2Point p = std::get<S2Point>(random_point(b.tag(), rng));
      const CVector Y = eval_s2_degree(L, p.theta, p.phi);
      CHECK(testing::max_abs(basis_functions(b, p) - M.transpose() * Y) < 1e-12);
    }
    // Orthonormality by exact quadrature.
    const S2Grid grid = s2_grid(L);
    CMatrix gram = CMatrix::Zero(b.dim(), b.dim());
    for (std::size_t k = 0; k < grid.points.size(); ++k) {
      const CVector f = basis_functions(b, grid.points[k]);
      gram += grid.weights[k] * f.conjugate() * f.transpose();
    }
    CHECK(testing::identity_defect(gram) < 1e-12);
  }
  // Torus basis, ell = 2: v_1 = -i Y_1, v_0 = Y_0, v_-1 = -i Y_-1.
  const CMatrix M2 = s2_harmonic_map(torus_adapted_selfconj_basis({Space::S2, 2}));
  const cplx i(0, 1);
  CHECK(std::abs(M2(2, 0) + i) < 1e-14);
  CHECK(std::abs(M2(1, 1) - 1.0) < 1e-14);
  CHECK(std::abs(M2(0, 2) + i) < 1e-14);
}

TEST_CASE("three-sphere basis functions are orthonormal") {
  RngStream rng(15, 0);
  const SelfConjBasis b = torus_adapted_selfconj_basis({Space::S3, 1});
  const int n = 40000;
  CMatrix gram = CMatrix::Zero(4, 4);
  for (int t = 0; t < n; ++t) {
    const CVector f = basis_functions(b, haar_sample(rng));
    gram += f.conjugate() * f.transpose();
  }
  gram /= n;
  // Entries of |f_i f_k| are bounded by 2, so 5 / sqrt(n) is a loose bound.
  CHECK(testing::identity_defect(gram) < 5.0 * 2.0 / std::sqrt(double(n)));
}
