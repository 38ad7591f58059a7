#include <numbers>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "invfield/group.hpp"
#include "invfield/irrep.hpp"

using namespace invfield;

TEST_CASE("su2 construction renormalizes and rejects zero") {
  const SU2Element g(3.0, cplx(0.0, 4.0));
  CHECK(std::abs(g.a() - 0.6) < 1e-15);
  CHECK(std::abs(g.b() - cplx(0.0, 0.8)) < 1e-15);
  CHECK(std::abs(std::norm(g.a()) + std::norm(g.b()) - 1.0) < 1e-14);

  const SU2Element e(1.0, 0.0);
  CHECK(max_abs_diff(e, SU2Element::identity()) == 0.0);
  const SU2Element edge(0.0, 1.0);
  CHECK(edge.a() == cplx(0.0));
  CHECK_THROWS_WITH_AS(SU2Element(0.0, 0.0), "degenerate group element", InvalidArgument);
}

TEST_CASE("composition matches the 2x2 matrix product") {
  RngStream rng(11, 0);
  for (int t = 0; t < 200; ++t) {
    const SU2Element g = haar_sample(rng), h = haar_sample(rng), k = haar_sample(rng);
    const Eigen::Matrix2cd prod = g.matrix() * h.matrix();
    CHECK((compose(g, h).matrix() - prod).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(compose(g, h).matrix().determinant() - 1.0) < 1e-13);
    CHECK(max_abs_diff(compose(compose(g, h), k), compose(g, compose(h, k))) < 1e-14);
    CHECK(max_abs_diff(compose(g, inverse(g)), SU2Element::identity()) < 1e-14);
    CHECK(max_abs_diff(inverse(inverse(g)), g) < 1e-14);
    CHECK(max_abs_diff(compose(SU2Element::identity(), g), g) < 1e-15);
  }
}

TEST_CASE("inverse conjugates a and negates b") {
  const SU2Element g(cplx(0.3, 0.4), cplx(-0.5, 0.1));
  const SU2Element gi = inverse(g);
  CHECK(std::abs(gi.a() - std::conj(g.a())) < 1e-16);
  CHECK(std::abs(gi.b() + g.b()) < 1e-16);
  CHECK((gi.matrix() - g.matrix().inverse()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("torus elements") {
  CHECK(max_abs_diff(torus_element(0.0), SU2Element::identity()) == 0.0);
  CHECK(max_abs_diff(torus_element(std::numbers::pi), SU2Element(-1.0, 0.0)) < 1e-15);
  CHECK(max_abs_diff(torus_element(std::numbers::pi / 2), SU2Element(cplx(0, 1), 0.0)) < 1e-15);
  CHECK(max_abs_diff(compose(torus_element(0.4), torus_element(1.1)), torus_element(1.5)) < 1e-15);
}

TEST_CASE("rotation covering map") {
  RngStream rng(5, 1);
  for (int t = 0; t < 50; ++t) {
    const SU2Element g = haar_sample(rng), h = haar_sample(rng);
    const Eigen::Matrix3d r = rotation_matrix(g);
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-13);
    CHECK((rotation_matrix(compose(g, h)) - r * rotation_matrix(h)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((rotation_matrix(-g) - r).cwiseAbs().maxCoeff() < 1e-14);
  }
  // t_theta is the rotation by -2 theta about z.
  const double th = 0.3;
  Eigen::Matrix3d rz;
  rz << std::cos(-2 * th), -std::sin(-2 * th), 0, std::sin(-2 * th), std::cos(-2 * th), 0, 0, 0, 1;
  CHECK((rotation_matrix(torus_element(th)) - rz).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("euler angles lift the zyz rotation") {
  auto rz = [](double a) {
    Eigen::Matrix3d m;
    m << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
    return m;
  };
  auto ry = [](double b) {
    Eigen::Matrix3d m;
    m << std::cos(b), 0, std::sin(b), 0, 1, 0, -std::sin(b), 0, std::cos(b);
    return m;
  };
  const double a = 0.7, b = 1.2, c = -2.1;
  const Eigen::Matrix3d expect = rz(a) * ry(b) * rz(c);
  CHECK((rotation_matrix(from_euler_zyz(a, b, c)) - expect).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("haar samples satisfy Schur orthogonality") {
  RngStream rng(2024, 3);
  const int n = 100000;
  std::vector<double> re, im, sq;
  re.reserve(n);
  for (int t = 0; t < n; ++t) {
    const cplx c = matrix_coeff(2, haar_sample(rng), 2, 1);
    re.push_back(c.real());
    im.push_back(c.imag());
    sq.push_back(std::norm(c));
  }
  const auto mre = testing::moments(re), mim = testing::moments(im), msq = testing::moments(sq);
  CHECK(std::abs(mre.mean) < 3 * mre.se);
  CHECK(std::abs(mim.mean) < 3 * mim.se);
  CHECK(std::abs(msq.mean - 1.0 / 3.0) < 3 * msq.se);
}

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  bool differ = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    differ = differ || x != c.next_u64();
  }
  CHECK(differ);
  RngStream p(1, 0);
  CHECK(p.split(3).next_u64() == p.split(3).next_u64());
  CHECK(p.split(3).next_u64() != p.split(4).next_u64());
  // uniform in [0, 1)
  RngStream u(9, 9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
  }
}

TEST_CASE("rng output is pinned across platforms") {
  RngStream a(0, 0);
  CHECK(a.next_u64() == 8995930638883913910ULL);
  RngStream b(0, 0);
  CHECK(b.split(5).next_u64() == 5261968421382804031ULL);
  RngStream n(3, 4);
  std::vector<double> xs;
  for (int i = 0; i < 20000; ++i) xs.push_back(n.normal());
  const auto m = testing::moments(xs);
  CHECK(std::abs(m.mean) < 4 * m.se);
}

TEST_CASE("so4 equality ignores the simultaneous sign") {
  RngStream rng(8, 8);
  const SO4Element g = haar_sample_so4(rng);
  const SO4Element flipped{-g.g1, -g.g2};
  CHECK(equivalent(g, flipped));
  CHECK_FALSE(equivalent(g, SO4Element{-g.g1, g.g2}));
  const SO4Element h = haar_sample_so4(rng);
  CHECK(equivalent(compose(g, inverse(g)), SO4Element::identity(), 1e-14));
  const GroupElement gg = g, hh = h;
  CHECK(equivalent(std::get<SO4Element>(compose(gg, hh)), compose(g, h)));
  CHECK_THROWS_AS(compose(gg, GroupElement(SU2Element::identity())), InvalidArgument);
}
